#include "orbitres/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace orbitres {

namespace {

std::string join_parts(const std::vector<int>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out;
}

// Expands "3,1^5" into {3,1,1,1,1,1}. Shared by Partition and Composition.
std::vector<int> parse_parts(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_spaces();
    std::size_t start = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == start)
      throw std::invalid_argument(std::string("expected ") + what + " at offset " +
                                  std::to_string(start));
    long value = std::stol(std::string(text.substr(start, pos - start)));
    if (value < 1 || value > 1'000'000)
      throw std::invalid_argument(std::string(what) + " out of range at offset " +
                                  std::to_string(start));
    return static_cast<int>(value);
  };

  skip_spaces();
  if (pos == text.size()) return parts;
  while (true) {
    int value = read_int("part");
    int count = 1;
    skip_spaces();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      count = read_int("exponent");
    }
    parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    skip_spaces();
    if (pos == text.size()) break;
    if (text[pos] != ',')
      throw std::invalid_argument("expected ',' at offset " + std::to_string(pos));
    ++pos;
  }
  return parts;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > UINT64_MAX / a) throw std::overflow_error("ordering count exceeds 64 bits");
  return a * b;
}

std::uint64_t checked_div(std::uint64_t a, std::uint64_t b) { return a / b; }

// m! / prod(mult_v!) computed without intermediate overflow beyond the
// final value: multiply and divide incrementally via binomials.
std::uint64_t multiset_permutations(const std::vector<int>& parts) {
  std::map<int, std::uint64_t> mult;
  for (int v : parts) ++mult[v];
  std::uint64_t total = 0;
  std::uint64_t result = 1;
  for (auto& [value, count] : mult) {
    (void)value;
    // choose positions for this value among the remaining slots:
    // result *= C(total + count, count)
    for (std::uint64_t i = 1; i <= count; ++i) {
      result = checked_mul(result, total + i);
      result = checked_div(result, i);
    }
    total += count;
  }
  return result;
}

// Palindromic orderings: determined by one half plus an optional middle
// element, which must be the unique value of odd multiplicity.
std::uint64_t palindrome_count(const std::vector<int>& parts) {
  std::map<int, std::uint64_t> mult;
  for (int v : parts) ++mult[v];
  int odd = 0;
  std::vector<int> half;
  for (auto& [value, count] : mult) {
    if (count % 2 == 1) ++odd;
    half.insert(half.end(), static_cast<std::size_t>(count / 2), value);
  }
  if (odd > 1) return 0;
  if (parts.size() % 2 == 0 && odd != 0) return 0;
  return multiset_permutations(half);
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) { return Partition(parse_parts(text)); }

std::string Partition::to_string() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  sum_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::parse(std::string_view text) { return Composition(parse_parts(text)); }

Composition Composition::reversed() const {
  std::vector<int> rev(parts_.rbegin(), parts_.rend());
  return Composition(std::move(rev));
}

Partition Composition::sorted() const {
  std::vector<int> desc = parts_;
  std::sort(desc.begin(), desc.end(), std::greater<int>());
  return Partition(std::move(desc));
}

bool Composition::is_palindrome() const {
  return std::equal(parts_.begin(), parts_.end(), parts_.rbegin());
}

std::string Composition::to_string() const { return join_parts(parts_); }

Partition dual(const Partition& d) {
  std::vector<int> s;
  if (!d.empty()) {
    s.reserve(static_cast<std::size_t>(d.at(0)));
    for (int j = 1; j <= d.at(0); ++j) {
      int count = 0;
      for (int part : d.parts())
        if (part >= j) ++count;
      s.push_back(count);
    }
  }
  return Partition(std::move(s));
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.sum() != q.sum()) throw std::domain_error("incomparable sizes");
  const std::size_t len = std::max(p.size(), q.size());
  long sp = 0, sq = 0;
  for (std::size_t j = 0; j < len; ++j) {
    sp += j < p.size() ? p.at(j) : 0;
    sq += j < q.size() ? q.at(j) : 0;
    if (sp < sq) return false;
  }
  return true;
}

std::vector<Composition> orderings(const Partition& s) {
  std::vector<int> parts = s.parts();
  std::sort(parts.begin(), parts.end());
  std::vector<Composition> out;
  if (parts.empty()) {
    out.emplace_back(Composition());
    return out;
  }
  do {
    out.emplace_back(Composition(parts));
  } while (std::next_permutation(parts.begin(), parts.end()));
  return out;
}

std::uint64_t ordering_count(const Partition& s) { return multiset_permutations(s.parts()); }

std::uint64_t reversal_class_count(const Partition& s) {
  const std::uint64_t total = multiset_permutations(s.parts());
  const std::uint64_t pal = palindrome_count(s.parts());
  return (total + pal) / 2;
}

std::vector<std::vector<Composition>> reversal_classes(const std::vector<Composition>& cs) {
  if (!cs.empty()) {
    const Partition multiset = cs.front().sorted();
    std::set<Composition> seen;
    for (const Composition& c : cs) {
      if (c.sorted() != multiset)
        throw std::invalid_argument("compositions do not share one multiset of parts");
      if (!seen.insert(c).second) throw std::invalid_argument("duplicate composition");
    }
  }
  std::vector<std::vector<Composition>> classes;
  std::vector<bool> used(cs.size(), false);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    std::vector<Composition> cls{cs[i]};
    const Composition rev = cs[i].reversed();
    if (rev != cs[i]) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        if (!used[j] && cs[j] == rev) {
          used[j] = true;
          cls.push_back(cs[j]);
          break;
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(Partition(current));
      return;
    }
    for (int next = std::min(remaining, max_part); next >= 1; --next) {
      current.push_back(next);
      self(self, remaining - next, next);
      current.pop_back();
    }
  };
  recurse(recurse, n, n == 0 ? 1 : n);
  return out;
}

}  // namespace orbitres
