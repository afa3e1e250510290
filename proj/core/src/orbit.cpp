#include "orbitres/orbit.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace orbitres {

namespace {

[[noreturn]] void parse_fail(std::size_t pos, const std::string& what) {
  throw std::invalid_argument("descriptor parse error at position " + std::to_string(pos) + ": " +
                              what);
}

struct A1Entry {
  LieFamily family;
  int size;
  std::vector<int> parts;
};

// Orbits certified to have a single A1 degeneration in codimension 2.
const std::vector<A1Entry>& a1_entries() {
  static const std::vector<A1Entry> entries = {
      {LieFamily::B, 5, {3, 1, 1}},
      {LieFamily::C, 4, {2, 2}},
      {LieFamily::D, 8, {3, 3, 1, 1}},
      {LieFamily::D, 8, {3, 1, 1, 1, 1, 1}},
      {LieFamily::D, 8, {2, 2, 2, 2}},
  };
  return entries;
}

}  // namespace

char family_letter(LieFamily f) {
  switch (f) {
    case LieFamily::A: return 'A';
    case LieFamily::B: return 'B';
    case LieFamily::C: return 'C';
    case LieFamily::D: return 'D';
  }
  return '?';
}

OrbitDescriptor OrbitDescriptor::parse(std::string_view text) {
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      parse_fail(pos, std::string("expected '") + c + "'");
    ++pos;
  };

  if (text.size() < 2) parse_fail(0, "expected algebra name");
  const std::string_view name = text.substr(0, 2);
  pos = 2;
  expect('(');
  std::size_t digits_start = pos;
  while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
  if (pos == digits_start) parse_fail(pos, "expected matrix size");
  const int size = std::stoi(std::string(text.substr(digits_start, pos - digits_start)));
  expect(')');
  expect(':');
  expect('[');
  std::size_t bracket_start = pos;
  std::size_t bracket_end = text.find(']', pos);
  if (bracket_end == std::string_view::npos) parse_fail(text.size(), "expected ']'");
  Partition partition;
  try {
    partition = Partition::parse(text.substr(bracket_start, bracket_end - bracket_start));
  } catch (const std::invalid_argument& e) {
    parse_fail(bracket_start, e.what());
  }
  pos = bracket_end + 1;
  if (pos != text.size()) parse_fail(pos, "trailing characters");

  LieFamily family;
  if (name == "sl") {
    family = LieFamily::A;
  } else if (name == "so") {
    family = size % 2 == 1 ? LieFamily::B : LieFamily::D;
  } else if (name == "sp") {
    family = LieFamily::C;
  } else {
    parse_fail(0, "unknown algebra name '" + std::string(name) + "'");
  }

  OrbitDescriptor o{family, size, std::move(partition)};
  o.validate();
  return o;
}

std::string OrbitDescriptor::to_string() const {
  std::string name;
  switch (family) {
    case LieFamily::A: name = "sl"; break;
    case LieFamily::B:
    case LieFamily::D: name = "so"; break;
    case LieFamily::C: name = "sp"; break;
  }
  return name + "(" + std::to_string(size) + "):[" + partition.to_string() + "]";
}

void OrbitDescriptor::validate() const {
  if (size < 0) throw std::invalid_argument("negative matrix size");
  if (partition.sum() != size)
    throw std::invalid_argument("partition of " + std::to_string(partition.sum()) +
                                " does not match matrix size " + std::to_string(size));
  auto multiplicity_rule = [&](bool even_parts_even_mult) {
    std::map<int, int> mult;
    for (int p : partition.parts()) ++mult[p];
    for (const auto& [value, count] : mult) {
      const bool affected = even_parts_even_mult ? value % 2 == 0 : value % 2 == 1;
      if (affected && count % 2 != 0)
        throw std::invalid_argument(std::string(even_parts_even_mult ? "even" : "odd") +
                                    " part " + std::to_string(value) +
                                    " must have even multiplicity in family " +
                                    family_letter(family));
    }
  };
  switch (family) {
    case LieFamily::A:
      break;
    case LieFamily::B:
      if (size % 2 == 0) throw std::invalid_argument("family B requires odd size");
      multiplicity_rule(true);
      break;
    case LieFamily::C:
      multiplicity_rule(false);
      break;
    case LieFamily::D:
      if (size % 2 == 1) throw std::invalid_argument("family D requires even size");
      multiplicity_rule(true);
      break;
  }
}

bool OrbitDescriptor::is_valid() const {
  try {
    validate();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

int orbit_dim_A(const Partition& d) {
  const int n = d.sum();
  const Partition s = dual(d);
  int squares = 0;
  for (int part : s.parts()) squares += part * part;
  return n * n - squares;
}

bool in_curated_a1_list(const OrbitDescriptor& o) {
  return std::any_of(a1_entries().begin(), a1_entries().end(), [&](const A1Entry& e) {
    return e.family == o.family && e.size == o.size && e.parts == o.partition.parts();
  });
}

bool is_rectangular(const OrbitDescriptor& o) {
  const auto& parts = o.partition.parts();
  return std::all_of(parts.begin(), parts.end(), [&](int p) { return p == parts.front(); });
}

bool matches_bcd_criterion(const OrbitDescriptor& o) {
  if (o.family == LieFamily::A) throw std::domain_error("wrong family");
  const auto& parts = o.partition.parts();
  if (parts.empty()) return false;
  const int first = parts.front();
  const int last = parts.back();
  if (first == last) {
    // One value: even 2k, or odd 2k+1 with a vacuous even tail.
    return first >= 2;
  }
  // Two values 2k+1 > 2k with the odd run first; the partition is already
  // weakly decreasing, so checking the value set suffices.
  if (first != last + 1 || first % 2 != 1 || last < 2) return false;
  return std::all_of(parts.begin(), parts.end(),
                     [&](int p) { return p == first || p == last; });
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Unknown: return "unknown";
    case Verdict::MultipleKnown: return "multiple-known";
    case Verdict::UniqueUpToEquivalence: return "unique-up-to-equivalence";
    case Verdict::UniqueUpToIso: return "unique-up-to-iso";
  }
  return "unknown";
}

UniquenessReport uniqueness_report(const OrbitDescriptor& o) {
  o.validate();
  UniquenessReport report;
  auto add = [&](std::string id, bool matched) {
    report.criteria.push_back({std::move(id), matched});
    return matched;
  };

  Verdict verdict = Verdict::Unknown;
  auto raise = [&](Verdict v) {
    verdict = std::max(verdict, v,
                       [](Verdict a, Verdict b) { return static_cast<int>(a) < static_cast<int>(b); });
  };

  if (add("a1-list", in_curated_a1_list(o))) raise(Verdict::UniqueUpToIso);

  if (o.family == LieFamily::A) {
    if (add("rectangular", is_rectangular(o))) raise(Verdict::UniqueUpToIso);
    const bool two_column = !o.partition.empty() && o.partition.at(0) == 2;
    if (add("two-column", two_column)) raise(Verdict::UniqueUpToEquivalence);

    const Partition s = dual(o.partition);
    report.polarization_count = ordering_count(s);
    report.reversal_class_count = reversal_class_count(s);
    if (verdict == Verdict::Unknown && *report.polarization_count >= 2)
      verdict = Verdict::MultipleKnown;
  } else {
    if (add("bcd-parity", matches_bcd_criterion(o))) raise(Verdict::UniqueUpToIso);
  }

  report.verdict = verdict;
  return report;
}

void to_json(nlohmann::json& j, const UniquenessReport& r) {
  j = nlohmann::json::object();
  j["verdict"] = verdict_name(r.verdict);
  nlohmann::json criteria = nlohmann::json::array();
  for (const auto& c : r.criteria) criteria.push_back({{"id", c.id}, {"matched", c.matched}});
  j["criteria"] = std::move(criteria);
  j["polarization_count"] =
      r.polarization_count ? nlohmann::json(*r.polarization_count) : nlohmann::json();
  j["reversal_class_count"] =
      r.reversal_class_count ? nlohmann::json(*r.reversal_class_count) : nlohmann::json();
}

}  // namespace orbitres
