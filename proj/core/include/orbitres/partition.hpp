#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace orbitres {

/// Weakly decreasing sequence of positive integers. The empty sequence is
/// the partition of 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  /// Parses "3,2,1". The exponent shorthand "3,1^5" expands to
  /// 3,1,1,1,1,1. The empty string is the partition of 0.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int sum() const noexcept { return sum_; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int at(std::size_t i) const { return parts_.at(i); }

  /// Comma-separated descending parts, e.g. "3,2,1".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// Sequence of positive integers where order is significant; sorting
/// descending yields a Partition.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  /// Same grammar as Partition::parse but without the descending check.
  static Composition parse(std::string_view text);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int sum() const noexcept { return sum_; }
  std::size_t size() const noexcept { return parts_.size(); }
  int at(std::size_t i) const { return parts_.at(i); }

  Composition reversed() const;
  Partition sorted() const;
  bool is_palindrome() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition&, const Composition&) = default;

private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// Conjugate partition: s_j = #{i : d_i >= j}.
Partition dual(const Partition& d);

/// Dominance order: prefix sums of p weakly above those of q, padding with
/// zeros. Throws std::domain_error("incomparable sizes") when the sums
/// differ.
bool dominates(const Partition& p, const Partition& q);

/// All distinct orderings of the multiset of parts, in lexicographic order.
std::vector<Composition> orderings(const Partition& s);

/// Number of distinct orderings: m! / prod(multiplicities!). Throws
/// std::overflow_error when the count exceeds 64 bits.
std::uint64_t ordering_count(const Partition& s);

/// Number of classes {c, reverse(c)} among all orderings.
std::uint64_t reversal_class_count(const Partition& s);

/// Groups compositions with their reversals. Classes are ordered by first
/// occurrence in the input; palindromes form singletons. The input must
/// share one multiset of parts and contain no duplicates.
std::vector<std::vector<Composition>> reversal_classes(const std::vector<Composition>& cs);

/// All partitions of n, descending lexicographic ([n] first, [1^n] last).
std::vector<Partition> all_partitions(int n);

}  // namespace orbitres
