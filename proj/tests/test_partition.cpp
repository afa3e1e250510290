#include <doctest.h>

#include <map>
#include <stdexcept>

#include "orbitres/partition.hpp"

using namespace orbitres;

namespace {

// Transpose-the-diagram oracle for the conjugate partition.
Partition dual_oracle(const Partition& d) {
  std::vector<int> cols;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.at(i); ++j) {
      if (static_cast<std::size_t>(j) >= cols.size()) cols.push_back(0);
      ++cols[static_cast<std::size_t>(j)];
    }
  }
  return Partition(std::move(cols));
}

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_CASE("partition construction and parsing") {
  CHECK(P({3, 2, 1}).sum() == 6);
  CHECK(Partition().sum() == 0);
  CHECK(Partition::parse("3,2,1") == P({3, 2, 1}));
  CHECK(Partition::parse("3,1^5") == P({3, 1, 1, 1, 1, 1}));
  CHECK(Partition::parse("2^3") == P({2, 2, 2}));
  CHECK(Partition::parse("") == Partition());
  CHECK(P({3, 2, 1}).to_string() == "3,2,1");

  CHECK_THROWS_AS(Partition::parse("2,3"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("0,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3,2,"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a"), std::invalid_argument);
}

TEST_CASE("dual of named examples") {
  CHECK(dual(P({3, 2, 1})) == P({3, 2, 1}));
  CHECK(dual(P({1, 1, 1})) == P({3}));
  // [2,1^(n-1)] with n+1 boxes has the two-part dual [n,1].
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> parts{2};
    parts.insert(parts.end(), static_cast<std::size_t>(n - 1), 1);
    CHECK(dual(P(parts)) == P({n, 1}));
  }
  CHECK(dual(Partition()) == Partition());
}

TEST_CASE("dual is an involution and matches the diagram oracle") {
  for (int n = 0; n <= 12; ++n) {
    for (const Partition& d : all_partitions(n)) {
      CHECK(dual(d) == dual_oracle(d));
      CHECK(dual(dual(d)) == d);
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(dominates(P({3, 1}), P({2, 2})));
  CHECK_FALSE(dominates(P({2, 2}), P({3, 1})));
  CHECK(dominates(P({5}), P({1, 1, 1, 1, 1})));
  CHECK(dominates(P({2, 2}), P({2, 2})));
  CHECK_THROWS_WITH_AS(dominates(P({2, 1}), P({2, 2})), "incomparable sizes", std::domain_error);
}

TEST_CASE("dual is antitone for dominance") {
  for (int n = 1; n <= 8; ++n) {
    const auto parts = all_partitions(n);
    for (const Partition& p : parts) {
      for (const Partition& q : parts) {
        CHECK(dominates(p, q) == dominates(dual(q), dual(p)));
      }
    }
  }
}

TEST_CASE("orderings: counts and lexicographic order") {
  const auto six = orderings(P({3, 2, 1}));
  REQUIRE(six.size() == 6);
  CHECK(six.front() == Composition({1, 2, 3}));
  CHECK(six.back() == Composition({3, 2, 1}));
  for (std::size_t i = 0; i + 1 < six.size(); ++i) CHECK(six[i] < six[i + 1]);

  CHECK(orderings(P({2, 2})).size() == 1);
  for (int n = 2; n <= 6; ++n) {
    const auto two = orderings(P({n, 1}));
    REQUIRE(two.size() == 2);
    CHECK(two[0] == Composition({1, n}));
    CHECK(two[1] == Composition({n, 1}));
  }
}

TEST_CASE("ordering_count matches enumeration") {
  for (int n = 1; n <= 9; ++n) {
    for (const Partition& d : all_partitions(n)) {
      const Partition s = dual(d);
      CHECK(ordering_count(s) == orderings(s).size());
    }
  }
}

TEST_CASE("reversal classes") {
  const auto classes = reversal_classes(orderings(P({3, 2, 1})));
  REQUIRE(classes.size() == 3);
  for (const auto& cls : classes) CHECK(cls.size() == 2);
  CHECK(classes[0][0] == Composition({1, 2, 3}));
  CHECK(classes[0][1] == Composition({3, 2, 1}));

  const auto palindromic = reversal_classes(orderings(P({2, 2})));
  REQUIRE(palindromic.size() == 1);
  CHECK(palindromic[0].size() == 1);

  for (int n = 2; n <= 5; ++n) {
    const auto pair = reversal_classes(orderings(P({n, 1})));
    REQUIRE(pair.size() == 1);
    CHECK(pair[0].size() == 2);
  }

  CHECK_THROWS_AS(reversal_classes({Composition({1, 2}), Composition({1, 2})}),
                  std::invalid_argument);
  CHECK_THROWS_AS(reversal_classes({Composition({1, 2}), Composition({1, 3})}),
                  std::invalid_argument);
}

TEST_CASE("reversal class accounting across all partitions") {
  for (int n = 1; n <= 9; ++n) {
    for (const Partition& d : all_partitions(n)) {
      const Partition s = dual(d);
      const auto all = orderings(s);
      const auto classes = reversal_classes(all);
      std::size_t total = 0;
      for (const auto& cls : classes) {
        REQUIRE(cls.size() >= 1);
        REQUIRE(cls.size() <= 2);
        total += cls.size();
        if (cls.size() == 1) CHECK(cls[0].is_palindrome());
        if (cls.size() == 2) CHECK(cls[0].reversed() == cls[1]);
      }
      CHECK(total == all.size());
      CHECK(reversal_class_count(s) == classes.size());
    }
  }
}

TEST_CASE("all_partitions counts") {
  const std::map<int, std::size_t> counts{{0, 1}, {1, 1}, {2, 2}, {3, 3},  {4, 5},
                                          {5, 7}, {6, 11}, {7, 15}, {12, 77}};
  for (const auto& [n, count] : counts) CHECK(all_partitions(n).size() == count);
}

TEST_CASE("composition basics") {
  const Composition c({1, 3, 2});
  CHECK(c.reversed() == Composition({2, 3, 1}));
  CHECK(c.sorted() == Partition({3, 2, 1}));
  CHECK_FALSE(c.is_palindrome());
  CHECK(Composition({2, 1, 2}).is_palindrome());
  CHECK(Composition::parse("1,2^2") == Composition({1, 2, 2}));
  CHECK(c.to_string() == "1,3,2");
  CHECK_THROWS_AS(Composition({1, 0}), std::invalid_argument);
}

TEST_CASE("oversized parts are rejected") {
  CHECK_THROWS_AS(Partition::parse("1000001"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("3^1000001"), std::invalid_argument);
}

TEST_CASE("orderings of the empty partition") {
  const auto empty = orderings(Partition());
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].size() == 0);
}
