#include <doctest.h>

#include <set>
#include <stdexcept>

#include "orbitres/matrix_group.hpp"

using namespace orbitres;

TEST_CASE("closure of the dihedral generators") {
  const MatrixGroup g = MatrixGroup::generate(dihedral_generators(), 64);
  CHECK(g.order() == 8);
  // Identity, inverses and products all live in the set.
  for (std::size_t i = 0; i < g.order(); ++i) {
    CHECK(g.element(i) * g.element(g.inverse_index(i)) == ExactMatrix::identity(4));
    for (std::size_t j = 0; j < g.order(); ++j)
      CHECK_NOTHROW(g.index_of(g.element(i) * g.element(j)));
  }
}

TEST_CASE("tiny groups") {
  CHECK(MatrixGroup::generate({ExactMatrix::identity(3)}, 4).order() == 1);
  CHECK(MatrixGroup::generate({ExactMatrix::identity(4).scaled(Rational(-1))}, 4).order() == 2);
}

TEST_CASE("closure bound rejects infinite groups") {
  const ExactMatrix shear = ExactMatrix::parse("1,1;0,1");
  CHECK_THROWS_WITH_AS(MatrixGroup::generate({shear}, 100), "group too large or infinite",
                       std::domain_error);
}

TEST_CASE("non-invertible generators are rejected") {
  CHECK_THROWS_AS(MatrixGroup::generate({ExactMatrix(2, 2)}, 10), std::invalid_argument);
}

TEST_CASE("conjugacy classes of the dihedral group") {
  const MatrixGroup g = MatrixGroup::generate(dihedral_generators(), 64);
  const auto classes = g.conjugacy_classes();
  CHECK(classes.size() == 5);
  std::size_t total = 0;
  std::multiset<std::size_t> sizes;
  for (const auto& cls : classes) {
    total += cls.size();
    sizes.insert(cls.size());
  }
  CHECK(total == g.order());  // class equation
  CHECK(sizes == std::multiset<std::size_t>{1, 1, 2, 2, 2});

  CHECK(MatrixGroup::generate({ExactMatrix::identity(2)}, 4).conjugacy_classes().size() == 1);
  CHECK(MatrixGroup::generate({ExactMatrix::identity(4).scaled(Rational(-1))}, 4)
            .conjugacy_classes()
            .size() == 2);
}

TEST_CASE("symplectic form validation") {
  CHECK_NOTHROW(SymplecticForm{standard_symplectic_form()});
  CHECK_THROWS_AS(SymplecticForm(ExactMatrix::identity(4)), std::invalid_argument);
  CHECK_THROWS_AS(SymplecticForm(ExactMatrix(4, 4)), std::invalid_argument);
}

TEST_CASE("symplectic reflections of the dihedral group") {
  const MatrixGroup g = MatrixGroup::generate(dihedral_generators(), 64);
  const SymplecticForm form(standard_symplectic_form());
  const auto reflections = symplectic_reflections(g, form);
  CHECK(reflections.size() == 4);

  const auto gens = dihedral_generators();
  const std::set<std::size_t> reflection_set(reflections.begin(), reflections.end());
  CHECK(reflection_set.contains(g.index_of(gens[0])));  // sigma1 fixes a plane
  CHECK(reflection_set.contains(g.index_of(gens[1])));
  CHECK(reflection_set.contains(g.index_of(gens[2])));  // tau fixes the diagonal plane
  CHECK_FALSE(reflection_set.contains(g.index_of(ExactMatrix::identity(4))));
  CHECK_FALSE(
      reflection_set.contains(g.index_of(ExactMatrix::identity(4).scaled(Rational(-1)))));

  // The reflection set is a union of conjugacy classes.
  for (const auto& cls : g.conjugacy_classes()) {
    const bool first = reflection_set.contains(cls.front());
    for (std::size_t member : cls) CHECK(reflection_set.contains(member) == first);
  }
}

TEST_CASE("form preservation is checked on every element") {
  // diag(1,-1) flips the sign of the 2d form.
  const MatrixGroup g = MatrixGroup::generate({ExactMatrix::parse("1,0;0,-1")}, 4);
  const SymplecticForm form(ExactMatrix::parse("0,1;-1,0"));
  CHECK_THROWS_AS(symplectic_reflections(g, form), std::domain_error);
}

TEST_CASE("single class hypothesis") {
  const MatrixGroup dihedral = MatrixGroup::generate(dihedral_generators(), 64);
  const SymplecticForm form(standard_symplectic_form());
  const SingleClassResult split = single_class_hypothesis(dihedral, form);
  CHECK_FALSE(split.holds);
  CHECK(split.reflection_class_count == 2);
  CHECK(split.reflection_count == 4);
  CHECK_FALSE(split.no_reflections);

  // One reflection alone: a single class.
  const MatrixGroup tiny = MatrixGroup::generate({dihedral_generators()[0]}, 8);
  const SingleClassResult one = single_class_hypothesis(tiny, form);
  CHECK(one.holds);
  CHECK(one.reflection_class_count == 1);

  // No reflections at all: vacuously true, flagged.
  const MatrixGroup trivial = MatrixGroup::generate({ExactMatrix::identity(4)}, 4);
  const SingleClassResult vacuous = single_class_hypothesis(trivial, form);
  CHECK(vacuous.holds);
  CHECK(vacuous.no_reflections);
  CHECK(vacuous.reflection_count == 0);
}

TEST_CASE("hypothesis verdict is independent of the generating set") {
  const auto gens = dihedral_generators();
  const SymplecticForm form(standard_symplectic_form());
  // sigma1 * tau and tau generate the same dihedral group.
  const MatrixGroup alternative = MatrixGroup::generate({gens[0] * gens[2], gens[2]}, 64);
  CHECK(alternative.order() == 8);
  const SingleClassResult result = single_class_hypothesis(alternative, form);
  CHECK_FALSE(result.holds);
  CHECK(result.reflection_class_count == 2);
}

TEST_CASE("intertwiner relations of the fixture") {
  const auto results = verify_intertwiner(plane_swap_intertwiner(), dihedral_generator_map(),
                                          intertwiner_relations());
  REQUIRE(results.size() == 3);
  for (const auto& r : results) CHECK(r.holds);
  CHECK(results[0].relation == "u*sigma1 = tau*u");
}

TEST_CASE("intertwiner failures and unknown names") {
  const auto named = dihedral_generator_map();
  const ExactMatrix id = ExactMatrix::identity(4);

  const auto holds = verify_intertwiner(id, named, {{{"u", "sigma1"}, {"sigma1", "u"}}});
  CHECK(holds[0].holds);

  const auto fails = verify_intertwiner(id, named, {{{"u", "sigma1"}, {"tau", "u"}}});
  CHECK_FALSE(fails[0].holds);

  CHECK_THROWS_AS(verify_intertwiner(id, named, {{{"u", "gamma"}, {"u"}}}),
                  std::invalid_argument);
}

TEST_CASE("every dihedral element preserves the form exactly") {
  const MatrixGroup g = MatrixGroup::generate(dihedral_generators(), 64);
  const ExactMatrix w = standard_symplectic_form();
  for (std::size_t i = 0; i < g.order(); ++i)
    CHECK(g.element(i).transpose() * w * g.element(i) == w);
}
