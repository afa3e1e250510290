#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "orbitres/matrix.hpp"

namespace orbitres {

/// Finite group of exact invertible matrices. Construction closes the
/// generating set under products and verifies that every element has its
/// inverse in the set.
class MatrixGroup {
public:
  /// Breadth-first closure under right multiplication by generators.
  /// Throws std::domain_error("group too large or infinite") when the
  /// element count would exceed `bound`.
  static MatrixGroup generate(const std::vector<ExactMatrix>& generators, std::size_t bound);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<ExactMatrix>& elements() const noexcept { return elements_; }
  const std::vector<ExactMatrix>& generators() const noexcept { return generators_; }

  const ExactMatrix& element(std::size_t index) const { return elements_.at(index); }
  std::size_t inverse_index(std::size_t index) const { return inverse_.at(index); }

  /// Index of an element; throws std::invalid_argument when absent.
  std::size_t index_of(const ExactMatrix& m) const;

  /// Orbits of the conjugation action, each sorted, ordered by smallest
  /// member. Sizes satisfy the class equation.
  std::vector<std::vector<std::size_t>> conjugacy_classes() const;

private:
  MatrixGroup() = default;

  std::size_t dimension_ = 0;
  std::vector<ExactMatrix> elements_;
  std::vector<ExactMatrix> generators_;
  std::vector<std::size_t> inverse_;
  std::map<std::string, std::size_t> index_;
};

/// Antisymmetric invertible bilinear form.
struct SymplecticForm {
  explicit SymplecticForm(ExactMatrix m);
  const ExactMatrix& matrix() const noexcept { return matrix_; }

private:
  ExactMatrix matrix_;
};

/// Indices of the elements whose fixed subspace has codimension exactly 2,
/// i.e. rank(g - I) == 2. Verifies g^T w g = w for every element first and
/// throws std::domain_error naming a violator.
std::vector<std::size_t> symplectic_reflections(const MatrixGroup& g, const SymplecticForm& w);

struct SingleClassResult {
  bool holds = false;
  bool no_reflections = false;
  std::size_t reflection_count = 0;
  std::size_t reflection_class_count = 0;
};

/// Whether all symplectic reflections lie in one conjugacy class. A group
/// without reflections holds vacuously and is flagged as such.
SingleClassResult single_class_hypothesis(const MatrixGroup& g, const SymplecticForm& w);

struct Relation {
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::string text() const;
};

struct RelationResult {
  std::string relation;
  bool holds = false;
};

/// Checks matrix identities between words over named maps; the name "u"
/// resolves to the intertwiner. The word (f, g) denotes the composite
/// f after g, i.e. the matrix product F G. Unknown names throw.
std::vector<RelationResult> verify_intertwiner(const ExactMatrix& u,
                                               const std::map<std::string, ExactMatrix>& named,
                                               const std::vector<Relation>& relations);

/// Signed coordinate maps on C^4 = {(x,y,z,w)}: sigma1 negates (z,w),
/// sigma2 negates (x,y), tau swaps the two coordinate planes. They
/// generate a dihedral group of order 8 inside Sp(4).
std::vector<ExactMatrix> dihedral_generators();
std::map<std::string, ExactMatrix> dihedral_generator_map();

/// The form dx^dy + dz^dw.
ExactMatrix standard_symplectic_form();

/// u(x,y,z,w) = (x-z, y-w, x+z, y+w); conjugation by u permutes the
/// dihedral generators.
ExactMatrix plane_swap_intertwiner();

/// The three identities tying u to sigma1, sigma2 and tau.
std::vector<Relation> intertwiner_relations();

}  // namespace orbitres
