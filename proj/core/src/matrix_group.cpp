#include "orbitres/matrix_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "orbitres/linalg.hpp"

namespace orbitres {

MatrixGroup MatrixGroup::generate(const std::vector<ExactMatrix>& generators, std::size_t bound) {
  if (generators.empty()) throw std::invalid_argument("no generators");
  const std::size_t n = generators.front().rows();
  for (const ExactMatrix& g : generators) {
    if (g.rows() != n || g.cols() != n)
      throw std::invalid_argument("generators must be square of one size");
    if (rank(g) != n) throw std::invalid_argument("generator not invertible: " + g.to_literal());
  }

  MatrixGroup group;
  group.dimension_ = n;
  group.generators_ = generators;

  auto insert = [&](const ExactMatrix& m) -> bool {
    const std::string key = m.to_literal();
    if (group.index_.contains(key)) return false;
    if (group.elements_.size() >= bound)
      throw std::domain_error("group too large or infinite");
    group.index_.emplace(key, group.elements_.size());
    group.elements_.push_back(m);
    return true;
  };

  insert(ExactMatrix::identity(n));
  std::size_t next = 0;
  while (next < group.elements_.size()) {
    const ExactMatrix current = group.elements_[next];
    ++next;
    for (const ExactMatrix& g : generators) insert(current * g);
  }

  group.inverse_.resize(group.elements_.size());
  for (std::size_t i = 0; i < group.elements_.size(); ++i) {
    const std::string key = group.elements_[i].inverse().to_literal();
    const auto it = group.index_.find(key);
    if (it == group.index_.end())
      throw std::logic_error("closure failure: inverse missing from the element set");
    group.inverse_[i] = it->second;
  }
  return group;
}

std::size_t MatrixGroup::index_of(const ExactMatrix& m) const {
  const auto it = index_.find(m.to_literal());
  if (it == index_.end()) throw std::invalid_argument("matrix is not a group element");
  return it->second;
}

std::vector<std::vector<std::size_t>> MatrixGroup::conjugacy_classes() const {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> seen(elements_.size(), false);
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (seen[i]) continue;
    std::set<std::size_t> orbit;
    for (std::size_t g = 0; g < elements_.size(); ++g) {
      const ExactMatrix conjugate = elements_[g] * elements_[i] * elements_[inverse_[g]];
      orbit.insert(index_of(conjugate));
    }
    for (std::size_t member : orbit) seen[member] = true;
    classes.emplace_back(orbit.begin(), orbit.end());
  }
  return classes;
}

SymplecticForm::SymplecticForm(ExactMatrix m) : matrix_(std::move(m)) {
  if (!matrix_.is_square()) throw std::invalid_argument("form matrix must be square");
  if (matrix_.transpose() != -matrix_)
    throw std::invalid_argument("form matrix must be antisymmetric");
  if (rank(matrix_) != matrix_.rows()) throw std::invalid_argument("form matrix must be invertible");
}

std::vector<std::size_t> symplectic_reflections(const MatrixGroup& g, const SymplecticForm& w) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    const ExactMatrix& m = g.element(i);
    if (m.transpose() * w.matrix() * m != w.matrix())
      throw std::domain_error("element does not preserve the form: " + m.to_literal());
  }
  std::vector<std::size_t> reflections;
  const ExactMatrix id = ExactMatrix::identity(g.dimension());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (rank(g.element(i) - id) == 2) reflections.push_back(i);
  }
  return reflections;
}

SingleClassResult single_class_hypothesis(const MatrixGroup& g, const SymplecticForm& w) {
  const std::vector<std::size_t> reflections = symplectic_reflections(g, w);
  SingleClassResult result;
  result.reflection_count = reflections.size();
  if (reflections.empty()) {
    result.holds = true;
    result.no_reflections = true;
    return result;
  }
  const std::set<std::size_t> reflection_set(reflections.begin(), reflections.end());
  for (const auto& cls : g.conjugacy_classes()) {
    if (reflection_set.contains(cls.front())) ++result.reflection_class_count;
  }
  result.holds = result.reflection_class_count == 1;
  return result;
}

std::string Relation::text() const {
  auto join = [](const std::vector<std::string>& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (i > 0) out += "*";
      out += word[i];
    }
    return out;
  };
  return join(lhs) + " = " + join(rhs);
}

std::vector<RelationResult> verify_intertwiner(const ExactMatrix& u,
                                               const std::map<std::string, ExactMatrix>& named,
                                               const std::vector<Relation>& relations) {
  auto evaluate = [&](const std::vector<std::string>& word) {
    if (word.empty()) throw std::invalid_argument("empty word");
    ExactMatrix product = ExactMatrix::identity(u.rows());
    for (const std::string& token : word) {
      if (token == "u") {
        product = product * u;
      } else {
        const auto it = named.find(token);
        if (it == named.end())
          throw std::invalid_argument("unknown generator name: " + token);
        product = product * it->second;
      }
    }
    return product;
  };

  std::vector<RelationResult> results;
  for (const Relation& relation : relations)
    results.push_back({relation.text(), evaluate(relation.lhs) == evaluate(relation.rhs)});
  return results;
}

std::vector<ExactMatrix> dihedral_generators() {
  const ExactMatrix sigma1 = ExactMatrix::parse("1,0,0,0;0,1,0,0;0,0,-1,0;0,0,0,-1");
  const ExactMatrix sigma2 = ExactMatrix::parse("-1,0,0,0;0,-1,0,0;0,0,1,0;0,0,0,1");
  const ExactMatrix tau = ExactMatrix::parse("0,0,1,0;0,0,0,1;1,0,0,0;0,1,0,0");
  return {sigma1, sigma2, tau};
}

std::map<std::string, ExactMatrix> dihedral_generator_map() {
  const std::vector<ExactMatrix> gens = dihedral_generators();
  return {{"sigma1", gens[0]}, {"sigma2", gens[1]}, {"tau", gens[2]}};
}

ExactMatrix standard_symplectic_form() {
  return ExactMatrix::parse("0,1,0,0;-1,0,0,0;0,0,0,1;0,0,-1,0");
}

ExactMatrix plane_swap_intertwiner() {
  return ExactMatrix::parse("1,0,-1,0;0,1,0,-1;1,0,1,0;0,1,0,1");
}

std::vector<Relation> intertwiner_relations() {
  return {
      {{"u", "sigma1"}, {"tau", "u"}},
      {{"u", "tau"}, {"sigma2", "u"}},
      {{"u", "sigma2"}, {"sigma1", "sigma2", "tau", "u"}},
  };
}

}  // namespace orbitres
