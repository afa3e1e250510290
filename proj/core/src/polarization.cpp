#include "orbitres/polarization.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbitres {

FlagType::FlagType(Composition steps) : steps_(std::move(steps)) {
  if (steps_.size() == 0) throw std::invalid_argument("flag type needs at least one step");
}

std::vector<int> FlagType::cumulative_dims() const {
  std::vector<int> dims;
  int acc = 0;
  for (std::size_t j = 0; j + 1 < steps_.size(); ++j) {
    acc += steps_.at(j);
    dims.push_back(acc);
  }
  return dims;
}

FlagType FlagType::reversed() const { return FlagType(steps_.reversed()); }

std::string FlagType::display() const {
  std::string out = "F(" + std::to_string(n());
  const std::vector<int> dims = cumulative_dims();
  for (auto it = dims.rbegin(); it != dims.rend(); ++it) out += "," + std::to_string(*it);
  out += ")";
  return out;
}

std::string FlagType::cotangent_display() const { return "T*" + display(); }

int flag_dim(const FlagType& f) {
  const int n = f.n();
  int squares = 0;
  for (int s : f.steps().parts()) squares += s * s;
  return (n * n - squares) / 2;
}

std::vector<FlagType> enumerate_polarizations(const Partition& d, int n) {
  if (d.sum() != n) throw std::invalid_argument("mismatched n");
  std::vector<FlagType> out;
  for (const Composition& c : orderings(dual(d))) out.emplace_back(FlagType(c));
  return out;
}

FibrationFiber FibrationFiber::grassmannian(int ambient, int subspace) {
  if (subspace < 1 || subspace >= ambient)
    throw std::invalid_argument("Grassmannian needs 1 <= subspace < ambient");
  return FibrationFiber{ambient, std::min(subspace, ambient - subspace)};
}

std::string FibrationFiber::display() const {
  if (is_projective_space()) return "P" + std::to_string(ambient - 1);
  return "Gr(" + std::to_string(ambient) + "," + std::to_string(subspace) + ")";
}

std::pair<FibrationFiber, FibrationFiber> two_step_fibrations(const FlagType& f) {
  if (f.step_count() != 3)
    throw std::invalid_argument("fibration pair is defined for three-step flags");
  const int a = f.steps().at(0);
  const int b = f.steps().at(1);
  const int c = f.steps().at(2);
  return {FibrationFiber::grassmannian(a + b, a), FibrationFiber::grassmannian(b + c, b)};
}

std::string fibration_verdict_name(FibrationVerdict v) {
  return v == FibrationVerdict::Distinct ? "distinct" : "inconclusive";
}

FibrationVerdict distinguish_by_fibrations(const FlagType& a, const FlagType& b) {
  auto multiset = [](const FlagType& f) {
    auto [x, y] = two_step_fibrations(f);
    if (y < x) std::swap(x, y);
    return std::make_pair(x, y);
  };
  return multiset(a) != multiset(b) ? FibrationVerdict::Distinct : FibrationVerdict::Inconclusive;
}

}  // namespace orbitres
