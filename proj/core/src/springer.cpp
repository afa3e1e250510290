#include "orbitres/springer.hpp"

#include <stdexcept>

#include "orbitres/linalg.hpp"
#include "orbitres/rng.hpp"

namespace orbitres {

std::vector<std::pair<std::size_t, std::size_t>> upper_block_positions(const FlagType& f) {
  const auto& steps = f.steps().parts();
  const std::size_t n = static_cast<std::size_t>(f.n());
  std::vector<std::size_t> block_of(n);
  std::size_t offset = 0;
  for (std::size_t b = 0; b < steps.size(); ++b) {
    for (int k = 0; k < steps[b]; ++k) block_of[offset++] = b;
  }
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (block_of[j] > block_of[i]) positions.emplace_back(i, j);
  return positions;
}

NilradicalSample sample_nilradical(const FlagType& f, std::uint64_t seed, int bound) {
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  SplitMix64 rng(seed);
  ExactMatrix m(static_cast<std::size_t>(f.n()), static_cast<std::size_t>(f.n()));
  for (const auto& [i, j] : upper_block_positions(f))
    m.set(i, j, Rational(static_cast<long>(rng.next_in_range(-bound, bound))));
  return NilradicalSample{f, std::move(m), seed};
}

GenericJordanReport generic_jordan_check(const FlagType& f, int trials, std::uint64_t seed,
                                         int bound) {
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  GenericJordanReport report;
  report.flag = f;
  report.expected = dual(f.steps().sorted());
  report.trials = trials;
  report.seed = seed;
  report.bound = bound;
  for (int t = 0; t < trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(seed, static_cast<std::uint64_t>(t));
    const NilradicalSample sample = sample_nilradical(f, trial_seed, bound);
    const Partition type = jordan_type(sample.matrix);
    if (type == report.expected) {
      ++report.hits;
    } else {
      report.degenerate.push_back({trial_seed, type});
    }
    if (!dominates(report.expected, type)) report.all_dominated = false;
  }
  return report;
}

ExactMatrix jordan_representative(const Partition& d) {
  const std::size_t n = static_cast<std::size_t>(d.sum());
  ExactMatrix m(n, n);
  std::size_t offset = 0;
  for (int part : d.parts()) {
    for (int k = 0; k + 1 < part; ++k)
      m.set(offset + static_cast<std::size_t>(k), offset + static_cast<std::size_t>(k) + 1,
            Rational(1));
    offset += static_cast<std::size_t>(part);
  }
  return m;
}

int tangent_dim_oracle(const Partition& d, int n) {
  if (d.sum() != n) throw std::invalid_argument("mismatched n");
  if (n == 0) return 0;
  const std::size_t un = static_cast<std::size_t>(n);
  const ExactMatrix phi = jordan_representative(d);

  // Basis of traceless matrices: E_ij for i != j, then E_ii - E_(n-1)(n-1).
  std::vector<ExactMatrix> basis;
  basis.reserve(un * un - 1);
  for (std::size_t i = 0; i < un; ++i) {
    for (std::size_t j = 0; j < un; ++j) {
      if (i == j) continue;
      ExactMatrix e(un, un);
      e.set(i, j, Rational(1));
      basis.push_back(std::move(e));
    }
  }
  for (std::size_t i = 0; i + 1 < un; ++i) {
    ExactMatrix e(un, un);
    e.set(i, i, Rational(1));
    e.set(un - 1, un - 1, Rational(-1));
    basis.push_back(std::move(e));
  }

  // Columns are the flattened commutators [B, phi].
  ExactMatrix map(un * un, basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const ExactMatrix image = basis[col] * phi - phi * basis[col];
    for (std::size_t i = 0; i < un; ++i)
      for (std::size_t j = 0; j < un; ++j) map.set(i * un + j, col, image.at(i, j));
  }
  return static_cast<int>(rank(map));
}

void to_json(nlohmann::json& j, const GenericJordanReport& r) {
  j = nlohmann::json::object();
  j["flag"] = r.flag.steps().parts();
  j["display"] = r.flag.cotangent_display();
  j["expected_type"] = r.expected.parts();
  j["trials"] = r.trials;
  j["hits"] = r.hits;
  j["seed"] = r.seed;
  j["bound"] = r.bound;
  nlohmann::json degenerate = nlohmann::json::array();
  for (const auto& d : r.degenerate)
    degenerate.push_back({{"seed", d.seed}, {"type", d.type.parts()}});
  j["degenerate"] = std::move(degenerate);
  j["all_dominated"] = r.all_dominated;
}

}  // namespace orbitres
