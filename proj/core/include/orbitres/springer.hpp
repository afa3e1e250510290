#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <utility>
#include <vector>

#include "orbitres/matrix.hpp"
#include "orbitres/partition.hpp"
#include "orbitres/polarization.hpp"

namespace orbitres {

/// Entry positions of the strictly upper block triangle of the flag's
/// block structure, row-major.
std::vector<std::pair<std::size_t, std::size_t>> upper_block_positions(const FlagType& f);

/// Element of the nilradical of the parabolic fixing the standard flag of
/// type `flag`: strictly upper block triangular, hence nilpotent.
struct NilradicalSample {
  FlagType flag;
  ExactMatrix matrix;
  std::uint64_t seed = 0;
};

/// Entries drawn uniformly from the integers in [-bound, bound] by a
/// splitmix64 stream, filling the strictly-upper-block region row-major.
NilradicalSample sample_nilradical(const FlagType& f, std::uint64_t seed, int bound);

struct DegenerateSample {
  std::uint64_t seed = 0;
  Partition type;
};

struct GenericJordanReport {
  FlagType flag;
  Partition expected;  // dual of the sorted step multiset
  int trials = 0;
  int hits = 0;
  std::uint64_t seed = 0;
  int bound = 0;
  /// Samples whose type fell strictly below the expected one. Recorded,
  /// never resampled.
  std::vector<DegenerateSample> degenerate;
  /// Every sampled type must sit below the expected one in dominance; a
  /// violation would be an implementation bug.
  bool all_dominated = true;
};

/// Samples `trials` nilradical elements with per-trial derived seeds and
/// counts how many hit the expected Jordan type.
GenericJordanReport generic_jordan_check(const FlagType& f, int trials, std::uint64_t seed,
                                         int bound);

/// Exact rank of X -> X phi - phi X on traceless matrices, with phi the
/// Jordan representative of type d. Independent route to orbit_dim_A.
int tangent_dim_oracle(const Partition& d, int n);

/// Jordan representative of type d: one nilpotent Jordan block per part.
ExactMatrix jordan_representative(const Partition& d);

void to_json(nlohmann::json& j, const GenericJordanReport& r);

}  // namespace orbitres
