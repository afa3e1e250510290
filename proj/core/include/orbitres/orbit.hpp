#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitres/partition.hpp"

namespace orbitres {

enum class LieFamily { A, B, C, D };

char family_letter(LieFamily f);

/// Nilpotent orbit in a classical Lie algebra, identified by its Jordan
/// type. `size` is the dimension of the defining representation.
struct OrbitDescriptor {
  LieFamily family = LieFamily::A;
  int size = 0;
  Partition partition;

  /// "sl(6):[3,2,1]", "so(8):[3,1^5]", "sp(4):[2,2]". so(n) resolves to
  /// family B for odd n and family D for even n. The result is validated.
  static OrbitDescriptor parse(std::string_view text);
  std::string to_string() const;

  /// Family rules: the partition sums to `size`; B and D require even
  /// parts to have even multiplicity (and n odd resp. even); C requires
  /// odd parts to have even multiplicity. Throws std::invalid_argument.
  void validate() const;
  bool is_valid() const;
};

/// dim O = n^2 - sum of squared dual parts (family A).
int orbit_dim_A(const Partition& d);

/// Membership in the curated list of orbits whose closure has a single
/// codimension-2 degeneration of type A1. False means "not certified by
/// the list", not a disproof.
bool in_curated_a1_list(const OrbitDescriptor& o);

/// All parts equal.
bool is_rectangular(const OrbitDescriptor& o);

/// B/C/D pattern: all parts equal to an even value 2k, or a leading run of
/// parts equal to 2k+1 followed (possibly vacuously) by parts equal to 2k,
/// with k >= 1. Throws std::domain_error("wrong family") on family A.
bool matches_bcd_criterion(const OrbitDescriptor& o);

enum class Verdict { Unknown, MultipleKnown, UniqueUpToEquivalence, UniqueUpToIso };

std::string verdict_name(Verdict v);

struct CriterionResult {
  std::string id;
  bool matched = false;
};

struct UniquenessReport {
  Verdict verdict = Verdict::Unknown;
  std::vector<CriterionResult> criteria;
  std::optional<std::uint64_t> polarization_count;    // family A only
  std::optional<std::uint64_t> reversal_class_count;  // family A only
};

/// Runs every applicable criterion and keeps all of them for audit.
/// Criterion ids: "rectangular" and "two-column" (family A), "bcd-parity"
/// (families B/C/D), "a1-list" (any family). The verdict is the strongest
/// one implied: rectangular, bcd-parity and a1-list give UniqueUpToIso;
/// two-column gives UniqueUpToEquivalence; a family-A orbit with several
/// polarizations and no matched criterion is MultipleKnown.
UniquenessReport uniqueness_report(const OrbitDescriptor& o);

void to_json(nlohmann::json& j, const UniquenessReport& r);

}  // namespace orbitres
