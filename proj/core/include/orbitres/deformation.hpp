#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "orbitres/linalg.hpp"
#include "orbitres/matrix.hpp"
#include "orbitres/partition.hpp"
#include "orbitres/polarization.hpp"

namespace orbitres {

/// Diagonal scalars a_1..a_m attached to the parts of a dual partition,
/// subject to the trace-zero constraint sum s_i a_i = 0.
struct AVector {
  Partition s;
  std::vector<Rational> a;

  AVector(Partition s_, std::vector<Rational> a_);
};

/// Appends the scalar forced by the trace-zero constraint:
/// a_m = -(sum of s_i a_i over the head) / s_m.
AVector complete_a(const Partition& s, const std::vector<Rational>& head);

/// Block upper triangular matrix whose diagonal blocks are the scalars
/// a_i I_(s_i), laid out in the block order of the flag. Free entries live
/// in the strictly-upper-block region.
class ESection {
public:
  /// `upper` fills upper_block_positions(flag) row-major. The flag's step
  /// multiset must equal avec.s; equal-sized blocks take labels left to
  /// right in increasing label order.
  ESection(FlagType flag, AVector avec, const std::vector<Rational>& upper);

  const FlagType& flag() const noexcept { return flag_; }
  const AVector& avec() const noexcept { return avec_; }
  const ExactMatrix& matrix() const noexcept { return matrix_; }

private:
  FlagType flag_;
  AVector avec_;
  ExactMatrix matrix_;
};

/// Section with integer entries in [-bound, bound] from a splitmix64 stream.
ESection sample_section(const FlagType& f, const AVector& avec, std::uint64_t seed, int bound);

/// The first m-1 diagonal scalars, by label.
std::vector<Rational> eta(const ESection& e);

/// Characteristic coefficients (phi_2, ..., phi_n) of the diagonal matrix
/// with the completed scalar a'_i repeated s_i times.
std::vector<Rational> pi_map(const Partition& s, const std::vector<Rational>& head);

/// Characteristic coefficients (c_2, ..., c_n) of a traceless matrix.
/// Throws std::domain_error on nonzero trace.
std::vector<Rational> ch(const ExactMatrix& m);

struct SquareFailure {
  int sample = 0;
  std::uint64_t seed = 0;
  std::string matrix_literal;
  std::vector<Rational> lhs;  // ch of the section matrix
  std::vector<Rational> rhs;  // pi of eta
};

struct CommutingSquareReport {
  FlagType flag;
  int samples = 0;
  std::uint64_t seed = 0;
  int bound = 0;
  std::vector<SquareFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Draws sections with random rational heads (numerators in [-bound, bound],
/// denominators in [1, bound]) and random integer upper entries, then checks
/// ch(matrix) == pi(s, eta) by exact equality. Failures carry the matrix
/// verbatim.
CommutingSquareReport verify_commuting_square(const FlagType& f, int samples, std::uint64_t seed,
                                              int bound);

struct FiberDimensionReport {
  FlagType flag;
  int upper_entries = 0;    // counted strictly-upper-block positions
  int expected_upper = 0;   // (n^2 - sum s_i^2) / 2
  int section_params = 0;   // upper_entries + (m - 1)
  std::vector<Rational> probe_head;
  bool eta_surjective = false;

  bool passed() const { return upper_entries == expected_upper && eta_surjective; }
};

/// Checks the free-parameter counts of the section space and reconstructs
/// a preimage of a probe head through eta.
FiberDimensionReport fiber_dimension_check(const FlagType& f);

struct GenericFiberFailure {
  int sample = 0;
  std::uint64_t seed = 0;
  std::string matrix_literal;
};

struct GenericFiberReport {
  FlagType flag;
  std::vector<Rational> head;
  std::vector<Rational> completed;
  std::vector<EigenvalueMultiplicity> spectrum;
  int samples = 0;
  std::uint64_t seed = 0;
  int bound = 0;
  std::vector<GenericFiberFailure> failures;

  bool passed() const { return failures.empty(); }
};

/// Samples sections over a fixed head whose completion has pairwise
/// distinct entries and checks each one is semisimple with spectrum
/// {(a'_i, s_i)}. Throws std::domain_error("not generic") on repeated
/// completed entries.
GenericFiberReport generic_fiber_check(const FlagType& f, const std::vector<Rational>& head,
                                       int samples, std::uint64_t seed, int bound);

void to_json(nlohmann::json& j, const CommutingSquareReport& r);
void to_json(nlohmann::json& j, const FiberDimensionReport& r);
void to_json(nlohmann::json& j, const GenericFiberReport& r);

}  // namespace orbitres
