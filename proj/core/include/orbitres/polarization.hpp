#pragma once

#include <string>
#include <utility>
#include <vector>

#include "orbitres/partition.hpp"

namespace orbitres {

/// Flag type (i_1, ..., i_k): the stabilized flag 0 = V_0 c V_1 c ... c
/// V_k = C^n with dim V_j / V_(j-1) = i_j.
class FlagType {
public:
  FlagType() = default;
  explicit FlagType(Composition steps);

  const Composition& steps() const noexcept { return steps_; }
  int n() const noexcept { return steps_.sum(); }
  std::size_t step_count() const noexcept { return steps_.size(); }

  /// Proper flag dimensions i_1, i_1+i_2, ..., up to but excluding n.
  std::vector<int> cumulative_dims() const;

  FlagType reversed() const;

  /// Flag-manifold rendering: steps (1,2,3) on C^6 print as "F(6,3,1)",
  /// listing n and the proper subspace dimensions in decreasing order.
  std::string display() const;
  std::string cotangent_display() const;  // "T*F(6,3,1)"

  friend bool operator==(const FlagType&, const FlagType&) = default;

private:
  Composition steps_;
};

/// dim G/P = (n^2 - sum of squared steps) / 2.
int flag_dim(const FlagType& f);

/// One flag type per ordering of the dual partition, in the deterministic
/// order of orderings(). Throws when d is not a partition of n.
std::vector<FlagType> enumerate_polarizations(const Partition& d, int n);

/// Grassmannian Gr(ambient, subspace) normalized so subspace <= ambient/2;
/// subspace 1 renders as the projective space P^(ambient-1).
struct FibrationFiber {
  int ambient = 0;
  int subspace = 0;

  static FibrationFiber grassmannian(int ambient, int subspace);
  bool is_projective_space() const { return subspace == 1; }
  std::string display() const;  // "P2", "Gr(5,2)", ...

  friend bool operator==(const FibrationFiber&, const FibrationFiber&) = default;
  friend auto operator<=>(const FibrationFiber&, const FibrationFiber&) = default;
};

/// Fibers of the two forgetful fibrations of a three-step flag (a,b,c):
/// dropping V_1 gives Gr(a+b, a); dropping V_2 gives Gr(b+c, b) on the
/// quotient. Throws unless the flag has exactly 3 steps.
std::pair<FibrationFiber, FibrationFiber> two_step_fibrations(const FlagType& f);

enum class FibrationVerdict { Distinct, Inconclusive };

std::string fibration_verdict_name(FibrationVerdict v);

/// Distinct iff the fiber multisets differ. The test never certifies an
/// isomorphism, so matching multisets are merely inconclusive.
FibrationVerdict distinguish_by_fibrations(const FlagType& a, const FlagType& b);

}  // namespace orbitres
