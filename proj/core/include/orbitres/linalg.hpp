#pragma once

#include <vector>

#include "orbitres/matrix.hpp"
#include "orbitres/partition.hpp"

namespace orbitres {

/// Coefficients (c_1, ..., c_n) of det(xI - A) = x^n + c_1 x^(n-1) + ... + c_n,
/// computed with the division-free Berkowitz recurrence.
std::vector<Rational> char_poly(const ExactMatrix& m);

/// Exact rank by row reduction over the rationals.
std::size_t rank(const ExactMatrix& m);

/// Repeated squaring up to exponent >= n, then a zero test.
bool is_nilpotent(const ExactMatrix& m);

/// Jordan partition of a nilpotent matrix: the consecutive differences of
/// the rank sequence rank(m^0), rank(m^1), ... form the dual partition.
/// Throws std::domain_error("not nilpotent") otherwise.
Partition jordan_type(const ExactMatrix& m);

struct EigenvalueMultiplicity {
  Rational value;
  int multiplicity = 0;

  friend bool operator==(const EigenvalueMultiplicity&, const EigenvalueMultiplicity&) = default;
};

/// True iff char_poly(m) = prod (x - v_i)^(k_i) and prod (m - v_i I) = 0.
/// The eigenvalues must be distinct and the multiplicities must sum to the
/// matrix size.
bool is_semisimple_with_spectrum(const ExactMatrix& m,
                                 const std::vector<EigenvalueMultiplicity>& spectrum);

/// Coefficients of prod (x - v_i)^(k_i) with the leading 1 dropped, i.e.
/// the same layout as char_poly.
std::vector<Rational> poly_from_spectrum(const std::vector<EigenvalueMultiplicity>& spectrum);

}  // namespace orbitres
