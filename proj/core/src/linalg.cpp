#include "orbitres/linalg.hpp"

#include <set>
#include <stdexcept>

namespace orbitres {

std::vector<Rational> char_poly(const ExactMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {};

  // Berkowitz: grow the coefficient vector of the leading principal
  // submatrices. c holds the monic coefficients, c[0] = 1.
  std::vector<Rational> c{Rational(1), -m.at(0, 0)};
  for (std::size_t k = 1; k < n; ++k) {
    // q = (1, -a, -R C, -R M C, ..., -R M^(k-1) C) with M the previous
    // principal submatrix, R the new row, C the new column, a the corner.
    std::vector<Rational> q(k + 2, Rational(0));
    q[0] = 1;
    q[1] = -m.at(k, k);
    std::vector<Rational> v(k);
    for (std::size_t i = 0; i < k; ++i) v[i] = m.at(i, k);
    for (std::size_t j = 0; j < k; ++j) {
      Rational dot(0);
      for (std::size_t i = 0; i < k; ++i) dot += m.at(k, i) * v[i];
      q[j + 2] = -dot;
      if (j + 1 < k) {
        std::vector<Rational> w(k, Rational(0));
        for (std::size_t r = 0; r < k; ++r)
          for (std::size_t col = 0; col < k; ++col) w[r] += m.at(r, col) * v[col];
        v = std::move(w);
      }
    }
    // Toeplitz product: new[i] = sum_t q[i - t] c[t].
    std::vector<Rational> next(k + 2, Rational(0));
    for (std::size_t i = 0; i < k + 2; ++i) {
      Rational acc(0);
      for (std::size_t t = 0; t <= std::min(i, k); ++t) acc += q[i - t] * c[t];
      next[i] = std::move(acc);
    }
    c = std::move(next);
  }
  return std::vector<Rational>(c.begin() + 1, c.end());
}

std::size_t rank(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m.at(i, j);

  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) continue;
      const Rational factor = a[i][col] / a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= factor * a[r][j];
    }
    ++r;
  }
  return r;
}

bool is_nilpotent(const ExactMatrix& m) {
  if (!m.is_square()) return false;
  const std::size_t n = m.rows();
  if (n == 0) return true;
  ExactMatrix power = m;
  std::size_t exponent = 1;
  while (exponent < n) {
    power = power * power;
    exponent *= 2;
  }
  return power.is_zero();
}

Partition jordan_type(const ExactMatrix& m) {
  if (!m.is_square() || !is_nilpotent(m)) throw std::domain_error("not nilpotent");
  const std::size_t n = m.rows();
  std::vector<int> dual_parts;
  std::size_t previous = n;
  ExactMatrix power = m;
  while (previous > 0) {
    const std::size_t current = rank(power);
    dual_parts.push_back(static_cast<int>(previous - current));
    previous = current;
    if (current > 0) power = power * m;
  }
  return dual(Partition(std::move(dual_parts)));
}

std::vector<Rational> poly_from_spectrum(const std::vector<EigenvalueMultiplicity>& spectrum) {
  std::vector<Rational> poly{Rational(1)};  // monic, highest degree first
  for (const auto& ev : spectrum) {
    for (int rep = 0; rep < ev.multiplicity; ++rep) {
      std::vector<Rational> next(poly.size() + 1, Rational(0));
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i] += poly[i];
        next[i + 1] -= ev.value * poly[i];
      }
      poly = std::move(next);
    }
  }
  return std::vector<Rational>(poly.begin() + 1, poly.end());
}

bool is_semisimple_with_spectrum(const ExactMatrix& m,
                                 const std::vector<EigenvalueMultiplicity>& spectrum) {
  if (!m.is_square()) throw std::invalid_argument("spectrum check on a non-square matrix");
  long total = 0;
  std::set<std::string> values;
  for (const auto& ev : spectrum) {
    if (ev.multiplicity < 1) throw std::invalid_argument("multiplicities must be positive");
    if (!values.insert(ev.value.get_str()).second)
      throw std::invalid_argument("eigenvalues must be distinct");
    total += ev.multiplicity;
  }
  if (total != static_cast<long>(m.rows()))
    throw std::invalid_argument("multiplicities must sum to the matrix size");

  if (char_poly(m) != poly_from_spectrum(spectrum)) return false;

  // Semisimple iff the square-free candidate minimal polynomial annihilates.
  ExactMatrix product = ExactMatrix::identity(m.rows());
  for (const auto& ev : spectrum) {
    product = product * (m - ExactMatrix::identity(m.rows()).scaled(ev.value));
  }
  return product.is_zero();
}

}  // namespace orbitres
