#include "orbitres/matrix.hpp"

#include <stdexcept>

namespace orbitres {

namespace {

std::string_view trimmed(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  return text;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  text = trimmed(text);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const std::size_t slash = text.find('/');
  try {
    if (slash == std::string_view::npos) {
      mpz_class num(std::string(text), 10);
      return Rational(num);
    }
    mpz_class num(std::string(trimmed(text.substr(0, slash))), 10);
    mpz_class den(std::string(trimmed(text.substr(slash + 1))), 10);
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("malformed rational literal: " + std::string(text));
  }
}

std::string rational_to_string(const Rational& value) { return value.get_str(); }

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("entry count does not match dimensions");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& values) {
  ExactMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m.set(i, i, values[i]);
  return m;
}

ExactMatrix ExactMatrix::parse(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row_text = text.substr(start, end - start);
    std::vector<Rational> row;
    std::size_t cell_start = 0;
    while (cell_start <= row_text.size()) {
      std::size_t cell_end = row_text.find(',', cell_start);
      if (cell_end == std::string_view::npos) cell_end = row_text.size();
      row.push_back(parse_rational(row_text.substr(cell_start, cell_end - cell_start)));
      cell_start = cell_end + 1;
      if (cell_end == row_text.size()) break;
    }
    rows.push_back(std::move(row));
    start = end + 1;
    if (end == text.size()) break;
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix literal");
  const std::size_t cols = rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix literal");
    for (const Rational& q : row) entries.push_back(q);
  }
  return ExactMatrix(rows.size(), cols, std::move(entries));
}

std::string ExactMatrix::to_literal() const {
  std::string out;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i > 0) out.push_back(';');
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j > 0) out.push_back(',');
      out += entries_[index(i, j)].get_str();
    }
  }
  return out;
}

const Rational& ExactMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  return entries_[index(i, j)];
}

void ExactMatrix::set(std::size_t i, std::size_t j, Rational value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
  entries_[index(i, j)] = std::move(value);
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out.set(j, i, entries_[index(i, j)]);
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in product");
  ExactMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& left = entries_[index(i, k)];
      if (left == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        Rational acc = out.at(i, j) + left * rhs.at(k, j);
        out.set(i, j, std::move(acc));
      }
    }
  }
  return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("dimension mismatch in sum");
  ExactMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("dimension mismatch in difference");
  ExactMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = -entries_[i];
  return out;
}

ExactMatrix ExactMatrix::scaled(const Rational& factor) const {
  ExactMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * factor;
  return out;
}

ExactMatrix ExactMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = rows_;
  ExactMatrix work = *this;
  ExactMatrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && work.at(pivot, col) == 0) ++pivot;
    if (pivot == n) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work.entries_[work.index(col, j)], work.entries_[work.index(pivot, j)]);
        std::swap(inv.entries_[inv.index(col, j)], inv.entries_[inv.index(pivot, j)]);
      }
    }
    const Rational scale = Rational(1) / work.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work.entries_[work.index(col, j)] *= scale;
      inv.entries_[inv.index(col, j)] *= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col) continue;
      const Rational factor = work.at(row, col);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work.entries_[work.index(row, j)] -= factor * work.at(col, j);
        inv.entries_[inv.index(row, j)] -= factor * inv.at(col, j);
      }
    }
  }
  return inv;
}

Rational ExactMatrix::trace() const {
  if (!is_square()) throw std::invalid_argument("trace of a non-square matrix");
  Rational t(0);
  for (std::size_t i = 0; i < rows_; ++i) t += entries_[index(i, i)];
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const Rational& q : entries_)
    if (q != 0) return false;
  return true;
}

}  // namespace orbitres
