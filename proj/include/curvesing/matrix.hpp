#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "curvesing/poly.hpp"

namespace curvesing {

// Dense row-major matrix of constants.
class ConstMatrix {
 public:
  ConstMatrix() = default;
  ConstMatrix(std::size_t rows, std::size_t cols);
  ConstMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static ConstMatrix identity(std::size_t n);
  // Rows separated by ';', entries by ',', e.g. "1,1,0;1,0,1".
  static ConstMatrix parse(std::string_view text);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::size_t rank() const;
  std::string to_string() const;

  friend bool operator==(const ConstMatrix&, const ConstMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }
  const Poly& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Poly& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  // Determinant of the submatrix on the given (sorted) rows and columns.
  Poly minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
  Poly determinant() const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  std::vector<Poly> data_;
};

PolyMatrix operator*(const ConstMatrix& a, const PolyMatrix& m);
PolyMatrix operator*(const PolyMatrix& m, const ConstMatrix& b);
// A * (f_1, ..., f_p)^T
std::vector<Poly> apply(const ConstMatrix& a, std::span<const Poly> column);

// p x n matrix of partial derivatives of `equations` with respect to the
// ring variables listed in `var_indices`.
PolyMatrix jacobian_matrix(std::span<const Poly> equations, std::span<const std::size_t> var_indices);
PolyMatrix jacobian_matrix(std::span<const Poly> equations);

// All k x k minors; row subsets in lexicographic order, and for each row
// subset the column subsets in lexicographic order.
std::vector<Poly> minors_of_size(const PolyMatrix& m, std::size_t k);

// Lexicographically ordered k-subsets of {0, ..., n-1}.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k);

// Entries uniform over the nonzero integers in [-bound, bound]. Reproducible
// across platforms for a given (seed, rows, cols, bound).
ConstMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, unsigned bound);

// Independent seed stream for a named sub-computation.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t attempt = 0) noexcept;

}  // namespace curvesing
