#include "curvesing/matrix.hpp"

#include <limits>
#include <random>
#include <sstream>

#include "curvesing/error.hpp"

namespace curvesing {

ConstMatrix::ConstMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ConstMatrix::ConstMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw InvalidArgument("matrix entry count mismatch");
}

ConstMatrix ConstMatrix::identity(std::size_t n) {
  ConstMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ConstMatrix ConstMatrix::parse(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::string row_text;
  std::stringstream rows_stream{std::string(text)};
  while (std::getline(rows_stream, row_text, ';')) {
    std::vector<Rational> row;
    std::stringstream cell_stream(row_text);
    std::string cell;
    while (std::getline(cell_stream, cell, ',')) row.push_back(parse_rational(cell));
    rows.push_back(std::move(row));
  }
  if (rows.empty() || rows.front().empty()) throw ParseError("empty matrix");
  const std::size_t cols = rows.front().size();
  std::vector<Rational> flat;
  for (auto& r : rows) {
    if (r.size() != cols) throw ParseError("matrix rows have different lengths");
    for (auto& v : r) flat.push_back(std::move(v));
  }
  return ConstMatrix(rows.size(), cols, std::move(flat));
}

std::size_t ConstMatrix::rank() const {
  std::vector<Rational> a = data_;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && a[pivot * cols_ + c] == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(a[pivot * cols_ + j], a[rank * cols_ + j]);
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (a[r * cols_ + c] == 0) continue;
      const Rational f = a[r * cols_ + c] / a[rank * cols_ + c];
      for (std::size_t j = c; j < cols_; ++j) a[r * cols_ + j] -= f * a[rank * cols_ + j];
    }
    ++rank;
  }
  return rank;
}

std::string ConstMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r > 0) out += ';';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ',';
      out += (*this)(r, c).get_str();
    }
  }
  return out;
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), data_(rows * cols, Poly(nvars)) {}

Poly PolyMatrix::minor(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const {
  if (rows.size() != cols.size()) throw InvalidArgument("minor must be square");
  const std::size_t k = rows.size();
  if (k == 0) return Poly::constant(nvars_, 1);
  if (k == 1) return (*this)(rows[0], cols[0]);
  // Laplace expansion along the first selected row.
  Poly det(nvars_);
  std::vector<std::size_t> sub_cols;
  sub_cols.reserve(k - 1);
  for (std::size_t j = 0; j < k; ++j) {
    const Poly& entry = (*this)(rows[0], cols[j]);
    if (entry.is_zero()) continue;
    sub_cols.clear();
    for (std::size_t c = 0; c < k; ++c) {
      if (c != j) sub_cols.push_back(cols[c]);
    }
    Poly cofactor = entry * minor(rows.subspan(1), sub_cols);
    if (j % 2 == 0) {
      det += cofactor;
    } else {
      det -= cofactor;
    }
  }
  return det;
}

Poly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw InvalidArgument("determinant of a non-square matrix");
  std::vector<std::size_t> idx(rows_);
  for (std::size_t i = 0; i < rows_; ++i) idx[i] = i;
  return minor(idx, idx);
}

PolyMatrix operator*(const ConstMatrix& a, const PolyMatrix& m) {
  if (a.cols() != m.rows()) throw InvalidArgument("matrix dimension mismatch");
  PolyMatrix out(a.rows(), m.cols(), m.nvars());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Poly acc(m.nvars());
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) != 0) acc += m(k, j) * a(i, k);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

PolyMatrix operator*(const PolyMatrix& m, const ConstMatrix& b) {
  if (m.cols() != b.rows()) throw InvalidArgument("matrix dimension mismatch");
  PolyMatrix out(m.rows(), b.cols(), m.nvars());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Poly acc(m.nvars());
      for (std::size_t k = 0; k < m.cols(); ++k) {
        if (b(k, j) != 0) acc += m(i, k) * b(k, j);
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

std::vector<Poly> apply(const ConstMatrix& a, std::span<const Poly> column) {
  if (a.cols() != column.size()) throw InvalidArgument("matrix dimension mismatch");
  if (column.empty()) throw InvalidArgument("empty column");
  std::vector<Poly> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Poly acc(column.front().nvars());
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) != 0) acc += column[k] * a(i, k);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

PolyMatrix jacobian_matrix(std::span<const Poly> equations, std::span<const std::size_t> var_indices) {
  if (equations.empty()) throw InvalidArgument("jacobian of an empty equation list");
  const std::size_t nvars = equations.front().nvars();
  PolyMatrix j(equations.size(), var_indices.size(), nvars);
  for (std::size_t r = 0; r < equations.size(); ++r) {
    for (std::size_t c = 0; c < var_indices.size(); ++c) {
      j(r, c) = equations[r].derivative(var_indices[c]);
    }
  }
  return j;
}

PolyMatrix jacobian_matrix(std::span<const Poly> equations) {
  if (equations.empty()) throw InvalidArgument("jacobian of an empty equation list");
  std::vector<std::size_t> all(equations.front().nvars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return jacobian_matrix(equations, all);
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cur(k);
  for (std::size_t i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = k;
    while (i > 0 && cur[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

std::vector<Poly> minors_of_size(const PolyMatrix& m, std::size_t k) {
  if (k == 0 || k > std::min(m.rows(), m.cols())) throw InvalidArgument("minor size out of range");
  std::vector<Poly> out;
  const auto row_sets = subsets(m.rows(), k);
  const auto col_sets = subsets(m.cols(), k);
  out.reserve(row_sets.size() * col_sets.size());
  for (const auto& rs : row_sets) {
    for (const auto& cs : col_sets) out.push_back(m.minor(rs, cs));
  }
  return out;
}

ConstMatrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed, unsigned bound) {
  if (bound == 0) throw InvalidArgument("random matrix bound must be positive");
  // mt19937_64 output is fixed by the standard; the mapping to the range is
  // done here so results do not depend on the library's distributions.
  std::mt19937_64 gen(seed);
  const std::uint64_t span = 2ull * bound;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  ConstMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      std::uint64_t draw;
      do {
        draw = gen();
      } while (draw >= limit);
      const auto v = static_cast<long>(draw % span);
      m(r, c) = v < static_cast<long>(bound) ? v - static_cast<long>(bound) : v - static_cast<long>(bound) + 1;
    }
  }
  return m;
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t attempt) noexcept {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(base) ^ tag) ^ attempt);
}

}  // namespace curvesing
