#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharbly/numeric.hpp"

namespace sharbly {

/// Dense matrix of arbitrary-precision integers, row-major storage.
/// Values are immutable in spirit: every operation returns a fresh matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  /// Row-major entries, e.g. IntMatrix::of({{2,1},{0,1}}).
  static IntMatrix of(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    IntMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw std::invalid_argument("ragged rows");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  /// Assembles an n x cols.size() matrix whose j-th column is cols[j].
  static IntMatrix from_columns(std::size_t n,
                                const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(n, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != n) throw std::invalid_argument("column length");
      for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::vector<Int> column(std::size_t j) const {
    std::vector<Int> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  std::vector<std::vector<Int>> columns() const {
    std::vector<std::vector<Int>> out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = column(j);
    return out;
  }

  IntMatrix transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
    IntMatrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        const Int& x = (*this)(i, l);
        if (sgn(x) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += x * o(l, j);
      }
    return p;
  }

  std::vector<Int> apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch");
    std::vector<Int> w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) w[i] += (*this)(i, j) * v[j];
    return w;
  }

  IntMatrix without_column(std::size_t j) const {
    IntMatrix m(rows_, cols_ - 1);
    for (std::size_t i = 0; i < rows_; ++i) {
      std::size_t t = 0;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (c == j) continue;
        m(i, t++) = (*this)(i, c);
      }
    }
    return m;
  }

  bool is_zero() const {
    for (const Int& x : a_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  /// Fixed total order: dimensions first, then entries column-major,
  /// integers compared by value. Canonical representatives are minima
  /// under this order, so it must never change.
  int compare(const IntMatrix& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_ ? -1 : 1;
    if (cols_ != o.cols_) return cols_ < o.cols_ ? -1 : 1;
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) {
        const int c = cmp((*this)(i, j), o(i, j));
        if (c != 0) return c < 0 ? -1 : 1;
      }
    return 0;
  }
  bool operator<(const IntMatrix& o) const { return compare(o) < 0; }

  std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) {
      h ^= v;
      h *= 1099511628211ULL;
    };
    mix(rows_);
    mix(cols_);
    for (const Int& x : a_) {
      const int s = sgn(x);
      mix(static_cast<std::uint64_t>(s + 1));
      if (s != 0) {
        const std::size_t limbs = mpz_size(x.get_mpz_t());
        for (std::size_t l = 0; l < limbs; ++l)
          mix(static_cast<std::uint64_t>(mpz_getlimbn(x.get_mpz_t(), l)));
      }
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> a_;
};

inline std::vector<Int> int_vector(std::initializer_list<long> vals) {
  std::vector<Int> v;
  v.reserve(vals.size());
  for (long x : vals) v.emplace_back(x);
  return v;
}

}  // namespace sharbly
