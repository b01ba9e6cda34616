#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sharbly/int_matrix.hpp"
#include "sharbly/numeric.hpp"

namespace sharbly {

/// Result of a row Hermite reduction U*A = H with U unimodular.
/// H is in row echelon HNF shape: the first `rank` rows are nonzero with
/// strictly increasing pivot columns, pivots are positive, entries above a
/// pivot lie in [0, pivot), and the remaining rows are zero. det_sign is
/// det(U) and is always +1 or -1.
struct HnfResult {
  IntMatrix h;
  IntMatrix u;
  std::size_t rank = 0;
  int det_sign = 1;
  std::vector<std::size_t> pivot_cols;
};

/// Row HNF of an arbitrary integer matrix, with the full transformation.
/// Deterministic; H is the unique echelon HNF of the row lattice of A.
inline HnfResult hnf_general(const IntMatrix& a) {
  const std::size_t p = a.rows(), q = a.cols();
  HnfResult res;
  res.h = a;
  res.u = IntMatrix::identity(p);
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < q && r < p; ++c) {
    // Fold rows below r into row r until column c is zero under the pivot.
    for (std::size_t i = r + 1; i < p; ++i) {
      if (sgn(h(i, c)) == 0) continue;
      const Int av = h(r, c), bv = h(i, c);
      const GcdExt e = gcdext(av, bv);
      const Int ad = av / e.g, bd = bv / e.g;
      // [[s, t], [-bd, ad]] has determinant (s*a + t*b)/g = 1.
      for (std::size_t j = 0; j < q; ++j) {
        Int hr = e.s * h(r, j) + e.t * h(i, j);
        Int hi = ad * h(i, j) - bd * h(r, j);
        h(r, j) = std::move(hr);
        h(i, j) = std::move(hi);
      }
      for (std::size_t j = 0; j < p; ++j) {
        Int ur = e.s * u(r, j) + e.t * u(i, j);
        Int ui = ad * u(i, j) - bd * u(r, j);
        u(r, j) = std::move(ur);
        u(i, j) = std::move(ui);
      }
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      for (std::size_t j = 0; j < q; ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < p; ++j) u(r, j) = -u(r, j);
      res.det_sign = -res.det_sign;
    }
    for (std::size_t i = 0; i < r; ++i) {
      const Int f = fdiv(h(i, c), h(r, c));
      if (sgn(f) == 0) continue;
      for (std::size_t j = 0; j < q; ++j) h(i, j) -= f * h(r, j);
      for (std::size_t j = 0; j < p; ++j) u(i, j) -= f * u(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

/// Row HNF of a full-row-rank matrix: H = U*A with U in GL_n(Z), H unique
/// in the orbit {U*A}. Rejects rank-deficient input.
inline std::pair<IntMatrix, int> row_hnf(const IntMatrix& a) {
  HnfResult res = hnf_general(a);
  if (res.rank != a.rows())
    throw std::invalid_argument("row_hnf: matrix is rank-deficient");
  return {std::move(res.h), res.det_sign};
}

/// Rank over the rationals (integer row operations preserve it).
inline std::size_t rank_rational(const IntMatrix& a) {
  return hnf_general(a).rank;
}

/// Basis of {x in Z^q : A x = 0} as the columns of an n x d matrix.
/// The kernel lattice of an integer matrix is saturated by construction.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  const HnfResult res = hnf_general(a.transposed());
  const std::size_t q = a.cols();
  IntMatrix ker(q, q - res.rank);
  for (std::size_t i = res.rank; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) ker(j, i - res.rank) = res.u(i, j);
  return ker;
}

/// A saturated sublattice of Z^n: equal to (Q-span) ∩ Z^n, so Z^n/L is
/// torsion-free. The basis is stored in canonical form: basis^T is the row
/// HNF of itself, which makes equal lattices compare equal entrywise.
struct SaturatedLattice {
  std::size_t ambient_rank = 0;
  std::size_t rank = 0;
  IntMatrix basis;  // ambient_rank x rank

  bool operator==(const SaturatedLattice& o) const {
    return ambient_rank == o.ambient_rank && rank == o.rank &&
           basis == o.basis;
  }
  int compare(const SaturatedLattice& o) const {
    if (ambient_rank != o.ambient_rank)
      return ambient_rank < o.ambient_rank ? -1 : 1;
    if (rank != o.rank) return rank < o.rank ? -1 : 1;
    return basis.compare(o.basis);
  }
  bool operator<(const SaturatedLattice& o) const { return compare(o) < 0; }
};

/// Saturation of the column span: (Q-span of the columns) ∩ Z^n, with the
/// canonical HNF basis. Computed as a double orthogonal complement; the
/// kernel of an integer matrix is automatically saturated.
inline SaturatedLattice saturate(const IntMatrix& span_of) {
  const std::size_t n = span_of.rows();
  SaturatedLattice lat;
  lat.ambient_rank = n;
  const IntMatrix orth = integer_kernel(span_of.transposed());
  IntMatrix sat = integer_kernel(orth.transposed());
  lat.rank = sat.cols();
  if (lat.rank == 0) {
    lat.basis = IntMatrix(n, 0);
    return lat;
  }
  lat.basis = row_hnf(sat.transposed()).first.transposed();
  return lat;
}

/// Entry-wise exact rational matrix. Only what the homology machinery
/// needs; no attempt at a general linear algebra interface.
struct RatMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Rat& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a[i * cols + j];
  }
  static RatMatrix from(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
  }
};

/// Any exact solution of A x = b over Q (free variables set to zero), or
/// absent when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a0,
                                                      const std::vector<Rat>& b) {
  if (b.size() != a0.rows) throw std::invalid_argument("rhs length");
  RatMatrix m(a0.rows, a0.cols + 1);
  for (std::size_t i = 0; i < a0.rows; ++i) {
    for (std::size_t j = 0; j < a0.cols; ++j) m(i, j) = a0(i, j);
    m(i, a0.cols) = b[i];
  }
  const std::size_t rows = m.rows, cols = a0.cols;
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = c; j <= cols; ++j) std::swap(m(r, j), m(piv, j));
    const Rat inv = Rat(1) / m(r, c);
    for (std::size_t j = c; j <= cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      const Rat f = m(i, c);
      for (std::size_t j = c; j <= cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (sgn(m(i, cols)) != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = m(i, cols);
  return x;
}

inline std::optional<std::vector<Rat>> solve_rational(const IntMatrix& a,
                                                      const std::vector<Rat>& b) {
  return solve_rational(RatMatrix::from(a), b);
}

/// Integer coordinates of v in the basis of L, or absent when v is not in
/// L. For a saturated lattice, any integer vector in the rational span has
/// integral coordinates.
inline std::optional<std::vector<Int>> lattice_coords(
    const SaturatedLattice& lat, const std::vector<Int>& v) {
  if (v.size() != lat.ambient_rank)
    throw std::invalid_argument("vector length");
  std::vector<Rat> b(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) b[i] = Rat(v[i]);
  const auto sol = solve_rational(lat.basis, b);
  if (!sol) return std::nullopt;
  std::vector<Int> c(lat.rank);
  for (std::size_t j = 0; j < lat.rank; ++j) {
    if ((*sol)[j].get_den() != 1)
      return std::nullopt;  // not in the lattice (cannot happen if saturated)
    c[j] = (*sol)[j].get_num();
  }
  // The rational solver only guarantees consistency on pivot rows.
  const std::vector<Int> check = lat.basis.apply(c);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (check[i] != v[i]) return std::nullopt;
  return c;
}

/// Surjective linear map Z^n -> Z^(n-rank) with kernel exactly L, fixed
/// deterministically by L via the Hermite transform of its basis: for a
/// saturated basis B, U*B = [I; 0], and the map is the bottom rows of U.
inline IntMatrix quotient_coords(const SaturatedLattice& lat) {
  const std::size_t n = lat.ambient_rank, a = lat.rank;
  const HnfResult res = hnf_general(lat.basis);
  if (res.rank != a)
    throw std::invalid_argument("quotient_coords: basis is not independent");
  IntMatrix q(n - a, n);
  for (std::size_t i = a; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q(i - a, j) = res.u(i, j);
  return q;
}

/// Rank of an exact rational matrix: rows are scaled to integers (rank is
/// unchanged) and reduced fraction-free.
inline std::size_t rank_rational(const RatMatrix& m) {
  IntMatrix z(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m.cols; ++j) {
      const Int den = m(i, j).get_den();
      lcm = lcm / gcd(lcm, den) * den;
    }
    for (std::size_t j = 0; j < m.cols; ++j) {
      Rat v = m(i, j) * Rat(lcm);
      v.canonicalize();
      z(i, j) = v.get_num();
    }
  }
  return rank_rational(z);
}

/// Rank modulo a prime p < 2^31 (plain Gaussian elimination over F_p).
inline std::size_t rank_mod(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::uint64_t> a(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      Int v = m(i, j) % Int(static_cast<unsigned long>(p));
      if (sgn(v) < 0) v += Int(static_cast<unsigned long>(p));
      a[i * cols + j] = v.get_ui();
    }
  auto powmod = [p](std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j)
        std::swap(a[r * cols + j], a[piv * cols + j]);
    const std::uint64_t inv = powmod(a[r * cols + c], p - 2);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const std::uint64_t f = a[i * cols + c] * inv % p;
      if (f == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = (a[i * cols + j] + (p - f) * a[r * cols + j]) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace sharbly
