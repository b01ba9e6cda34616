#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sharbly/dg_ops.hpp"
#include "sharbly/element.hpp"
#include "sharbly/errors.hpp"
#include "sharbly/exact_linalg.hpp"

namespace sharbly {

/// Finite set of nonzero vectors in Z^n, deduplicated up to sign. Vectors
/// are normalized (first nonzero entry positive) and sorted, so equal
/// pools serialize identically.
struct VectorPool {
  std::size_t n = 0;
  std::vector<std::vector<Int>> vectors;

  static VectorPool of(std::size_t n,
                       const std::vector<std::vector<Int>>& raw) {
    VectorPool pool;
    pool.n = n;
    for (std::vector<Int> v : raw) {
      if (v.size() != n) throw domain_error("pool vector of wrong length");
      int lead = 0;
      for (const Int& e : v)
        if (sgn(e) != 0) {
          lead = sgn(e);
          break;
        }
      if (lead == 0) throw domain_error("pool contains a zero vector");
      if (lead < 0)
        for (Int& e : v) e = -e;
      pool.vectors.push_back(std::move(v));
    }
    std::sort(pool.vectors.begin(), pool.vectors.end(),
              [](const std::vector<Int>& a, const std::vector<Int>& b) {
                for (std::size_t i = 0; i < a.size(); ++i) {
                  const int c = cmp(a[i], b[i]);
                  if (c != 0) return c < 0;
                }
                return false;
              });
    pool.vectors.erase(std::unique(pool.vectors.begin(), pool.vectors.end()),
                       pool.vectors.end());
    return pool;
  }

  std::size_t size() const { return vectors.size(); }
};

/// Subcomplex of the coinvariant sharblies spanned by classes whose
/// columns come from a fixed pool. Face maps delete columns, so the pool
/// closes under the differential and this is a genuine chain subcomplex.
struct TruncatedComplex {
  std::size_t n = 0;
  Character chi = Character::trivial;
  VectorPool pool;
  std::size_t max_k = 0;
  /// basis[k]: ordered canonical basis in degree (n, k), k = 0..max_k.
  std::vector<std::vector<CanonicalSharbly>> basis;
  /// boundary[k]: matrix of d: C_k -> C_{k-1} for k = 1..max_k
  /// (boundary[0] is an empty placeholder).
  std::vector<RatMatrix> boundary_mats;
};

namespace detail {

inline void enumerate_subsets(std::size_t pool_size, std::size_t take,
                              const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(take);
  if (take > pool_size) return;
  for (std::size_t i = 0; i < take; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = take;
    while (i > 0 && idx[i - 1] == pool_size - take + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < take; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace detail

/// Enumerates the canonical basis in degrees 0..max_k (all spanning,
/// nondegenerate column selections from the pool, deduplicated after
/// canonicalization) and assembles the exact boundary matrices. Repeated
/// columns are degenerate, so subsets suffice.
inline TruncatedComplex build_complex(std::size_t n, Character chi,
                                      const VectorPool& pool,
                                      std::size_t max_k,
                                      std::uint64_t size_cap = 2000000) {
  if (pool.n != n) throw domain_error("pool ambient rank mismatch");
  TruncatedComplex cx;
  cx.n = n;
  cx.chi = chi;
  cx.pool = pool;
  cx.max_k = max_k;

  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= max_k; ++k)
    total += detail::binomial(pool.size(), n + k);
  if (total > size_cap)
    throw domain_error("build_complex: " + std::to_string(total) +
                       " column selections exceed the size cap " +
                       std::to_string(size_cap));

  std::vector<std::map<CanonicalSharbly, std::size_t>> index(max_k + 1);
  for (std::size_t k = 0; k <= max_k; ++k) {
    const std::size_t m = n + k;
    detail::enumerate_subsets(
        pool.size(), m, [&](const std::vector<std::size_t>& idx) {
          std::vector<std::vector<Int>> cols;
          cols.reserve(m);
          for (std::size_t i : idx) cols.push_back(pool.vectors[i]);
          const CanonResult c =
              canonicalize_raw(n, chi, IntMatrix::from_columns(n, cols));
          if (!c.is_zero()) index[k].emplace(*c.rep, 0);
        });
    cx.basis.emplace_back();
    for (auto& [rep, pos] : index[k]) {
      pos = cx.basis[k].size();
      cx.basis[k].push_back(rep);
    }
  }

  cx.boundary_mats.resize(max_k + 1);
  for (std::size_t k = 1; k <= max_k; ++k) {
    RatMatrix& d = cx.boundary_mats[k];
    d = RatMatrix(cx.basis[k - 1].size(), cx.basis[k].size());
    for (std::size_t j = 0; j < cx.basis[k].size(); ++j) {
      const Element faces =
          boundary(Element::term(Rat(1), cx.basis[k][j]));
      for (const auto& [face, coeff] : faces.terms()) {
        const auto it = index[k - 1].find(face);
        if (it == index[k - 1].end())
          throw std::logic_error(
              "build_complex: face escaped the pool subcomplex");
        d(it->second, j) += coeff;
      }
    }
  }
  return cx;
}

/// dim H_k = dim ker d_k - rank d_{k+1} for 0 <= k < max_k, exact over Q.
/// With check_modular set, every rank is recomputed modulo three fixed
/// 31-bit primes; any disagreement aborts (both paths are exact-intent).
inline std::vector<std::size_t> homology_dims(const TruncatedComplex& cx,
                                              bool check_modular = false) {
  static constexpr std::uint64_t primes[3] = {2147483647ULL, 2147483629ULL,
                                              2147483587ULL};
  std::vector<std::size_t> ranks(cx.max_k + 1, 0);
  for (std::size_t k = 1; k <= cx.max_k; ++k) {
    ranks[k] = rank_rational(cx.boundary_mats[k]);
    if (check_modular) {
      const RatMatrix& m = cx.boundary_mats[k];
      IntMatrix z(m.rows, m.cols);
      for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
          if (m(i, j).get_den() != 1)
            throw std::logic_error("boundary matrix entry not integral");
          z(i, j) = m(i, j).get_num();
        }
      for (const std::uint64_t p : primes)
        if (rank_mod(z, p) != ranks[k])
          throw std::logic_error("modular rank cross-check disagrees");
    }
  }
  std::vector<std::size_t> h;
  for (std::size_t k = 0; k < cx.max_k; ++k) {
    const std::size_t dim_ck = cx.basis[k].size();
    const std::size_t rank_dk = k == 0 ? 0 : ranks[k];
    h.push_back(dim_ck - rank_dk - ranks[k + 1]);
  }
  return h;
}

/// Searches one degree up for x with boundary(x) = y, both supported on
/// the pool. A returned witness is re-verified through the element-level
/// boundary, independently of the assembled matrix. Absence only means no
/// witness exists within this pool.
inline std::optional<Element> find_boundary_witness(
    const Element& y, const VectorPool& pool,
    std::optional<std::size_t> search_k = std::nullopt,
    std::uint64_t size_cap = 2000000) {
  if (y.is_zero()) return Element::zero(y.chi(), y.n(), y.k() + 1);
  const std::size_t k = y.k();
  const std::size_t sk = search_k.value_or(k + 1);
  if (sk != k + 1)
    throw domain_error("find_boundary_witness: search degree must be k+1");
  const TruncatedComplex cx =
      build_complex(y.n(), y.chi(), pool, sk, size_cap);

  std::map<CanonicalSharbly, std::size_t> row_index;
  for (std::size_t i = 0; i < cx.basis[k].size(); ++i)
    row_index.emplace(cx.basis[k][i], i);
  std::vector<Rat> rhs(cx.basis[k].size(), Rat(0));
  for (const auto& [s, c] : y.terms()) {
    const auto it = row_index.find(s);
    if (it == row_index.end())
      throw domain_error(
          "find_boundary_witness: target is not supported on the pool");
    rhs[it->second] = c;
  }

  const auto sol = solve_rational(cx.boundary_mats[sk], rhs);
  if (!sol) return std::nullopt;
  Element x = Element::zero(y.chi(), y.n(), sk);
  for (std::size_t j = 0; j < sol->size(); ++j)
    if (sgn((*sol)[j]) != 0) x.add_term(cx.basis[sk][j], (*sol)[j]);
  if (boundary(x) != y)
    throw std::logic_error("find_boundary_witness: verification failed");
  return x;
}

}  // namespace sharbly
