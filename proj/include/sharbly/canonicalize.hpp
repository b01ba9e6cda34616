#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sharbly/config.hpp"
#include "sharbly/errors.hpp"
#include "sharbly/exact_linalg.hpp"
#include "sharbly/int_matrix.hpp"
#include "sharbly/numeric.hpp"
#include "sharbly/sharbly_types.hpp"

namespace sharbly {

/// Outcome of canonicalization: x is equivalent to sign * rep in the
/// coinvariants. sign == 0 (and rep absent) marks the zero class: the
/// columns do not span, two columns agree up to sign, or the orbit
/// annihilates itself.
struct CanonResult {
  int sign = 0;
  std::optional<CanonicalSharbly> rep;

  bool is_zero() const { return sign == 0; }
};

inline int permutation_sign(const std::vector<std::size_t>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

namespace detail {

inline int cmp_columns(const std::vector<Int>& a, const std::vector<Int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

/// Branch-and-bound search for the minimum Hermite form over the orbit
/// of column sign patterns and column permutations, with sign tracking.
///
/// Columns are placed left to right. The left-to-right Hermite reduction
/// has a prefix property: the first j columns of the final form equal the
/// Hermite form of the chosen j-column prefix. A partial arrangement whose
/// reduced prefix already exceeds the incumbent (column-major, by value)
/// can therefore never produce the minimum and is cut. Prefixes that tie
/// the incumbent must be explored in full: the minimum may be reached by
/// several arrangements whose tracked signs disagree, which is exactly the
/// self-annihilation test.
class OrbitSearch {
 public:
  OrbitSearch(const IntMatrix& m, Character chi)
      : m_(m), n_(m.rows()), cols_(m.cols()), chi_(chi) {}

  CanonResult run() {
    State root;
    root.w = IntMatrix::identity(n_);
    root.det = 1;
    root.rank = 0;
    root.used.assign(cols_, false);
    dfs(root);
    if (annihilated_) return {0, std::nullopt};
    IntMatrix rep = IntMatrix::from_columns(n_, best_);
    const int sign = (seen_mask_ & 1) != 0 ? +1 : -1;
    return {sign,
            CanonicalSharbly(n_, cols_ - n_, chi_, std::move(rep))};
  }

 private:
  struct State {
    IntMatrix w;  // accumulated unimodular transform
    int det = 1;
    std::size_t rank = 0;
    std::vector<std::size_t> perm;
    std::vector<std::vector<Int>> hcols;  // reduced columns so far
    std::vector<bool> used;
  };

  struct Candidate {
    std::vector<Int> col;  // reduced column
    IntMatrix w;
    int det = 1;
    std::size_t rank = 0;
    std::size_t src = 0;
    int flip = 1;
  };

  // Applies the next column to a copy of the state's transform, mirroring
  // the Hermite reduction. Earlier reduced columns are untouched: every
  // row operation used here involves a row that is zero on them.
  Candidate reduce_next(const State& st, std::size_t src, int flip) const {
    Candidate c;
    c.w = st.w;
    c.det = st.det;
    c.rank = st.rank;
    c.src = src;
    c.flip = flip;
    std::vector<Int> v(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      v[i] = 0;
      for (std::size_t j = 0; j < n_; ++j) {
        const Int& e = m_(j, src);
        if (sgn(e) == 0 || sgn(c.w(i, j)) == 0) continue;
        v[i] += c.w(i, j) * e;
      }
      if (flip < 0) v[i] = -v[i];
    }
    const std::size_t r = c.rank;
    if (r < n_) {
      for (std::size_t i = r + 1; i < n_; ++i) {
        if (sgn(v[i]) == 0) continue;
        const GcdExt e = gcdext(v[r], v[i]);
        const Int ad = v[r] / e.g, bd = v[i] / e.g;
        for (std::size_t j = 0; j < n_; ++j) {
          Int wr = e.s * c.w(r, j) + e.t * c.w(i, j);
          Int wi = ad * c.w(i, j) - bd * c.w(r, j);
          c.w(r, j) = std::move(wr);
          c.w(i, j) = std::move(wi);
        }
        Int vr = e.s * v[r] + e.t * v[i];
        v[i] = ad * v[i] - bd * v[r];  // = 0
        v[r] = std::move(vr);
      }
      if (sgn(v[r]) != 0) {
        if (sgn(v[r]) < 0) {
          v[r] = -v[r];
          for (std::size_t j = 0; j < n_; ++j) c.w(r, j) = -c.w(r, j);
          c.det = -c.det;
        }
        for (std::size_t i = 0; i < r; ++i) {
          const Int f = fdiv(v[i], v[r]);
          if (sgn(f) == 0) continue;
          v[i] -= f * v[r];
          for (std::size_t j = 0; j < n_; ++j) c.w(i, j) -= f * c.w(r, j);
        }
        c.rank = r + 1;
      }
    }
    c.col = std::move(v);
    return c;
  }

  // -1 / 0 / +1 for the node's reduced prefix against the incumbent.
  int cmp_prefix(const std::vector<std::vector<Int>>& hcols) const {
    for (std::size_t j = 0; j < hcols.size(); ++j) {
      const int c = cmp_columns(hcols[j], best_[j]);
      if (c != 0) return c;
    }
    return 0;
  }

  void dfs(State& st) {
    if (annihilated_) return;
    const std::size_t depth = st.perm.size();
    if (depth == cols_) {
      const int tracked =
          permutation_sign(st.perm) *
          (chi_ == Character::determinant ? st.det : 1);
      const int mask = tracked > 0 ? 1 : 2;
      if (best_.empty()) {
        best_ = st.hcols;
        seen_mask_ = mask;
        return;
      }
      const int c = cmp_prefix(st.hcols);
      if (c < 0) {
        best_ = st.hcols;
        seen_mask_ = mask;
      } else if (c == 0) {
        seen_mask_ |= mask;
        if (seen_mask_ == 3) annihilated_ = true;
      }
      return;
    }
    std::vector<Candidate> cands;
    cands.reserve(2 * (cols_ - depth));
    for (std::size_t src = 0; src < cols_; ++src) {
      if (st.used[src]) continue;
      cands.push_back(reduce_next(st, src, +1));
      cands.push_back(reduce_next(st, src, -1));
    }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) {
                const int c = cmp_columns(a.col, b.col);
                if (c != 0) return c < 0;
                if (a.src != b.src) return a.src < b.src;
                return a.flip > b.flip;
              });
    for (Candidate& cand : cands) {
      if (annihilated_) return;
      if (!best_.empty()) {
        // Fresh comparison each iteration: the incumbent may have shrunk
        // while exploring an earlier sibling.
        const int pre = cmp_prefix(st.hcols);
        if (pre > 0) return;
        if (pre == 0 && cmp_columns(cand.col, best_[depth]) > 0) continue;
      }
      State child;
      child.w = std::move(cand.w);
      child.det = cand.det;
      child.rank = cand.rank;
      child.perm = st.perm;
      child.perm.push_back(cand.src);
      child.hcols = st.hcols;
      child.hcols.push_back(std::move(cand.col));
      child.used = st.used;
      child.used[cand.src] = true;
      dfs(child);
    }
  }

  const IntMatrix& m_;
  std::size_t n_, cols_;
  Character chi_;
  std::vector<std::vector<Int>> best_;
  int seen_mask_ = 0;
  bool annihilated_ = false;
};

struct CanonKey {
  Character chi;
  IntMatrix m;
  bool operator==(const CanonKey& o) const {
    return chi == o.chi && m == o.m;
  }
};

struct CanonKeyHash {
  std::size_t operator()(const CanonKey& k) const {
    return k.m.hash() ^
           (k.chi == Character::trivial ? 0x5bd1e995U : 0xc6a4a793U);
  }
};

inline std::unordered_map<CanonKey, CanonResult, CanonKeyHash>&
canon_cache() {
  thread_local std::unordered_map<CanonKey, CanonResult, CanonKeyHash> cache;
  return cache;
}

}  // namespace detail

/// Canonicalizes raw column data of rank n. Unlike the BasicSharbly entry
/// point this tolerates the rank-0 sector and zero columns (a zero column
/// arises from quotient data and means the class is zero).
inline CanonResult canonicalize_raw(std::size_t n, Character chi,
                                    const IntMatrix& cols) {
  const std::size_t m = cols.cols();
  if (n == 0)
    return m == 0 ? CanonResult{+1, CanonicalSharbly::unit(chi)}
                  : CanonResult{0, std::nullopt};
  if (m < n) return {0, std::nullopt};
  if (m > config::max_cols())
    throw domain_error("canonicalize: " + std::to_string(m) +
                       " columns exceeds width cap " +
                       std::to_string(config::max_cols()) +
                       " (SHARBLY_MAX_COLS)");
  for (std::size_t j = 0; j < m; ++j) {
    bool nonzero = false;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(cols(i, j)) != 0) {
        nonzero = true;
        break;
      }
    if (!nonzero) return {0, std::nullopt};
  }
  // Two columns equal up to sign span a degenerate simplex.
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      bool eq = true, neg = true;
      for (std::size_t i = 0; i < n && (eq || neg); ++i) {
        if (cols(i, a) != cols(i, b)) eq = false;
        if (cols(i, a) != -cols(i, b)) neg = false;
      }
      if (eq || neg) return {0, std::nullopt};
    }
  if (rank_rational(cols) < n) return {0, std::nullopt};

  auto& cache = detail::canon_cache();
  const detail::CanonKey key{chi, cols};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  CanonResult res = detail::OrbitSearch(cols, chi).run();
  cache.emplace(key, res);
  return res;
}

inline CanonResult canonicalize(const BasicSharbly& x) {
  return canonicalize_raw(x.n, x.chi, x.cols);
}

}  // namespace sharbly
