#pragma once

#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sharbly/canonicalize.hpp"
#include "sharbly/element.hpp"
#include "sharbly/exact_linalg.hpp"
#include "sharbly/tensor_element.hpp"

namespace sharbly {

/// Alternating face sum: [v_1..v_m] -> sum_i (-1)^i [.., v_i omitted, ..],
/// extended linearly and re-canonicalized. Degree (n, k) -> (n, k-1); at
/// k = 0 every face is rank-deficient, so the result is zero.
inline Element boundary(const Element& x) {
  const std::size_t out_k = x.k() > 0 ? x.k() - 1 : 0;
  Element out = Element::zero(x.chi(), x.n(), out_k);
  if (x.k() == 0) return out;
  for (const auto& [s, coeff] : x.terms()) {
    const IntMatrix& mat = s.matrix();
    for (std::size_t i = 0; i < mat.cols(); ++i) {
      const CanonResult face =
          canonicalize_raw(s.n(), s.chi(), mat.without_column(i));
      if (face.is_zero()) continue;
      // faces are indexed from 1 in the alternating sum
      const int sign = (i % 2 == 0) ? -1 : +1;
      out.add_term(*face.rep, coeff * (sign * face.sign));
    }
  }
  return out;
}

/// Graded product: x's columns land in the first n coordinates, y's in the
/// last m, and the block arrangement is re-canonicalized.
inline Element product(const Element& x, const Element& y) {
  if (x.chi() != y.chi())
    throw grade_error("product of mismatched characters");
  Element out = Element::zero(x.chi(), x.n() + y.n(), x.k() + y.k());
  for (const auto& [xs, xc] : x.terms())
    for (const auto& [ys, yc] : y.terms()) {
      const std::size_t n = xs.n(), m = ys.n();
      const IntMatrix &a = xs.matrix(), &b = ys.matrix();
      IntMatrix block(n + m, a.cols() + b.cols());
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) block(i, j) = a(i, j);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
          block(n + i, a.cols() + j) = b(i, j);
      const CanonResult c = canonicalize_raw(n + m, x.chi(), block);
      if (c.is_zero()) continue;
      out.add_term(*c.rep, xc * yc * c.sign);
    }
  return out;
}

/// One summand of the coproduct of a basic term: the subspace V (as its
/// saturated lattice), the positions of the columns lying in V, the
/// separating shuffle sign, and the two canonicalized factors.
struct SubspaceRecord {
  SaturatedLattice lattice;
  std::vector<std::size_t> member_positions;
  int shuffle_sign = 1;
};

struct CoproductComponent {
  SubspaceRecord record;
  Element left;   // factor in the sublattice coordinates, grade (a, p)
  Element right;  // factor in the quotient coordinates, grade (b, q)
};

namespace detail {

struct SharblyHash {
  std::size_t operator()(const CanonicalSharbly& s) const { return s.hash(); }
};

inline std::unordered_map<CanonicalSharbly, std::vector<CoproductComponent>,
                          SharblyHash>&
coproduct_cache() {
  thread_local std::unordered_map<CanonicalSharbly,
                                  std::vector<CoproductComponent>, SharblyHash>
      cache;
  return cache;
}

}  // namespace detail

/// All coproduct summands of a single canonical sharbly: one per subspace
/// spanned by a subset of its columns (the zero subspace and the full space
/// always appear and produce 1 (x) x and x (x) 1).
inline std::vector<CoproductComponent> coproduct_components(
    const CanonicalSharbly& s) {
  auto& cache = detail::coproduct_cache();
  if (auto it = cache.find(s); it != cache.end()) return it->second;

  std::vector<CoproductComponent> out;
  const std::size_t n = s.n();
  const std::size_t m = n + s.k();
  const Character chi = s.chi();
  const IntMatrix& mat = s.matrix();

  if (s.is_unit()) {
    CoproductComponent comp;
    comp.record.lattice =
        SaturatedLattice{0, 0, IntMatrix(0, 0)};
    comp.record.shuffle_sign = 1;
    comp.left = Element::unit(chi);
    comp.right = Element::unit(chi);
    out.push_back(std::move(comp));
    cache.emplace(s, out);
    return out;
  }

  // Deduplicated saturations of the spans of all column subsets. The
  // canonical lattice basis is the dedup key.
  std::map<SaturatedLattice, bool> spaces;
  for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
    std::vector<std::vector<Int>> picked;
    for (std::size_t j = 0; j < m; ++j)
      if (mask & (std::size_t(1) << j)) picked.push_back(mat.column(j));
    spaces.emplace(saturate(IntMatrix::from_columns(n, picked)), true);
  }

  for (const auto& [lat, ignored] : spaces) {
    CoproductComponent comp;
    comp.record.lattice = lat;
    const std::size_t a = lat.rank, b = n - a;
    const IntMatrix quo = quotient_coords(lat);

    std::vector<std::size_t>& members = comp.record.member_positions;
    std::vector<std::vector<Int>> member_coords, quotient_cols;
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<Int> image = quo.apply(mat.column(j));
      bool in_v = true;
      for (const Int& e : image)
        if (sgn(e) != 0) {
          in_v = false;
          break;
        }
      if (in_v) {
        members.push_back(j);
        if (a > 0) {
          auto coords = lattice_coords(lat, mat.column(j));
          member_coords.push_back(std::move(*coords));
        }
      } else {
        quotient_cols.push_back(std::move(image));
      }
    }

    // sign of the shuffle separating members from non-members
    int sign = 1;
    for (std::size_t idx = 0; idx < members.size(); ++idx)
      if ((members[idx] - idx) % 2 != 0) sign = -sign;
    comp.record.shuffle_sign = sign;

    if (a == 0) {
      comp.left = Element::unit(chi);
    } else {
      const CanonResult c =
          canonicalize_raw(a, chi, IntMatrix::from_columns(a, member_coords));
      comp.left = c.is_zero() ? Element::zero(chi, a, members.size() - a)
                              : Element::term(Rat(c.sign), *c.rep);
    }
    if (b == 0) {
      comp.right = Element::unit(chi);
    } else {
      const CanonResult c =
          canonicalize_raw(b, chi, IntMatrix::from_columns(b, quotient_cols));
      comp.right = c.is_zero()
                       ? Element::zero(chi, b, m - members.size() - b)
                       : Element::term(Rat(c.sign), *c.rep);
    }
    out.push_back(std::move(comp));
  }
  cache.emplace(s, out);
  return out;
}

/// The coproduct, extended linearly over the terms of x.
inline TensorElement coproduct(const Element& x) {
  TensorElement out(x.chi());
  for (const auto& [s, coeff] : x.terms()) {
    for (const CoproductComponent& comp : coproduct_components(s)) {
      if (comp.left.is_zero() || comp.right.is_zero()) continue;
      const Rat c = coeff * comp.record.shuffle_sign;
      for (const auto& [ls, lc] : comp.left.terms())
        for (const auto& [rs, rc] : comp.right.terms())
          out.add_term(ls, rs, c * lc * rc);
    }
  }
  return out;
}

/// Coefficient of the unit sharbly; zero on positive total degree.
inline Rat counit(const Element& x) {
  if (x.is_zero() || x.total_degree() > 0) return Rat(0);
  return x.coefficient(CanonicalSharbly::unit(x.chi()));
}

/// Swaps tensor factors with the Koszul sign on total degrees.
inline TensorElement tensor_swap(const TensorElement& t) {
  TensorElement out(t.chi());
  for (const auto& [key, c] : t.terms()) {
    const std::size_t d = key.first.total_degree() * key.second.total_degree();
    out.add_term(key.second, key.first, d % 2 != 0 ? -c : c);
  }
  return out;
}

namespace detail {

inline std::unordered_map<CanonicalSharbly, Element, SharblyHash>&
antipode_cache() {
  thread_local std::unordered_map<CanonicalSharbly, Element, SharblyHash>
      cache;
  return cache;
}

inline Element antipode_sharbly(const CanonicalSharbly& s) {
  if (s.is_unit()) return Element::unit(s.chi());
  auto& cache = antipode_cache();
  if (auto it = cache.find(s); it != cache.end()) return it->second;

  // S(x) = -x - sum S(x') x'' over the reduced coproduct; the recursion
  // terminates because both factors of a reduced term have strictly
  // smaller total degree.
  TensorElement reduced = coproduct(Element::term(Rat(1), s));
  const Element self = Element::term(Rat(1), s);
  reduced -= tensor(self, Element::unit(s.chi()));
  reduced -= tensor(Element::unit(s.chi()), self);

  Element res = Element::term(Rat(-1), s);
  for (const auto& [key, c] : reduced.terms()) {
    const Element sa = antipode_sharbly(key.first);
    res += product(sa, Element::term(Rat(1), key.second)) * (-c);
  }
  cache.emplace(s, res);
  return res;
}

}  // namespace detail

/// Antipode of the connected bialgebra, defined by the standard recursion
/// over the reduced coproduct.
inline Element antipode(const Element& x) {
  Element out = Element::zero(x.chi(), x.n(), x.k());
  for (const auto& [s, c] : x.terms())
    out += detail::antipode_sharbly(s) * c;
  return out;
}

/// Whether the coproduct equals x (x) 1 + 1 (x) x exactly.
inline bool is_primitive(const Element& x) {
  TensorElement d = coproduct(x);
  const Element one = Element::unit(x.chi());
  d -= tensor(x, one);
  d -= tensor(one, x);
  return d.is_zero();
}

}  // namespace sharbly
