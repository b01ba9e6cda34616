#pragma once

#include <array>
#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sharbly/dg_ops.hpp"
#include "sharbly/element.hpp"
#include "sharbly/errors.hpp"
#include "sharbly/tensor_element.hpp"

namespace sharbly {

enum class Axiom {
  d2,         // boundary of boundary vanishes
  leibniz,    // graded Leibniz rule for the boundary
  comm,       // graded commutativity of the product
  coassoc,    // coassociativity of the coproduct
  coleibniz,  // the coproduct is a coderivation
  compat,     // product/coproduct compatibility
  counit,     // counit laws
  antipode,   // antipode law against the unit/counit
};

inline const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::d2: return "d2";
    case Axiom::leibniz: return "leibniz";
    case Axiom::comm: return "comm";
    case Axiom::coassoc: return "coassoc";
    case Axiom::coleibniz: return "coleibniz";
    case Axiom::compat: return "compat";
    case Axiom::counit: return "counit";
    case Axiom::antipode: return "antipode";
  }
  return "?";
}

inline Axiom axiom_from_string(const std::string& s) {
  for (const Axiom a : {Axiom::d2, Axiom::leibniz, Axiom::comm, Axiom::coassoc,
                        Axiom::coleibniz, Axiom::compat, Axiom::counit,
                        Axiom::antipode})
    if (s == to_string(a)) return a;
  throw schema_error("unknown axiom '" + s + "'");
}

struct VerifyOptions {
  std::uint64_t samples = 1000;
  std::uint64_t seed = 42;
  std::size_t max_n = 4;
  std::size_t max_k = 3;
  long entry_bound = 3;
  Character chi = Character::trivial;
  /// Test fixture: flips one sign in the sign-bearing axiom checks
  /// (leibniz, comm, compat, coleibniz) so the harness can prove it
  /// notices a broken convention.
  bool corrupt_signs = false;
};

struct VerifyCounterexample {
  std::uint64_t sample_index = 0;
  std::vector<Element> inputs;
  std::string detail;
};

struct VerifyReport {
  Axiom axiom = Axiom::d2;
  VerifyOptions options;
  bool passed = true;
  std::uint64_t failed_count = 0;
  std::optional<VerifyCounterexample> first_counterexample;
  double wall_ms = 0.0;
};

namespace detail {

inline bool axiom_is_binary(Axiom a) {
  return a == Axiom::leibniz || a == Axiom::comm || a == Axiom::compat;
}

/// Per-sample inputs. Unary axioms draw one sharbly with n in [1, max_n],
/// k in [0, max_k]. Binary axioms split the bounds across the pair so the
/// product grade stays within (max_n, max_k) and every canonicalization
/// stays within the default width cap.
inline std::vector<Element> draw_sample(Axiom axiom, const VerifyOptions& opt,
                                        std::uint64_t index) {
  DetRng rng(splitmix64(splitmix64(opt.seed) + index));
  std::vector<Element> out;
  if (axiom_is_binary(axiom)) {
    if (opt.max_n < 2)
      throw domain_error("binary axiom needs max_n >= 2");
    const std::size_t n1 =
        static_cast<std::size_t>(rng.uniform(1, static_cast<long>(opt.max_n) - 1));
    const std::size_t n2 = static_cast<std::size_t>(
        rng.uniform(1, static_cast<long>(opt.max_n - n1)));
    const std::size_t k1 =
        static_cast<std::size_t>(rng.uniform(0, static_cast<long>(opt.max_k)));
    const std::size_t k2 = static_cast<std::size_t>(
        rng.uniform(0, static_cast<long>(opt.max_k - k1)));
    out.push_back(element_from(
        Rat(1), random_sharbly(n1, k1, opt.entry_bound, rng.next_u64(), opt.chi)));
    out.push_back(element_from(
        Rat(1), random_sharbly(n2, k2, opt.entry_bound, rng.next_u64(), opt.chi)));
  } else {
    const std::size_t n =
        static_cast<std::size_t>(rng.uniform(1, static_cast<long>(opt.max_n)));
    const std::size_t k =
        static_cast<std::size_t>(rng.uniform(0, static_cast<long>(opt.max_k)));
    out.push_back(element_from(
        Rat(1), random_sharbly(n, k, opt.entry_bound, rng.next_u64(), opt.chi)));
  }
  return out;
}

inline int koszul(std::size_t d1, std::size_t d2) {
  return (d1 * d2) % 2 != 0 ? -1 : +1;
}

using Triple = std::array<CanonicalSharbly, 3>;
struct TripleLess {
  bool operator()(const Triple& a, const Triple& b) const {
    for (int i = 0; i < 3; ++i) {
      const int c = a[i].compare(b[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }
};
using TripleMap = std::map<Triple, Rat, TripleLess>;

inline void accumulate_triple(TripleMap& acc, const Triple& key, const Rat& c) {
  auto [it, inserted] = acc.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

/// Runs one axiom instance; returns a failure description or nothing.
inline std::optional<std::string> check_axiom(Axiom axiom,
                                              const std::vector<Element>& in,
                                              bool corrupt) {
  switch (axiom) {
    case Axiom::d2: {
      if (!boundary(boundary(in[0])).is_zero())
        return "d(d(x)) is nonzero";
      return std::nullopt;
    }
    case Axiom::leibniz: {
      const Element &x = in[0], &y = in[1];
      int sign = x.total_degree() % 2 != 0 ? -1 : +1;
      if (corrupt) sign = -sign;
      const Element lhs = boundary(product(x, y));
      const Element rhs =
          product(boundary(x), y) + product(x, boundary(y)) * Rat(sign);
      if (lhs != rhs) return "d(xy) != (dx)y + (-1)^deg(x) x(dy)";
      return std::nullopt;
    }
    case Axiom::comm: {
      const Element &x = in[0], &y = in[1];
      int sign = koszul(x.total_degree(), y.total_degree());
      if (corrupt) sign = -sign;
      if (product(x, y) != product(y, x) * Rat(sign))
        return "xy != (-1)^(deg x . deg y) yx";
      return std::nullopt;
    }
    case Axiom::coassoc: {
      const TensorElement d = coproduct(in[0]);
      TripleMap left, right;
      for (const auto& [pair, c] : d.terms()) {
        for (const auto& [q, e] :
             coproduct(Element::term(Rat(1), pair.first)).terms())
          accumulate_triple(left, {q.first, q.second, pair.second}, c * e);
        for (const auto& [q, e] :
             coproduct(Element::term(Rat(1), pair.second)).terms())
          accumulate_triple(right, {pair.first, q.first, q.second}, c * e);
      }
      if (left != right) return "(Delta x 1)Delta != (1 x Delta)Delta";
      return std::nullopt;
    }
    case Axiom::coleibniz: {
      const Element& x = in[0];
      const TensorElement lhs = coproduct(boundary(x));
      TensorElement rhs(x.chi());
      for (const auto& [s, coeff] : x.terms()) {
        for (const CoproductComponent& comp : coproduct_components(s)) {
          if (comp.left.is_zero() || comp.right.is_zero()) continue;
          int inner = comp.record.member_positions.size() % 2 != 0 ? -1 : +1;
          if (corrupt) inner = -inner;
          const Rat outer = coeff * comp.record.shuffle_sign;
          for (const auto& [ls, lc] : boundary(comp.left).terms())
            for (const auto& [rs, rc] : comp.right.terms())
              rhs.add_term(ls, rs, outer * lc * rc);
          for (const auto& [ls, lc] : comp.left.terms())
            for (const auto& [rs, rc] : boundary(comp.right).terms())
              rhs.add_term(ls, rs, outer * inner * lc * rc);
        }
      }
      if (lhs != rhs) return "Delta(dx) disagrees with the coderivation sum";
      return std::nullopt;
    }
    case Axiom::compat: {
      const Element &x = in[0], &y = in[1];
      const TensorElement lhs = coproduct(product(x, y));
      TensorElement rhs(x.chi());
      for (const auto& [xp, xc] : coproduct(x).terms())
        for (const auto& [yp, yc] : coproduct(y).terms()) {
          int sign = koszul(xp.second.total_degree(), yp.first.total_degree());
          if (corrupt) sign = -sign;
          const Element p1 = product(Element::term(Rat(1), xp.first),
                                     Element::term(Rat(1), yp.first));
          const Element p2 = product(Element::term(Rat(1), xp.second),
                                     Element::term(Rat(1), yp.second));
          const Rat c = xc * yc * sign;
          for (const auto& [ls, lc] : p1.terms())
            for (const auto& [rs, rc] : p2.terms())
              rhs.add_term(ls, rs, c * lc * rc);
        }
      if (lhs != rhs)
        return "Delta(xy) != (prod x prod)(1 x swap x 1)(Delta x Delta)";
      return std::nullopt;
    }
    case Axiom::counit: {
      const Element& x = in[0];
      const TensorElement d = coproduct(x);
      Element left = Element::zero(x.chi(), x.n(), x.k());
      Element right = Element::zero(x.chi(), x.n(), x.k());
      for (const auto& [pair, c] : d.terms()) {
        if (pair.first.is_unit()) left += Element::term(c, pair.second);
        if (pair.second.is_unit()) right += Element::term(c, pair.first);
      }
      if (left != x) return "(counit x 1)Delta != id";
      if (right != x) return "(1 x counit)Delta != id";
      return std::nullopt;
    }
    case Axiom::antipode: {
      const Element& x = in[0];
      const Element expected = Element::unit(x.chi()) * counit(x);
      const TensorElement d = coproduct(x);
      Element left = Element::zero(x.chi(), x.n(), x.k());
      Element right = Element::zero(x.chi(), x.n(), x.k());
      for (const auto& [pair, c] : d.terms()) {
        left += product(antipode(Element::term(Rat(1), pair.first)),
                        Element::term(Rat(1), pair.second)) *
                c;
        right += product(Element::term(Rat(1), pair.first),
                         antipode(Element::term(Rat(1), pair.second))) *
                 c;
      }
      if (left != expected) return "prod(S x 1)Delta != unit.counit";
      if (right != expected) return "prod(1 x S)Delta != unit.counit";
      return std::nullopt;
    }
  }
  return "unreachable";
}

}  // namespace detail

/// Checks one axiom on seeded random samples; exact equality throughout.
/// Deterministic for a fixed seed (everything except wall_ms).
inline VerifyReport run_verify(Axiom axiom, const VerifyOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport report;
  report.axiom = axiom;
  report.options = opt;
  for (std::uint64_t i = 0; i < opt.samples; ++i) {
    const std::vector<Element> inputs = detail::draw_sample(axiom, opt, i);
    const auto failure = detail::check_axiom(axiom, inputs, opt.corrupt_signs);
    if (failure) {
      ++report.failed_count;
      if (!report.first_counterexample)
        report.first_counterexample =
            VerifyCounterexample{i, inputs, *failure};
    }
  }
  report.passed = report.failed_count == 0;
  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
  return report;
}

}  // namespace sharbly
