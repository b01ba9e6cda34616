#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "sharbly/canonicalize.hpp"
#include "sharbly/errors.hpp"
#include "sharbly/numeric.hpp"
#include "sharbly/sharbly_types.hpp"

namespace sharbly {

/// Finitely supported rational linear combination of canonical sharblies,
/// homogeneous in the bigrade (n, k). The empty combination is the zero
/// element; its stored grade is informational only and equality treats all
/// zero elements of the same character as equal.
class Element {
 public:
  using TermMap = std::map<CanonicalSharbly, Rat>;

  Element() = default;

  static Element zero(Character chi, std::size_t n = 0, std::size_t k = 0) {
    Element e;
    e.chi_ = chi;
    e.n_ = n;
    e.k_ = k;
    return e;
  }

  static Element unit(Character chi) {
    return term(Rat(1), CanonicalSharbly::unit(chi));
  }

  static Element term(const Rat& coeff, const CanonicalSharbly& s) {
    Element e = zero(s.chi(), s.n(), s.k());
    e.add_term(s, coeff);
    return e;
  }

  Character chi() const { return chi_; }
  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t total_degree() const { return n_ + k_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  Rat coefficient(const CanonicalSharbly& s) const {
    const auto it = terms_.find(s);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  /// Accumulates coeff * s, enforcing grade and character homogeneity.
  void add_term(const CanonicalSharbly& s, const Rat& coeff) {
    if (sgn(coeff) == 0) return;
    if (s.chi() != chi_)
      throw grade_error("element term has mismatched character");
    if (terms_.empty()) {
      n_ = s.n();
      k_ = s.k();
    } else if (s.n() != n_ || s.k() != k_) {
      throw grade_error("element terms have mixed bigrades");
    }
    auto [it, inserted] = terms_.emplace(s, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  Element& operator+=(const Element& o) {
    if (o.chi_ != chi_) throw grade_error("adding mismatched characters");
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
  }

  Element operator+(const Element& o) const {
    Element r = *this;
    r += o;
    return r;
  }

  Element operator-() const {
    Element r = *this;
    for (auto& [s, c] : r.terms_) c = -c;
    return r;
  }

  Element operator-(const Element& o) const { return *this + (-o); }

  Element operator*(const Rat& c) const {
    Element r = zero(chi_, n_, k_);
    if (sgn(c) == 0) return r;
    r.terms_ = terms_;
    for (auto& [s, v] : r.terms_) v *= c;
    return r;
  }

  bool operator==(const Element& o) const {
    return chi_ == o.chi_ && terms_ == o.terms_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }

 private:
  Character chi_ = Character::trivial;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  TermMap terms_;
};

inline Element operator*(const Rat& c, const Element& e) { return e * c; }

/// Canonicalizes every term and folds the resulting signs into the
/// coefficients. All inputs must share (n, k, chi).
inline Element element_from(
    const std::vector<std::pair<Rat, BasicSharbly>>& terms) {
  if (terms.empty())
    throw std::invalid_argument("element_from: no terms (grade unknown)");
  const BasicSharbly& first = terms.front().second;
  Element out = Element::zero(first.chi, first.n, first.k());
  for (const auto& [coeff, basic] : terms) {
    if (basic.n != first.n || basic.k() != first.k() ||
        basic.chi != first.chi)
      throw grade_error("element_from: mixed grades or characters");
    const CanonResult c = canonicalize(basic);
    if (c.is_zero()) continue;
    out.add_term(*c.rep, coeff * c.sign);
  }
  return out;
}

inline Element element_from(const Rat& coeff, const BasicSharbly& basic) {
  return element_from(
      std::vector<std::pair<Rat, BasicSharbly>>{{coeff, basic}});
}

/// Seed-deterministic generator of basic sharblies: entries uniform in
/// [-entry_bound, entry_bound] via DetRng, columns redrawn until nonzero.
inline BasicSharbly random_sharbly(std::size_t n, std::size_t k,
                                   long entry_bound, std::uint64_t seed,
                                   Character chi = Character::trivial) {
  if (n < 1) throw std::invalid_argument("random_sharbly: n >= 1 required");
  if (entry_bound < 1)
    throw std::invalid_argument("random_sharbly: entry_bound >= 1 required");
  DetRng rng(seed);
  const std::size_t m = n + k;
  IntMatrix cols(n, m);
  for (std::size_t j = 0; j < m; ++j) {
    bool nonzero = false;
    while (!nonzero) {
      for (std::size_t i = 0; i < n; ++i) {
        const long v = rng.uniform(-entry_bound, entry_bound);
        cols(i, j) = v;
        if (v != 0) nonzero = true;
      }
    }
  }
  return BasicSharbly(n, chi, std::move(cols));
}

}  // namespace sharbly
