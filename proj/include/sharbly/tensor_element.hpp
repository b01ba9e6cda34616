#pragma once

#include <map>
#include <utility>

#include "sharbly/element.hpp"
#include "sharbly/errors.hpp"
#include "sharbly/sharbly_types.hpp"

namespace sharbly {

/// Finitely supported rational combination of ordered pairs of canonical
/// sharblies; the codomain of the coproduct. Factors are individually
/// canonical and nonzero (the unit sharbly is allowed).
class TensorElement {
 public:
  using Key = std::pair<CanonicalSharbly, CanonicalSharbly>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      const int c = a.first.compare(b.first);
      if (c != 0) return c < 0;
      return a.second.compare(b.second) < 0;
    }
  };
  using TermMap = std::map<Key, Rat, KeyLess>;

  TensorElement() = default;
  explicit TensorElement(Character chi) : chi_(chi) {}

  static TensorElement zero(Character chi) { return TensorElement(chi); }

  Character chi() const { return chi_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }

  void add_term(const CanonicalSharbly& left, const CanonicalSharbly& right,
                const Rat& coeff) {
    if (sgn(coeff) == 0) return;
    if (left.chi() != chi_ || right.chi() != chi_)
      throw grade_error("tensor factor has mismatched character");
    auto [it, inserted] = terms_.emplace(Key{left, right}, coeff);
    if (!inserted) {
      it->second += coeff;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  TensorElement& operator+=(const TensorElement& o) {
    if (o.chi_ != chi_) throw grade_error("adding mismatched characters");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
  }

  TensorElement operator+(const TensorElement& o) const {
    TensorElement r = *this;
    r += o;
    return r;
  }

  TensorElement& operator-=(const TensorElement& o) {
    if (o.chi_ != chi_) throw grade_error("adding mismatched characters");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
  }

  TensorElement operator-() const {
    TensorElement r = *this;
    for (auto& [key, c] : r.terms_) c = -c;
    return r;
  }

  TensorElement operator-(const TensorElement& o) const {
    return *this + (-o);
  }

  TensorElement operator*(const Rat& c) const {
    TensorElement r(chi_);
    if (sgn(c) == 0) return r;
    r.terms_ = terms_;
    for (auto& [key, v] : r.terms_) v *= c;
    return r;
  }

  bool operator==(const TensorElement& o) const {
    return chi_ == o.chi_ && terms_ == o.terms_;
  }
  bool operator!=(const TensorElement& o) const { return !(*this == o); }

 private:
  Character chi_ = Character::trivial;
  TermMap terms_;
};

/// Bilinear tensor product of two elements.
inline TensorElement tensor(const Element& x, const Element& y) {
  if (x.chi() != y.chi())
    throw grade_error("tensor of mismatched characters");
  TensorElement t(x.chi());
  for (const auto& [xs, xc] : x.terms())
    for (const auto& [ys, yc] : y.terms()) t.add_term(xs, ys, xc * yc);
  return t;
}

}  // namespace sharbly
