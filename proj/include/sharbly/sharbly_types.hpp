#pragma once

#include <cstddef>
#include <string>

#include "sharbly/errors.hpp"
#include "sharbly/int_matrix.hpp"

namespace sharbly {

/// Character of Z^x = {+1, -1}: trivial, or the determinant twist. The
/// stored value is chi(-1).
enum class Character : int {
  trivial = +1,
  determinant = -1,
};

inline int chi_minus_one(Character c) { return static_cast<int>(c); }

/// chi applied to a unit determinant (+1 or -1).
inline int chi_of_det(Character c, int det_sign) {
  return det_sign < 0 ? chi_minus_one(c) : +1;
}

inline const char* to_string(Character c) {
  return c == Character::trivial ? "triv" : "det";
}

inline Character character_from_string(const std::string& s) {
  if (s == "triv") return Character::trivial;
  if (s == "det") return Character::determinant;
  throw schema_error("unknown character '" + s + "' (expected triv or det)");
}

/// A generator [v_1, ..., v_{n+k}] of rank n: an ordered tuple of n+k
/// nonzero integer column vectors in Z^n, stored as an n x (n+k) matrix.
struct BasicSharbly {
  std::size_t n = 0;
  Character chi = Character::trivial;
  IntMatrix cols;

  BasicSharbly(std::size_t rank, Character character, IntMatrix columns)
      : n(rank), chi(character), cols(std::move(columns)) {
    if (n < 1) throw std::invalid_argument("BasicSharbly: rank must be >= 1");
    if (cols.rows() != n)
      throw std::invalid_argument("BasicSharbly: column length mismatch");
    if (cols.cols() < n)
      throw std::invalid_argument("BasicSharbly: fewer columns than rank");
    for (std::size_t j = 0; j < cols.cols(); ++j) {
      bool nonzero = false;
      for (std::size_t i = 0; i < n; ++i)
        if (sgn(cols(i, j)) != 0) {
          nonzero = true;
          break;
        }
      if (!nonzero) throw std::invalid_argument("BasicSharbly: zero column");
    }
  }

  std::size_t k() const { return cols.cols() - n; }
};

/// Canonical orbit representative of a nonzero coinvariant sharbly: the
/// unique minimum over the full orbit (left GL_n(Z), column signs, column
/// permutations) of the Hermite forms, under the fixed matrix order.
/// n = k = 0 with an empty matrix is the unit.
class CanonicalSharbly {
 public:
  CanonicalSharbly(std::size_t n, std::size_t k, Character chi, IntMatrix mat)
      : n_(n), k_(k), chi_(chi), mat_(std::move(mat)) {}

  static CanonicalSharbly unit(Character chi) {
    return CanonicalSharbly(0, 0, chi, IntMatrix(0, 0));
  }

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  std::size_t total_degree() const { return n_ + k_; }
  Character chi() const { return chi_; }
  const IntMatrix& matrix() const { return mat_; }
  bool is_unit() const { return n_ == 0 && k_ == 0; }

  bool operator==(const CanonicalSharbly& o) const {
    return n_ == o.n_ && k_ == o.k_ && chi_ == o.chi_ && mat_ == o.mat_;
  }
  bool operator!=(const CanonicalSharbly& o) const { return !(*this == o); }

  int compare(const CanonicalSharbly& o) const {
    if (n_ != o.n_) return n_ < o.n_ ? -1 : 1;
    if (k_ != o.k_) return k_ < o.k_ ? -1 : 1;
    if (chi_ != o.chi_)
      return chi_minus_one(chi_) < chi_minus_one(o.chi_) ? -1 : 1;
    return mat_.compare(o.mat_);
  }
  bool operator<(const CanonicalSharbly& o) const { return compare(o) < 0; }

  std::size_t hash() const {
    return mat_.hash() ^ (n_ * 0x9E3779B97F4A7C15ULL) ^
           (k_ * 0xC2B2AE3D27D4EB4FULL) ^
           (chi_ == Character::trivial ? 0x165667B1ULL : 0x27220A95ULL);
  }

 private:
  std::size_t n_, k_;
  Character chi_;
  IntMatrix mat_;
};

}  // namespace sharbly
