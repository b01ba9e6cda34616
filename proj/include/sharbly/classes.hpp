#pragma once

#include <cstddef>

#include "sharbly/config.hpp"
#include "sharbly/dg_ops.hpp"
#include "sharbly/element.hpp"

namespace sharbly {

/// The wheel [e_1, ..., e_n, e_1-e_2, ..., e_{n-1}-e_n, e_n-e_1] in grade
/// (n, n) with trivial character, canonicalized. Zero for even n; for odd
/// n it is a primitive cycle. Needs width 2n, so the cap is raised locally.
inline Element wheel(std::size_t n) {
  if (n < 3) throw domain_error("wheel: n >= 3 required");
  IntMatrix cols(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) cols(i, i) = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    cols(i, n + i) = 1;
    cols(i + 1, n + i) = -1;
  }
  cols(n - 1, 2 * n - 1) = 1;
  cols(0, 2 * n - 1) = -1;
  config::MaxColsGuard guard(2 * n);
  return element_from(Rat(1), BasicSharbly(n, Character::trivial, cols));
}

/// Generator of the rank-one degree-(1, 0) piece: the class of [1].
inline Element t1() {
  IntMatrix one(1, 1);
  one(0, 0) = 1;
  return element_from(Rat(1), BasicSharbly(1, Character::trivial, one));
}

inline bool is_cycle(const Element& x) { return boundary(x).is_zero(); }

/// [e_1, e_2, e_1+e_2] with the determinant twist: a verified nonzero
/// cycle in grade (2, 1). Whether it represents anything at homology level
/// is deliberately not claimed.
inline Element t2_cycle_candidate() {
  return element_from(Rat(1),
                      BasicSharbly(2, Character::determinant,
                                   IntMatrix::of({{1, 0, 1}, {0, 1, 1}})));
}

}  // namespace sharbly
