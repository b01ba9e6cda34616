#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace sharbly {

/// Exact scalars. `Int` is an arbitrary-precision integer; `Rat` is a
/// rational kept in lowest terms with positive denominator (the mpq
/// canonical form). No floating point is used anywhere in this library.
using Int = mpz_class;
using Rat = mpq_class;

inline int sgn(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// g = s*a + t*b, g >= 0.
struct GcdExt {
  Int g, s, t;
};

inline GcdExt gcdext(const Int& a, const Int& b) {
  GcdExt r;
  mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

/// Floor quotient (remainder has the sign of the divisor).
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Rat make_rat(const Int& num, const Int& den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

/// SplitMix64 finalizer; used to derive independent per-sample seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Deterministic integer source: std::mt19937_64 (bit-exact per the C++
/// standard) with rejection sampling for range reduction. We avoid
/// std::uniform_int_distribution because its output is
/// implementation-defined; this generator reproduces identically on any
/// conforming platform.
class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [lo, hi], inclusive; lo <= hi required.
  long uniform(long lo, long hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi - lo) + 1ULL;  // hi >= lo
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t u;
    do {
      u = engine_();
    } while (u >= limit);
    return lo + static_cast<long>(u % span);
  }

  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sharbly
