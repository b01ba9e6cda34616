#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sharbly/exact_linalg.hpp"
#include "sharbly/numeric.hpp"

using namespace sharbly;

namespace {

IntMatrix random_matrix(DetRng& rng, std::size_t rows, std::size_t cols,
                        long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

IntMatrix random_full_row_rank(DetRng& rng, std::size_t rows, std::size_t cols,
                               long bound) {
  while (true) {
    IntMatrix m = random_matrix(rng, rows, cols, bound);
    if (oracle::bareiss_rank(m) == rows) return m;
  }
}

}  // namespace

TEST_CASE("row_hnf on the frozen examples") {
  {
    const auto [h, det] = row_hnf(IntMatrix::identity(2));
    CHECK(h == IntMatrix::identity(2));
    CHECK(det == +1);
  }
  {
    const auto [h, det] = row_hnf(IntMatrix::of({{2, 1}, {0, 1}}));
    CHECK(h == IntMatrix::of({{2, 0}, {0, 1}}));
    CHECK(det == +1);
  }
  {
    const auto [h, det] = row_hnf(IntMatrix::of({{0, 1}, {1, 0}}));
    CHECK(h == IntMatrix::identity(2));
    CHECK(det == -1);
  }
}

TEST_CASE("row_hnf agrees with the brute-force unimodular reduction oracle") {
  for (const IntMatrix& m : {IntMatrix::of({{2, 1}, {0, 1}}),
                             IntMatrix::of({{0, 1}, {1, 0}}),
                             IntMatrix::of({{2, 4}, {1, 3}}),
                             IntMatrix::of({{-1, 2}, {3, 1}})}) {
    const auto forms = oracle::bfs_hnf_forms(m, 12, 6);
    REQUIRE(forms.size() == 1);  // the convention pins a unique orbit form
    const auto& [form, dets] = *forms.begin();
    REQUIRE(dets.size() == 1);
    const auto [h, det] = row_hnf(m);
    CHECK(h == form);
    CHECK(det == *dets.begin());
  }
}

TEST_CASE("row_hnf rejects rank-deficient input") {
  CHECK_THROWS_AS(row_hnf(IntMatrix::of({{1, 2}, {2, 4}})),
                  std::invalid_argument);
}

TEST_CASE("row_hnf output satisfies the convention and is idempotent") {
  DetRng rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t m = n + trial % 3;
    const IntMatrix a = random_full_row_rank(rng, n, m, 5);
    const auto [h, det] = row_hnf(a);
    CHECK(oracle::is_row_hnf_form(h));
    CHECK((det == 1 || det == -1));
    const auto [h2, det2] = row_hnf(h);
    CHECK(h2 == h);
    CHECK(det2 == +1);
  }
}

TEST_CASE("row_hnf orbit soundness under random unimodular action") {
  DetRng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t m = n + trial % 3;
    const IntMatrix a = random_full_row_rank(rng, n, m, 4);
    const auto [u, udet] = oracle::random_gl(n, rng);
    const auto [h1, d1] = row_hnf(a);
    const auto [h2, d2] = row_hnf(u * a);
    CHECK(h1 == h2);
    CHECK(d2 == d1 * udet);
  }
}

TEST_CASE("hnf transform is unimodular and reproduces H") {
  DetRng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + trial % 5;
    const IntMatrix a = random_matrix(rng, rows, cols, 5);
    const HnfResult res = hnf_general(a);
    CHECK(res.u * a == res.h);
    const Int ud = oracle::cofactor_det(res.u);
    CHECK((ud == 1 || ud == -1));
    CHECK(Int(res.det_sign) == ud);
    CHECK(res.rank == oracle::bareiss_rank(a));
  }
}

TEST_CASE("rank_rational examples and oracle agreement") {
  CHECK(rank_rational(IntMatrix(3, 4)) == 0);
  CHECK(rank_rational(IntMatrix::identity(5)) == 5);
  CHECK(rank_rational(IntMatrix::of({{1, 2}, {2, 4}})) == 1);
  DetRng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const IntMatrix a =
        random_matrix(rng, 1 + trial % 5, 1 + (trial / 2) % 5, 4);
    CHECK(rank_rational(a) == oracle::bareiss_rank(a));
  }
}

TEST_CASE("saturate on the worked examples") {
  {
    IntMatrix col(2, 1);
    col(0, 0) = 2;
    const SaturatedLattice lat = saturate(col);
    CHECK(lat.rank == 1);
    CHECK(lat.basis == IntMatrix::of({{1}, {0}}));
  }
  {
    const SaturatedLattice lat = saturate(IntMatrix::identity(2));
    CHECK(lat.rank == 2);
    CHECK(lat.basis == IntMatrix::identity(2));
  }
  {
    const SaturatedLattice lat = saturate(IntMatrix(2, 0));
    CHECK(lat.rank == 0);
    CHECK(lat.basis.cols() == 0);
  }
}

TEST_CASE("saturate matches span membership over a box of integer points") {
  DetRng rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 2;  // ambient 2 or 3
    const IntMatrix span =
        random_matrix(rng, n, static_cast<std::size_t>(rng.uniform(0, 3)), 2);
    const SaturatedLattice lat = saturate(span);
    CHECK(lat.rank == oracle::bareiss_rank(span));
    // every box point: in Q-span  <=>  integer coordinates in the lattice
    const long bound = 2;
    std::vector<Int> v(n);
    std::vector<long> idx(n, -bound);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) v[i] = idx[i];
      const bool in_span = oracle::in_rational_span(span, v);
      const bool in_lattice = lattice_coords(lat, v).has_value();
      CHECK(in_span == in_lattice);
      std::size_t d = 0;
      while (d < n && idx[d] == bound) idx[d++] = -bound;
      if (d == n) break;
      ++idx[d];
    }
  }
}

TEST_CASE("saturate is a closure operator with canonical bases") {
  DetRng rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix span =
        random_matrix(rng, n, static_cast<std::size_t>(rng.uniform(0, 4)), 3);
    const SaturatedLattice lat = saturate(span);
    const SaturatedLattice again = saturate(lat.basis);
    CHECK(lat == again);
    if (lat.rank > 0)
      CHECK(oracle::is_row_hnf_form(lat.basis.transposed()));
  }
}

TEST_CASE("lattice_coords on the worked examples") {
  const SaturatedLattice full = saturate(IntMatrix::identity(2));
  const auto c1 = lattice_coords(full, int_vector({1, 0}));
  REQUIRE(c1.has_value());
  CHECK((*c1)[0] == 1);
  CHECK((*c1)[1] == 0);

  IntMatrix e2(2, 1);
  e2(1, 0) = 1;
  const SaturatedLattice line = saturate(e2);
  const auto c2 = lattice_coords(line, int_vector({0, 2}));
  REQUIRE(c2.has_value());
  REQUIRE(c2->size() == 1);
  CHECK((*c2)[0] == 2);
  CHECK(!lattice_coords(line, int_vector({1, 0})).has_value());
}

TEST_CASE("lattice_coords round-trips integer coordinates") {
  DetRng rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const SaturatedLattice lat =
        saturate(random_matrix(rng, n, static_cast<std::size_t>(rng.uniform(1, 4)), 3));
    std::vector<Int> c(lat.rank);
    for (auto& x : c) x = rng.uniform(-6, 6);
    const auto back = lattice_coords(lat, lat.basis.apply(c));
    REQUIRE(back.has_value());
    CHECK(*back == c);
  }
}

TEST_CASE("quotient_coords on the worked examples") {
  {
    IntMatrix e1(2, 1);
    e1(0, 0) = 1;
    const IntMatrix q = quotient_coords(saturate(e1));
    CHECK(q == IntMatrix::of({{0, 1}}));
  }
  {
    const IntMatrix q = quotient_coords(saturate(IntMatrix::identity(3)));
    CHECK(q.rows() == 0);
  }
  {
    const IntMatrix q = quotient_coords(saturate(IntMatrix(2, 0)));
    CHECK(q == IntMatrix::identity(2));
  }
}

TEST_CASE("quotient_coords: kernel is exactly the lattice, map is onto") {
  DetRng rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 2;
    const SaturatedLattice lat =
        saturate(random_matrix(rng, n, static_cast<std::size_t>(rng.uniform(0, 3)), 2));
    const IntMatrix q = quotient_coords(lat);
    REQUIRE(q.rows() == n - lat.rank);
    // composed with the inclusion of L: the zero map
    if (lat.rank > 0) CHECK((q * lat.basis).is_zero());
    // deterministic
    CHECK(q == quotient_coords(lat));
    // kernel exactness on a box of integer points
    std::vector<Int> v(n);
    std::vector<long> idx(n, -2);
    while (true) {
      for (std::size_t i = 0; i < n; ++i) v[i] = idx[i];
      bool killed = true;
      for (const Int& e : q.apply(v))
        if (sgn(e) != 0) killed = false;
      CHECK(killed == lattice_coords(lat, v).has_value());
      std::size_t d = 0;
      while (d < n && idx[d] == 2) idx[d++] = -2;
      if (d == n) break;
      ++idx[d];
    }
    // surjectivity: gcd of maximal minors is 1
    if (q.rows() > 0) {
      const std::size_t r = q.rows();
      std::vector<std::size_t> pick(r);
      Int g = 0;
      std::vector<bool> mask(n, false);
      std::fill(mask.begin(), mask.begin() + static_cast<long>(r), true);
      std::sort(mask.begin(), mask.end());
      do {
        IntMatrix sub(r, r);
        std::size_t t = 0;
        for (std::size_t j = 0; j < n; ++j) {
          if (!mask[j]) continue;
          for (std::size_t i = 0; i < r; ++i) sub(i, t) = q(i, j);
          ++t;
        }
        g = gcd(g, oracle::cofactor_det(sub));
      } while (std::next_permutation(mask.begin(), mask.end()));
      CHECK(g == 1);
    }
  }
}

TEST_CASE("solve_rational on the worked examples") {
  {
    const std::vector<Rat> b{Rat(1, 2), Rat(-3)};
    const auto x = solve_rational(IntMatrix::identity(2), b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
  }
  {
    // x + y = 1 and x + y = 2 cannot both hold
    const auto x = solve_rational(IntMatrix::of({{1, 1}, {1, 1}}),
                                  {Rat(1), Rat(2)});
    CHECK(!x.has_value());
  }
  {
    const auto x = solve_rational(IntMatrix::of({{1, 1}}), {Rat(2)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] == Rat(2));
  }
}

TEST_CASE("solve_rational: substitution check against rank-based solvability") {
  DetRng rng(71);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 3) % 4;
    const IntMatrix a = random_matrix(rng, rows, cols, 3);
    std::vector<Rat> b(rows);
    for (auto& e : b) e = make_rat(Int(rng.uniform(-4, 4)), Int(rng.uniform(1, 3)));
    const auto x = solve_rational(a, b);
    // solvable iff appending b does not raise the rank
    IntMatrix ext(rows, cols + 1);
    Int scale = 1;
    for (const Rat& e : b) scale *= e.get_den();
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) ext(i, j) = a(i, j) * scale;
      Rat v = b[i] * Rat(scale);
      v.canonicalize();
      ext(i, cols) = v.get_num();
    }
    const bool solvable =
        oracle::bareiss_rank(ext) == oracle::bareiss_rank(a);
    CHECK(x.has_value() == solvable);
    if (x.has_value()) {
      for (std::size_t i = 0; i < rows; ++i) {
        Rat acc(0);
        for (std::size_t j = 0; j < cols; ++j) acc += Rat(a(i, j)) * (*x)[j];
        CHECK(acc == b[i]);
      }
    }
  }
}
