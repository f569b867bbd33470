#include <doctest.h>

#include <random>

#include "pcsp/affine.hpp"
#include "pcsp/lp.hpp"
#include "support.hpp"

using namespace pcsp;

TEST_CASE("rational basics") {
  CHECK(rational(2, 4) == rational(1, 2));
  CHECK(rational(0, 5) == Rational(0));
  CHECK(round_nearest(rational(1, 3)) == 0);
  CHECK(round_nearest(rational(2, 3)) == 1);
  CHECK(round_nearest(rational(-2, 3)) == -1);
  CHECK(round_nearest(rational(7, 2) + rational(1, 4)) == 4);
}

TEST_CASE("lp_feasible on pinned boxes") {
  LPProblem p(1);
  p.add({Rational(1)}, Cmp::Ge, 0);
  p.add({Rational(1)}, Cmp::Le, 1);
  p.add({Rational(1)}, Cmp::Eq, rational(1, 2));
  const LPResult r = lp_feasible(p);
  REQUIRE(r.feasible);
  CHECK(r.point[0] == rational(1, 2));

  LPProblem bad(1);
  bad.add({Rational(1)}, Cmp::Ge, 1);
  bad.add({Rational(1)}, Cmp::Le, 0);
  CHECK(!lp_feasible(bad).feasible);
}

TEST_CASE("lp_feasible hull vertex") {
  // Point of conv{e1, e2, e3} with the first coordinate pinned to 1 is e1.
  LPProblem p(6); // v1..v3, a1..a3
  auto row = [&](std::initializer_list<std::pair<int, int>> entries) {
    std::vector<Rational> r(6);
    for (auto [i, c] : entries) r[i] = c;
    return r;
  };
  for (int i = 3; i < 6; ++i) p.add(row({{i, 1}}), Cmp::Ge, 0);
  p.add(row({{3, 1}, {4, 1}, {5, 1}}), Cmp::Eq, 1);
  p.add(row({{3, 1}, {0, -1}}), Cmp::Eq, 0);
  p.add(row({{4, 1}, {1, -1}}), Cmp::Eq, 0);
  p.add(row({{5, 1}, {2, -1}}), Cmp::Eq, 0);
  p.pin(0, 1);
  const LPResult r = lp_feasible(p);
  REQUIRE(r.feasible);
  CHECK(r.point[0] == 1);
  CHECK(r.point[1] == 0);
  CHECK(r.point[2] == 0);
}

TEST_CASE("lp_feasible random consistency") {
  // Every feasible point substitutes exactly; pin-tightening never turns
  // infeasible into feasible.
  std::mt19937 rng(41);
  auto coef = [&]() { return rational(int(rng() % 7) - 3, 1 + int(rng() % 3)); };
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + int(rng() % 4);
    LPProblem p(n);
    const int rows = 1 + int(rng() % 5);
    for (int i = 0; i < rows; ++i) {
      std::vector<Rational> row(n);
      for (auto& c : row) c = coef();
      p.add(std::move(row), static_cast<Cmp>(rng() % 3), coef());
    }
    // Degenerate duplicates to stress the anti-cycling rule.
    if (rows >= 2 && (rng() & 1)) p.constraints.push_back(p.constraints[0]);

    const LPResult base = lp_feasible(p);
    if (base.feasible) CHECK(lp_point_satisfies(p, base.point));

    LPProblem pinned = p;
    pinned.pin(int(rng() % n), rational(int(rng() % 3) - 1));
    const LPResult tight = lp_feasible(pinned);
    if (tight.feasible) {
      CHECK(base.feasible); // monotone under pin-tightening
      CHECK(lp_point_satisfies(pinned, tight.point));
    }
  }
}

TEST_CASE("gauss_f2") {
  F2System odd_cycle(3);
  odd_cycle.add({0, 1}, 1);
  odd_cycle.add({1, 2}, 1);
  odd_cycle.add({0, 2}, 1);
  CHECK(!gauss_f2(odd_cycle).has_value());

  F2System single(2);
  single.add({0, 1}, 1);
  const auto sol = gauss_f2(single);
  REQUIRE(sol.has_value());
  CHECK(((*sol)[0] ^ (*sol)[1]) == 1);

  F2System empty(3);
  const auto zeros = gauss_f2(empty);
  REQUIRE(zeros.has_value());
  CHECK(*zeros == std::vector<std::uint8_t>(3, 0));

  // Repeated supports cancel.
  F2System rep(2);
  rep.add({0, 0, 1}, 1);
  const auto s2 = gauss_f2(rep);
  REQUIRE(s2.has_value());
  CHECK((*s2)[1] == 1);

  // Random systems: any returned solution satisfies every equation.
  std::mt19937 rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + int(rng() % 6);
    F2System sys(n);
    for (int e = 0; e < 1 + int(rng() % 6); ++e) {
      std::vector<int> sup;
      for (int v = 0; v < n; ++v)
        if (rng() & 1) sup.push_back(v);
      sys.add(std::move(sup), int(rng() & 1));
    }
    const auto s = gauss_f2(sys);
    if (!s) continue;
    for (const auto& eq : sys.equations) {
      int lhs = 0;
      for (int v : eq.support) lhs ^= (*s)[v];
      CHECK(lhs == eq.parity);
    }
  }
}

TEST_CASE("affine_hull_f2") {
  const auto h = affine_hull_f2(make_ham(2, weight_set({1})));
  CHECK(h.basis.size() == 1);
  CHECK(h.basis[0] == 0b11);
  CHECK(f2_hull_points(2, h) == make_ham(2, weight_set({1})));

  // Hull point set equals the parity closure, exhaustively for k <= 4.
  std::mt19937 rng(47);
  for (int trial = 0; trial < 80; ++trial) {
    const int k = 1 + int(rng() % 4);
    Relation r(k);
    for (std::uint32_t t = 0; t < r.tuple_count(); ++t)
      if (rng() % 3 == 0) r.insert(t);
    if (r.empty()) r.insert(rng() & (r.tuple_count() - 1));
    CHECK(f2_hull_points(k, affine_hull_f2(r)) == closure_parity(r));
  }
}

TEST_CASE("affine_hull_z") {
  const auto eqs = affine_hull_z(make_ham(3, weight_set({1})));
  REQUIRE(eqs.size() == 1);
  CHECK(eqs[0].coeffs == std::vector<Integer>{1, 1, 1});
  CHECK(eqs[0].rhs == 1);

  // A single point pins every coordinate.
  Relation pt(2);
  pt.insert(0b01);
  const auto eqs2 = affine_hull_z(pt);
  CHECK(eqs2.size() == 2);

  // Every member solves every equation; the solution set has the right
  // dimension (member rank check via the equation count).
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 1 + int(rng() % 4);
    Relation r(k);
    for (std::uint32_t t = 0; t < r.tuple_count(); ++t)
      if (rng() % 3 == 0) r.insert(t);
    if (r.empty()) r.insert(rng() & (r.tuple_count() - 1));
    const auto eqs3 = affine_hull_z(r);
    for (auto mtuple : r.members()) {
      for (const auto& eq : eqs3) {
        Integer lhs = 0;
        for (int i = 0; i < k; ++i)
          if ((mtuple >> i) & 1) lhs += eq.coeffs[i];
        CHECK(lhs == eq.rhs);
      }
    }
  }
}

TEST_CASE("solve_integer_linear") {
  {
    std::vector<std::vector<Integer>> a{{1, 1, 1}};
    std::vector<Integer> b{1};
    const auto x = solve_integer_linear(a, b);
    REQUIRE(x.has_value());
    CHECK((*x)[0] + (*x)[1] + (*x)[2] == 1);
  }
  {
    std::vector<std::vector<Integer>> a{{2}};
    std::vector<Integer> b{1};
    CHECK(!solve_integer_linear(a, b).has_value()); // 2x = 1 has no integer solution
  }
  {
    std::vector<std::vector<Integer>> a{{1, 2}, {2, 4}};
    std::vector<Integer> b{1, 3};
    CHECK(!solve_integer_linear(a, b).has_value()); // inconsistent multiples
  }
  std::mt19937 rng(59);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 1 + int(rng() % 4);
    const int m = 1 + int(rng() % 4);
    std::vector<std::vector<Integer>> a(m, std::vector<Integer>(n));
    for (auto& row : a)
      for (auto& c : row) c = int(rng() % 7) - 3;
    // Plant a solution so feasibility is known.
    std::vector<Integer> planted(n);
    for (auto& v : planted) v = int(rng() % 5) - 2;
    std::vector<Integer> b(m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) b[i] += a[i][j] * planted[j];
    const auto x = solve_integer_linear(a, b);
    REQUIRE(x.has_value());
    for (int i = 0; i < m; ++i) {
      Integer lhs = 0;
      for (int j = 0; j < n; ++j) lhs += a[i][j] * (*x)[j];
      CHECK(lhs == b[i]);
    }
  }
}
