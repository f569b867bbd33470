#include <doctest.h>

#include <random>

#include "pcsp/oracle.hpp"
#include "support.hpp"

using namespace pcsp;

TEST_CASE("make_ham basics") {
  const Relation not_rel = make_ham(2, weight_set({1}));
  CHECK(not_rel.size() == 2);
  CHECK(not_rel.contains(0b01));
  CHECK(not_rel.contains(0b10));
  CHECK(!not_rel.contains(0b00));

  const Relation set_zero = make_ham(1, weight_set({0}));
  CHECK(set_zero.size() == 1);
  CHECK(set_zero.contains(0));

  const Relation all_equal = make_ham(3, weight_set({0, 3}));
  CHECK(all_equal.size() == 2);
  CHECK(all_equal.contains(0b000));
  CHECK(all_equal.contains(0b111));

  CHECK_THROWS_AS(make_ham(2, weight_set({3})), Error);
}

TEST_CASE("symmetric_profile round trip and rejection") {
  // Round trip on every (k, S) pair up to arity 5.
  for (int k = 1; k <= 5; ++k) {
    for (WeightSet s = 0; s <= weight_set_full(k); ++s) {
      const auto prof = symmetric_profile(make_ham(k, s));
      REQUIRE(prof.has_value());
      CHECK(prof->arity == k);
      CHECK(prof->weights == s);
    }
  }
  Relation lop(2);
  lop.insert(0b10); // (0,1) present, (1,0) missing
  CHECK(!symmetric_profile(lop).has_value());

  const Relation empty3(3);
  const auto prof = symmetric_profile(empty3);
  REQUIRE(prof.has_value());
  CHECK(prof->weights == 0);
}

TEST_CASE("flip") {
  CHECK(flip(make_ham(3, weight_set({1})), 0b111) == make_ham(3, weight_set({2})));
  const Relation r = make_ham(4, weight_set({1, 2}));
  CHECK(flip(r, 0) == r);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 1 + static_cast<int>(rng() % 5);
    Relation rnd(k);
    for (std::uint32_t t = 0; t < rnd.tuple_count(); ++t)
      if (rng() & 1) rnd.insert(t);
    const std::uint32_t coords = rng() & (rnd.tuple_count() - 1) & ((1u << k) - 1);
    const Relation once = flip(rnd, coords);
    CHECK(once.size() == rnd.size());
    CHECK(flip(once, coords) == rnd);
  }

  // Full flip of a symmetric relation mirrors the weights.
  for (int k = 1; k <= 5; ++k) {
    for (WeightSet s = 0; s <= weight_set_full(k); ++s) {
      const auto prof = symmetric_profile(flip_all(make_ham(k, s)));
      REQUIRE(prof.has_value());
      WeightSet mirrored = 0;
      for (int w = 0; w <= k; ++w)
        if (weight_in(s, w)) mirrored |= WeightSet{1} << (k - w);
      CHECK(prof->weights == mirrored);
    }
  }
}

TEST_CASE("promise relation validation") {
  CHECK_THROWS_AS(PromiseRelation(make_ham(3, weight_set({1})), make_ham(3, weight_set({0}))),
                  Error);
  CHECK_THROWS_AS(PromiseRelation(make_ham(2, weight_set({1})), make_ham(3, weight_set({1}))),
                  Error);
}

TEST_CASE("make_family flags") {
  const Family f1 = make_family({make_not()}, {"NOT"});
  CHECK(f1.contains_not());
  CHECK(f1.all_symmetric());
  CHECK(!f1.contains_set_zero());

  const Family f2 = test::fam_two_eps_easy();
  CHECK(f2.contains_not());
  CHECK(f2.all_symmetric());
  CHECK(f2.max_arity() == 3);

  const Family f3 = test::fam_horn();
  CHECK(!f3.all_symmetric());
  CHECK(!f3.contains_not());

  const Family f4 = make_family({make_set_zero(), make_set_one(), make_not()});
  CHECK(f4.contains_set_zero());
  CHECK(f4.contains_set_one());
}

TEST_CASE("evaluate") {
  const Family fam = make_family({make_not()}, {"NOT"});
  Instance inst;
  inst.num_vars = 2;
  inst.clauses.push_back({0, {0, 1}});
  CHECK(evaluate(fam, inst, Assignment({0, 1}), Side::P));
  CHECK(!evaluate(fam, inst, Assignment({1, 1}), Side::P));
  CHECK_THROWS_AS(evaluate(fam, inst, Assignment({0, 1, 0}), Side::P), Error);

  const Family gap = test::fam_two_eps_easy();
  Instance inst2;
  inst2.num_vars = 3;
  inst2.clauses.push_back({0, {0, 1, 2}});
  const Assignment a({1, 0, 0});
  CHECK(evaluate(gap, inst2, a, Side::Q));
  CHECK(!evaluate(gap, inst2, a, Side::P));
}

TEST_CASE("brute_force_status") {
  const Family fam = make_family({make_not()}, {"NOT"});
  Instance ok;
  ok.num_vars = 2;
  ok.clauses.push_back({0, {0, 1}});
  CHECK(brute_force_status(fam, ok) == Status::PSat);

  Instance bad;
  bad.num_vars = 1;
  bad.clauses.push_back({0, {0, 0}});
  CHECK(brute_force_status(fam, bad) == Status::QUnsat);

  const Family oit = make_family(
      {{make_ham(3, weight_set({1})), make_ham(3, weight_set({1, 2}))}}, {"R"});
  Instance rep;
  rep.num_vars = 1;
  rep.clauses.push_back({0, {0, 0, 0}});
  CHECK(brute_force_status(fam, bad) == Status::QUnsat);
  CHECK(brute_force_status(oit, rep) == Status::QUnsat);

  // An empty-P relation makes every instance using it gap or q-unsat.
  Relation empty2(2);
  const Family gap_fam = make_family({{empty2, make_ham(2, weight_set_range(0, 2))}}, {"E"});
  Instance g;
  g.num_vars = 2;
  g.clauses.push_back({0, {0, 1}});
  CHECK(brute_force_status(gap_fam, g) == Status::Gap);

  Instance too_big;
  too_big.num_vars = 25;
  CHECK_THROWS_AS(brute_force_status(gap_fam, too_big), Error);

  // PSat and QUnsat are mutually exclusive over random gap-prone inputs.
  std::mt19937 rng(11);
  const Family mixed = test::fam_hitting();
  for (int trial = 0; trial < 60; ++trial) {
    const Instance inst = test::random_instance(mixed, 3 + int(rng() % 3), 1 + int(rng() % 3), rng);
    const Status s = brute_force_status(mixed, inst);
    const bool p_sat = brute_force_solution(mixed, inst, Side::P).has_value();
    const bool q_sat = brute_force_solution(mixed, inst, Side::Q).has_value();
    CHECK((s == Status::PSat) == p_sat);
    CHECK((s == Status::QUnsat) == !q_sat);
  }
}
