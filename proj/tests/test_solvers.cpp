#include <doctest.h>

#include <functional>
#include <random>

#include "pcsp/solvers.hpp"
#include "support.hpp"

using namespace pcsp;

namespace {

// All instances with exactly num_clauses ordered clauses over the family.
void for_each_instance(const Family& fam, int num_vars, int num_clauses,
                       const std::function<void(const Instance&)>& fn) {
  std::vector<Clause> choices;
  for (std::size_t ri = 0; ri < fam.size(); ++ri) {
    const int k = fam.pair(ri).arity();
    std::vector<int> vars(k, 0);
    while (true) {
      choices.push_back({static_cast<int>(ri), vars});
      int i = 0;
      while (i < k && ++vars[i] == num_vars) vars[i++] = 0;
      if (i == k) break;
    }
  }
  std::vector<std::size_t> pick(num_clauses, 0);
  while (true) {
    Instance inst;
    inst.num_vars = num_vars;
    for (auto p : pick) inst.clauses.push_back(choices[p]);
    fn(inst);
    int i = 0;
    while (i < num_clauses && ++pick[i] == choices.size()) pick[i++] = 0;
    if (i == num_clauses) break;
  }
}

void check_promise_sound(const Family& fam, const Instance& inst, const Verdict& v) {
  const Status s = brute_force_status(fam, inst, 25);
  if (s == Status::PSat) CHECK(v.yes());
  if (s == Status::QUnsat) CHECK(!v.yes());
  if (v.witness) CHECK(evaluate(fam, inst, *v.witness, Side::Q));
}

} // namespace

TEST_CASE("solve_constant") {
  const Family zeros =
      make_family({{make_ham(2, weight_set({0, 1})), make_ham(2, weight_set({0, 1}))}}, {"R"});
  Instance inst;
  inst.num_vars = 3;
  inst.clauses.push_back({0, {0, 1}});
  inst.clauses.push_back({0, {1, 2}});
  const Verdict v = solve_constant(zeros, inst, 0);
  CHECK(v.yes());
  REQUIRE(v.witness.has_value());
  CHECK(evaluate(zeros, inst, *v.witness, Side::Q));

  // A clause over an empty-P relation rejects outright.
  Relation empty2(2);
  const Family with_empty =
      make_family({{empty2, make_ham(2, weight_set_range(0, 2))}}, {"E"});
  Instance ge;
  ge.num_vars = 2;
  ge.clauses.push_back({0, {0, 1}});
  CHECK(!solve_constant(with_empty, ge, 0).yes());

  // Zero family via empty P, 0-tuple not in Q: still NO.
  Relation empty1(1);
  const Family odd = make_family({{empty1, make_ham(1, weight_set({1}))}}, {"E"});
  Instance g1;
  g1.num_vars = 1;
  g1.clauses.push_back({0, {0}});
  CHECK(!solve_constant(odd, g1, 0).yes());
}

TEST_CASE("solve_min_closed") {
  // add family on a symmetric pair: meet stays inside q.
  const Family andfam =
      make_family({{make_ham(2, weight_set({2})), make_ham(2, weight_set({1, 2}))}}, {"R"});
  Instance inst;
  inst.num_vars = 2;
  inst.clauses.push_back({0, {0, 1}});
  const Verdict v = solve_min_closed(andfam, inst, MeetJoin::Meet);
  CHECK(v.yes());
  REQUIRE(v.witness.has_value());

  // Horn-style implication chain with forced head.
  const Family horn = test::fam_horn(); // P = {(1,0),(1,1)}: x1 must hold
  Instance chain;
  chain.num_vars = 3;
  chain.clauses.push_back({0, {0, 1}});
  chain.clauses.push_back({0, {1, 2}});
  const Verdict vc = solve_min_closed(horn, chain, MeetJoin::Meet);
  CHECK(vc.yes());
  REQUIRE(vc.witness.has_value());
  CHECK((*vc.witness)[0]);
  CHECK((*vc.witness)[1]);

  // Contradictory forced literals.
  const Family units = make_family(
      {{make_ham(1, weight_set({1})), make_ham(1, weight_set({1}))},
       {make_ham(1, weight_set({0})), make_ham(1, weight_set({0}))}},
      {"ONE", "ZERO"});
  Instance contra;
  contra.num_vars = 1;
  contra.clauses.push_back({0, {0}});
  contra.clauses.push_back({1, {0}});
  CHECK(!solve_min_closed(units, contra, MeetJoin::Meet).yes());

  // Join mode mirrors meet through complementation.
  const Family orfam =
      make_family({{make_ham(2, weight_set({0})), make_ham(2, weight_set({0, 1}))}}, {"R"});
  Instance j;
  j.num_vars = 2;
  j.clauses.push_back({0, {0, 1}});
  const Verdict vj = solve_min_closed(orfam, j, MeetJoin::Join);
  CHECK(vj.yes());
  REQUIRE(vj.witness.has_value());
  CHECK(evaluate(orfam, j, *vj.witness, Side::Q));
}

TEST_CASE("solve_affine") {
  const Family notf = make_family({make_not()}, {"NOT"});
  Instance odd_cycle;
  odd_cycle.num_vars = 3;
  odd_cycle.clauses.push_back({0, {0, 1}});
  odd_cycle.clauses.push_back({0, {1, 2}});
  odd_cycle.clauses.push_back({0, {0, 2}});
  CHECK(!solve_affine(notf, odd_cycle).yes());

  Instance single;
  single.num_vars = 2;
  single.clauses.push_back({0, {0, 1}});
  const Verdict v = solve_affine(notf, single);
  CHECK(v.yes());
  REQUIRE(v.witness.has_value());
  CHECK(evaluate(notf, single, *v.witness, Side::Q));

  // A genuinely affine arity-3 relation.
  const Family aff =
      make_family({{make_ham(3, weight_set({1, 3})), make_ham(3, weight_set({1, 3}))}}, {"R"});
  Instance tri;
  tri.num_vars = 4;
  tri.clauses.push_back({0, {0, 1, 2}});
  tri.clauses.push_back({0, {1, 2, 3}});
  const Verdict vt = solve_affine(aff, tri);
  CHECK(vt.yes() == (brute_force_status(aff, tri) == Status::PSat));
}

TEST_CASE("solve_lp_decision on the hitting family") {
  const Family fam = test::fam_hitting();
  Instance yes;
  yes.num_vars = 3;
  yes.clauses.push_back({0, {0, 1, 2}});
  yes.clauses.push_back({1, {0, 1}});
  REQUIRE(brute_force_status(fam, yes) == Status::PSat);
  CHECK(solve_lp_decision(fam, yes, FamilyKind::At).yes());

  Instance no;
  no.num_vars = 1;
  no.clauses.push_back({0, {0, 0, 0}});
  CHECK(!solve_lp_decision(fam, no, FamilyKind::At).yes());
}

TEST_CASE("solve_at_affine") {
  const Family fam = test::fam_hitting();
  Instance no;
  no.num_vars = 1;
  no.clauses.push_back({0, {0, 0, 0}});
  CHECK(!solve_at_affine(fam, no).yes());

  Instance single;
  single.num_vars = 3;
  single.clauses.push_back({0, {0, 1, 2}});
  const Verdict v = solve_at_affine(fam, single);
  CHECK(v.yes());
  REQUIRE(v.witness.has_value());
  CHECK(evaluate(fam, single, *v.witness, Side::Q));
}

TEST_CASE("cross-solver agreement on non-gap instances") {
  // lp decision and the integer affine route agree wherever the status is
  // decided; gaps may differ, both being permitted either answer.
  const Family fam = test::fam_hitting();
  int checked = 0;
  for_each_instance(fam, 2, 2, [&](const Instance& inst) {
    const Status s = brute_force_status(fam, inst);
    if (s == Status::Gap) return;
    const Verdict a = solve_lp_decision(fam, inst, FamilyKind::At);
    const Verdict b = solve_at_affine(fam, inst);
    CHECK(a.yes() == b.yes());
    ++checked;
  });
  CHECK(checked > 100);
}

TEST_CASE("construct_solution") {
  const Family at = test::fam_hitting();
  Instance inst;
  inst.num_vars = 4;
  inst.clauses.push_back({0, {0, 1, 2}});
  inst.clauses.push_back({0, {1, 2, 3}});
  inst.clauses.push_back({1, {0, 1}});
  REQUIRE(brute_force_status(at, inst) == Status::PSat);
  REQUIRE(solve_lp_decision(at, inst, FamilyKind::At).yes());
  const auto w = construct_solution(at, inst, FamilyKind::At);
  REQUIRE(w.has_value());
  CHECK(evaluate(at, inst, *w, Side::Q));

  const Family maj = test::fam_two_eps_easy();
  Instance m;
  m.num_vars = 4;
  m.clauses.push_back({0, {0, 1, 2}});
  m.clauses.push_back({0, {1, 2, 3}});
  m.clauses.push_back({1, {0, 2}});
  REQUIRE(solve_lp_decision(maj, m, FamilyKind::Maj).yes());
  const auto wm = construct_solution(maj, m, FamilyKind::Maj);
  REQUIRE(wm.has_value());
  CHECK(evaluate(maj, m, *wm, Side::Q));

  Instance no;
  no.num_vars = 1;
  no.clauses.push_back({0, {0, 0, 0}});
  CHECK_THROWS_AS(construct_solution(at, no, FamilyKind::At), Error);

  // Witnesses stay valid across a deterministic random sample.
  std::mt19937 rng(61);
  int built = 0;
  while (built < 25) {
    const Instance r = test::random_instance(at, 3 + int(rng() % 3), 1 + int(rng() % 3), rng);
    if (!solve_lp_decision(at, r, FamilyKind::At).yes()) continue;
    const auto wr = construct_solution(at, r, FamilyKind::At);
    REQUIRE(wr.has_value());
    CHECK(evaluate(at, r, *wr, Side::Q));
    ++built;
  }
}

TEST_CASE("negate_q_transform") {
  const Family fam = test::fam_anti_parity();
  Instance inst;
  inst.num_vars = 5;
  inst.clauses.push_back({0, {0, 1, 2, 3, 4}});
  const auto [nfam, ninst] = negate_q_transform(fam, inst);
  CHECK(*symmetric_profile(nfam.pair(0).q) == SymmetricProfile{5, weight_set({0, 2, 3, 4})});
  CHECK(has_family(nfam, FamilyKind::Par));

  // Double flip restores the family.
  const auto [back, _] = negate_q_transform(nfam, ninst);
  for (std::size_t i = 0; i < fam.size(); ++i) CHECK(back.pair(i) == fam.pair(i));

  // Verdicts transfer verbatim: brute-force statuses agree on both sides
  // after negating the assignment.
  std::mt19937 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const Instance r = test::random_instance(fam, 3 + int(rng() % 3), 1 + int(rng() % 2), rng);
    const auto [nf, ni] = negate_q_transform(fam, r);
    CHECK(brute_force_status(fam, r) == brute_force_status(nf, ni));
  }

  // Not a promise pair after negation -> error.
  const Family bad = make_family({{make_ham(2, weight_set({0})),
                                   make_ham(2, weight_set({0, 1}))}},
                                 {"R"});
  Instance dummy;
  dummy.num_vars = 2;
  CHECK_THROWS_AS(negate_q_transform(bad, dummy), Error);
}

TEST_CASE("solve dispatch and promise soundness (small slice)") {
  struct Fixture {
    Family fam;
    const char* engine;
  };
  // "Not both ones" with a one-setting unit: zero/one fail, meet closes.
  Relation not_both(2);
  not_both.insert(0b00);
  not_both.insert(0b01);
  not_both.insert(0b10);
  const Family meet_fam =
      make_family({{not_both, not_both}, make_set_one()}, {"NB", "SET-ONE"});
  // "At least one" with a zero-setting unit: the dual situation.
  const Family join_fam = make_family(
      {{make_ham(2, weight_set({1, 2})), make_ham(2, weight_set({1, 2}))}, make_set_zero()},
      {"AL", "SET-ZERO"});

  const std::vector<Fixture> fixtures = {
      {make_family({{make_ham(2, weight_set({0, 1})), make_ham(2, weight_set({0, 1}))}}, {"R"}),
       "constant-zero"},
      {test::fam_horn(), "constant-zero"}, // the all-zero tuple sits in Q
      {meet_fam, "horn-meet"},
      {join_fam, "horn-join"},
      {make_family({make_not()}, {"NOT"}), "affine-f2"},
      {test::fam_two_eps_easy(), "lp-maj"},
      {test::fam_hitting(), "lp-at"},
      {test::fam_anti_parity(), "negate+affine-f2"},
      {test::fam_anti_majority(), "negate+lp-maj"},
  };
  std::mt19937 rng(71);
  for (const auto& fx : fixtures) {
    // Exhaustive tiny slice.
    for_each_instance(fx.fam, 2, 1, [&](const Instance& inst) {
      const Verdict v = solve(fx.fam, inst);
      CHECK(v.engine == fx.engine);
      check_promise_sound(fx.fam, inst, v);
    });
    // Deterministic random slice at larger sizes.
    for (int trial = 0; trial < 30; ++trial) {
      const Instance inst =
          test::random_instance(fx.fam, 3 + int(rng() % 4), 1 + int(rng() % 4), rng);
      check_promise_sound(fx.fam, inst, solve(fx.fam, inst));
    }
  }

  const Family hard = test::fam_two_eps_hard();
  Instance any;
  any.num_vars = 2;
  CHECK_THROWS_AS(solve(hard, any), Error);
}

TEST_CASE("verdict negation path keeps witnesses valid") {
  const Family fam = test::fam_anti_parity();
  std::mt19937 rng(73);
  int with_witness = 0;
  for (int trial = 0; trial < 40; ++trial) {
    const Instance inst = test::random_instance(fam, 5, 1 + int(rng() % 2), rng);
    const Verdict v = solve(fam, inst);
    check_promise_sound(fam, inst, v);
    if (v.witness) ++with_witness;
  }
  CHECK(with_witness > 0);
}
