#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "spg/equilibria.hpp"
#include "spg/factory.hpp"
#include "spg/metrics.hpp"
#include "spg/report.hpp"

using namespace spg;
using testing_support::example_one;
using testing_support::profile;
using testing_support::r;

namespace {

GeneratorSpec asym32() {
  GeneratorSpec s;
  s.family = Family::ex_asym;
  s.p = 3;
  s.q = 2;
  return s;
}

GeneratorSpec seq(unsigned n) {
  GeneratorSpec s;
  s.family = Family::ex_seq;
  s.n = n;
  return s;
}

GeneratorSpec collusion32() {
  GeneratorSpec s;
  s.family = Family::ex_collusion;
  s.n = 3;
  s.k = 2;
  return s;
}

ItemSet ids(const Instance& inst, const std::vector<std::string>& names) {
  ItemSet s = inst.empty_set();
  for (const auto& n : names) s.insert(inst.index_of(n));
  return s;
}

Instance single_player(const Rational& w) {
  return Instance({{"1", w}}, {FeasibilitySystem(1, ExplicitFamily{{ItemSet::of(1, {0})}})});
}

}  // namespace

TEST(Examples, PayoffsAndWelfare) {
  const Instance inst = example_one();
  Budget b;
  EXPECT_EQ(payoff(inst, profile(2, {{0}, {1}}), 0, b), Payoff::finite(r(1)));
  const Profile shared = profile(2, {{1}, {1}});
  EXPECT_TRUE(payoff(inst, shared, 0, b).is_infeasible());
  EXPECT_TRUE(payoff(inst, shared, 1, b).is_infeasible());
  EXPECT_EQ(payoff(inst, profile(2, {{0}, {}}), 1, b), Payoff::finite(r(0)));
  EXPECT_EQ(welfare(inst, profile(2, {{0}, {1}}), b), r(2));
  EXPECT_EQ(welfare(inst, profile(2, {{1}, {}}), b), r(1));
  EXPECT_EQ(welfare(inst, profile(2, {{}, {}}), b), r(0));
}

TEST(Examples, ProfileViolations) {
  const Instance inst = example_one();
  Budget b;
  const auto overlap = validate_profile(inst, profile(2, {{1}, {1}}), b);
  ASSERT_EQ(overlap.size(), 1u);
  EXPECT_EQ(overlap[0], (Violation{Violation::Kind::overlap, {0, 1}, ItemSet::of(2, {1})}));
  const auto infeasible = validate_profile(inst, profile(2, {{1}, {0}}), b);
  ASSERT_EQ(infeasible.size(), 1u);
  EXPECT_EQ(infeasible[0].kind, Violation::Kind::infeasible);
  EXPECT_EQ(infeasible[0].players, (std::vector<std::size_t>{1}));
}

TEST(Examples, UnrelatedMachinesOfAsym) {
  const Instance inst = generate(asym32());
  Budget b;
  const auto& fast = inst.player(0);
  EXPECT_TRUE(is_member(fast, ids(inst, {"p1", "q1", "q2"}), b));
  EXPECT_TRUE(is_member(fast, ids(inst, {"p1", "p2", "p3"}), b));
  EXPECT_FALSE(is_member(fast, ids(inst, {"p1", "p2", "q1", "q2"}), b));
  EXPECT_TRUE(is_member(inst.player(1), ids(inst, {"q1"}), b));
  EXPECT_FALSE(is_member(inst.player(1), ids(inst, {"p1"}), b));
  for (const auto& p : inst.players()) EXPECT_TRUE(is_member(p, inst.empty_set(), b));
}

TEST(Examples, DownwardClosure) {
  Budget b;
  EXPECT_TRUE(validate_downward_closed(example_one().player(0), 10, 1, b).ok);
  const Instance inst = generate(seq(4));
  const auto& base = *std::get<SharedSymmetric>(inst.player(0).descriptor()).base;
  EXPECT_TRUE(validate_downward_closed(base, 200, 3, b).ok);
}

TEST(Examples, LargestDeadlineSets) {
  const Instance inst = generate(seq(5));
  Budget b;
  const ItemSet first = max_cardinality_feasible(inst.player(0), inst.all_items(), true, b);
  EXPECT_EQ(first, ids(inst, {"d5_1", "d5_2", "d5_3", "d5_4", "d5_5"}));
  const ItemSet second = max_cardinality_feasible(inst.player(1), inst.all_items() - first, true, b);
  EXPECT_EQ(second, ids(inst, {"d4_1", "d4_2", "d4_3", "d4_4"}));
  EXPECT_TRUE(max_cardinality_feasible(inst.player(0), inst.empty_set(), true, b).empty());
}

TEST(Examples, BestResponses) {
  Budget b;
  const Instance one = example_one();
  const Response none = best_response(one, 1, ItemSet::of(2, {0}), b);
  EXPECT_TRUE(none.set.empty());
  EXPECT_EQ(none.value, r(0));
  EXPECT_TRUE(best_response(one, 0, one.empty_set(), b).set.empty());

  const Instance asym = generate(asym32());
  const Response fast = best_response(asym, 0, asym.all_items(), b);
  EXPECT_EQ(fast.value, r(3));
  EXPECT_EQ(fast.set, ids(asym, {"p1", "p2", "p3"}));
  EXPECT_EQ(oracle::to_mask(fast.set), oracle::best_response(asym, 0, 0x1f).set);
}

TEST(Examples, AlphaBestResponses) {
  Budget b;
  const Instance asym = generate(asym32());
  const ItemSet q = ids(asym, {"q1", "q2"});
  EXPECT_TRUE(is_alpha_best_response(asym, 0, asym.all_items() - q, q, r(3, 2), b));
  EXPECT_FALSE(is_alpha_best_response(asym, 0, asym.all_items() - q, q, r(7, 5), b));
  const Instance one = example_one();
  const auto check = check_alpha_best_response(one, 0, ItemSet::of(2, {0}), one.empty_set(), r(1), b);
  ASSERT_FALSE(check.holds);
  EXPECT_EQ(check.witness->proposed[0], ItemSet::of(2, {0}));
  const Response best = best_response(one, 0, one.all_items(), b);
  EXPECT_TRUE(is_alpha_best_response(one, 0, one.all_items() - best.set, best.set, r(1), b));
}

TEST(Examples, CoalitionResponses) {
  Budget b;
  const Instance one = example_one();
  const Packing both = coalition_best_response(one, {0, 1}, one.all_items(), b);
  EXPECT_EQ(both.value, r(2));
  EXPECT_EQ(both.sets, (std::vector<ItemSet>{ItemSet::of(2, {0}), ItemSet::of(2, {1})}));

  const Instance coll = generate(collusion32());
  const Profile eq = reference_profiles(collusion32()).bad;
  const ItemSet pool = (coll.all_items() - eq.held()) | eq.sets[0] | eq.sets[1];
  EXPECT_EQ(coalition_best_response(coll, {0, 1}, pool, b).value, r(4));
  EXPECT_EQ(weight_of(coll, eq.sets[0]) + weight_of(coll, eq.sets[1]), r(4));

  for (const auto& spec : random_corpus(60, 3, 6, 3)) {
    const Instance inst = generate(spec);
    for (std::size_t i = 0; i < inst.num_players(); ++i) {
      const Packing solo = coalition_best_response(inst, {i}, inst.all_items(), b);
      const Response br = best_response(inst, i, inst.all_items(), b);
      EXPECT_EQ(solo.value, br.value);
      EXPECT_EQ(solo.sets[0], br.set);
    }
  }
}

TEST(Examples, NashVerdicts) {
  Budget b;
  const Instance one = example_one();
  EXPECT_TRUE(verify_nash(one, profile(2, {{1}, {}}), r(1), b).verdict);
  const EquilibriumReport rep = verify_nash(one, profile(2, {{0}, {}}), r(1), b);
  ASSERT_FALSE(rep.verdict);
  EXPECT_EQ(rep.witness->players, (std::vector<std::size_t>{1}));
  EXPECT_EQ(rep.witness->proposed[0], ItemSet::of(2, {1}));

  GeneratorSpec sym;
  sym.family = Family::ex_sym;
  sym.p = 3;
  sym.q = 2;
  sym.n = 3;
  EXPECT_TRUE(verify_nash(generate(sym), reference_profiles(sym).bad, r(3, 2), b).verdict);
}

TEST(Examples, NashLists) {
  Budget b;
  const auto solo = enumerate_nash(single_player(r(2)), r(1), b);
  ASSERT_EQ(solo.size(), 1u);
  EXPECT_EQ(solo[0], profile(1, {{0}}));

  const Instance one = example_one();
  const auto at1 = oracle::nash(one, r(1));
  const auto at2 = enumerate_nash(one, r(2), b);
  std::set<std::vector<oracle::Mask>> got;
  for (const auto& p : at2) got.insert(oracle::masks_of(p));
  EXPECT_EQ(got, oracle::nash(one, r(2)));
  for (const auto& p : at1) EXPECT_TRUE(got.count(p));
}

TEST(Examples, GreedyOutcomes) {
  Budget b;
  const Instance one = example_one();
  EXPECT_EQ(greedy_sequential_outcome(one, {0, 1}, r(1), Selector::exact_best_response, b),
            profile(2, {{0}, {1}}));

  const Instance s5 = generate(seq(5));
  const Profile out = greedy_sequential_outcome(s5, identity_order(5), r(1), Selector::largest_deadline_greedy, b);
  std::vector<std::size_t> sizes;
  for (const auto& s : out.sets) sizes.push_back(s.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{5, 4, 4, 3, 2}));
  EXPECT_EQ(welfare(s5, out, b), r(18));

  const Instance empty({}, {FeasibilitySystem(0, ExplicitFamily{}), FeasibilitySystem(0, ExplicitFamily{})});
  EXPECT_EQ(greedy_sequential_outcome(empty, {0, 1}, r(1), Selector::exact_best_response, b), Profile::empty(empty));
  EXPECT_EQ(compute_opt(empty, b).welfare, r(0));
}

TEST(Examples, SinglePlayerSequentialPlay) {
  Budget b;
  FeasibilitySystem fam(3, ExplicitFamily{{ItemSet::of(3, {0, 1}), ItemSet::of(3, {2})}});
  const Instance inst({{"a", r(1)}, {"b", r(1)}, {"c", r(3)}}, {fam});
  // At alpha 3/2 any feasible set worth at least 2 qualifies: {a,b} and {c}.
  const auto outcomes = enumerate_spe_outcomes(inst, {0}, r(3, 2), b);
  std::set<std::vector<oracle::Mask>> got;
  for (const auto& p : outcomes) got.insert(oracle::masks_of(p));
  EXPECT_EQ(got, (std::set<std::vector<oracle::Mask>>{{3}, {4}}));
  EXPECT_EQ(*empirical_sequential_poa(single_player(r(1)), r(1), b).ratio, r(1));
}

TEST(Examples, CollusionReductions) {
  Budget b;
  const Instance coll = generate(collusion32());
  EXPECT_TRUE(verify_collusion(coll, reference_profiles(collusion32()).bad, 2, r(1), b).verdict);
  for (const auto& spec : random_corpus(80, 3, 5, 12)) {
    const Instance inst = generate(spec);
    for (const auto& p : enumerate_nash(inst, r(1), b)) {
      EXPECT_EQ(verify_collusion(inst, p, 1, r(1), b).verdict, verify_nash(inst, p, r(1), b).verdict);
    }
    Profile idle = Profile::empty(inst);
    EXPECT_EQ(verify_collusion(inst, idle, 1, r(1), b).verdict, verify_nash(inst, idle, r(1), b).verdict);
    for (const Rational& alpha : {r(1), r(3, 2)}) {
      EXPECT_EQ(empirical_collusion_poa(inst, 1, alpha, b).ratio, empirical_poa(inst, alpha, b).ratio);
    }
  }
}

TEST(Examples, PriceOfAnarchyValues) {
  Budget b;
  EXPECT_EQ(*empirical_poa(generate(asym32()), r(3, 2), b).ratio, r(5, 2));
  EXPECT_EQ(compute_opt(generate(asym32()), b).welfare, r(5));
  EXPECT_EQ(*empirical_collusion_poa(generate(collusion32()), 2, r(1), b).ratio, r(3, 2));
  const PoAResult seq_one = empirical_sequential_poa(example_one(), r(1), b);
  EXPECT_EQ(*seq_one.ratio, r(2));
  EXPECT_EQ(*seq_one.worst_order, (PlayerOrder{0, 1}));
  EXPECT_EQ(bound_nash(r(1)), r(2));
  EXPECT_EQ(bound_series_b(r(7, 3), 1), r(7, 3));
}
