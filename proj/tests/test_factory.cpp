#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "spg/equilibria.hpp"
#include "spg/error.hpp"
#include "spg/factory.hpp"
#include "spg/metrics.hpp"

using namespace spg;
using testing_support::r;

namespace {

GeneratorSpec make(Family f, unsigned p = 1, unsigned q = 1, unsigned n = 2, unsigned k = 1,
                   Rational alpha = 1) {
  GeneratorSpec s;
  s.family = f;
  s.p = p;
  s.q = q;
  s.n = n;
  s.k = k;
  s.alpha = alpha;
  return s;
}

std::vector<GeneratorSpec> constructed_specs() {
  return {make(Family::ex_trivial),
          make(Family::ex_asym, 1, 1),
          make(Family::ex_asym, 3, 2),
          make(Family::ex_asym, 3, 1),
          make(Family::ex_sym, 3, 2, 3),
          make(Family::ex_sym, 2, 1, 4),
          make(Family::ex_seq, 1, 1, 3),
          make(Family::ex_seq, 1, 1, 4),
          make(Family::ex_collusion, 1, 1, 3, 2),
          make(Family::ex_collusion, 1, 1, 4, 3),
          make(Family::ex_collusion, 1, 1, 3, 2, r(3, 2))};
}

}  // namespace

TEST(Factory, TrivialMatchesHandBuilt) {
  const Instance inst = generate(make(Family::ex_trivial));
  EXPECT_EQ(inst, testing_support::example_one());
  const ReferenceProfiles ref = reference_profiles(make(Family::ex_trivial));
  EXPECT_EQ(oracle::masks_of(ref.opt), (std::vector<oracle::Mask>{1, 2}));
  EXPECT_EQ(oracle::masks_of(ref.bad), (std::vector<oracle::Mask>{2, 0}));
}

TEST(Factory, AsymShape) {
  const auto spec = make(Family::ex_asym, 3, 2);
  const Instance inst = generate(spec);
  EXPECT_EQ(inst.num_players(), 3u);
  EXPECT_EQ(inst.num_items(), 5u);
  Budget b;
  EXPECT_EQ(compute_opt(inst, b).welfare, r(5));
  const ReferenceProfiles ref = reference_profiles(spec);
  EXPECT_EQ(welfare(inst, ref.bad, b), r(2));
  EXPECT_TRUE(verify_nash(inst, ref.bad, r(3, 2), b).verdict);
  EXPECT_EQ(family_alpha(spec), r(3, 2));
}

TEST(Factory, SymShape) {
  const auto spec = make(Family::ex_sym, 3, 2, 3);
  const Instance inst = generate(spec);
  EXPECT_TRUE(inst.symmetric());
  EXPECT_EQ(inst.num_items(), 9u);
  Budget b;
  const ReferenceProfiles ref = reference_profiles(spec);
  EXPECT_EQ(welfare(inst, ref.bad, b), r(6));
  for (const auto& s : ref.bad.sets) EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(welfare(inst, ref.opt, b), r(13));
}

TEST(Factory, SeqAndCollusionShapes) {
  Budget b;
  const auto seq = make(Family::ex_seq, 1, 1, 5);
  EXPECT_EQ(generate(seq).num_items(), 25u);
  EXPECT_EQ(welfare(generate(seq), reference_profiles(seq).opt, b), r(25));

  const auto coll = make(Family::ex_collusion, 1, 1, 3, 2);
  const Instance inst = generate(coll);
  EXPECT_EQ(inst.num_items(), 9u);
  EXPECT_EQ(compute_opt(inst, b).welfare, r(9));
  EXPECT_EQ(welfare(inst, reference_profiles(coll).bad, b), r(6));

  const auto heavy = make(Family::ex_collusion, 1, 1, 3, 2, r(3, 2));
  const Instance h = generate(heavy);
  EXPECT_EQ(h.weight(h.index_of("x1_0")), r(2));
}

TEST(Factory, ConstructedFamilyInvariants) {
  for (const auto& spec : constructed_specs()) {
    const Instance inst = generate(spec);
    const ReferenceProfiles ref = reference_profiles(spec);
    Budget b;
    for (const auto& p : inst.players()) EXPECT_TRUE(validate_downward_closed(p, 40, 1, b).ok);
    EXPECT_TRUE(validate_profile(inst, ref.opt, b).empty()) << to_string(spec.family);
    EXPECT_TRUE(validate_profile(inst, ref.bad, b).empty()) << to_string(spec.family);
    EXPECT_EQ(welfare(inst, ref.opt, b), compute_opt(inst, b).welfare) << to_string(spec.family);
    const Rational alpha = family_alpha(spec);
    switch (spec.family) {
      case Family::ex_trivial:
      case Family::ex_asym:
      case Family::ex_sym:
        EXPECT_TRUE(verify_nash(inst, ref.bad, alpha, b).verdict);
        break;
      case Family::ex_collusion:
        EXPECT_TRUE(verify_collusion(inst, ref.bad, spec.k, alpha, b).verdict);
        break;
      default:
        break;
    }
  }
}

TEST(Factory, RejectsBadParameters) {
  EXPECT_THROW(generate(make(Family::ex_asym, 1, 2)), InputError);
  EXPECT_THROW(generate(make(Family::ex_asym, 1, 0)), InputError);
  EXPECT_THROW(generate(make(Family::ex_sym, 3, 2, 0)), InputError);
  EXPECT_THROW(generate(make(Family::ex_collusion, 1, 1, 3, 4)), InputError);
  EXPECT_THROW(generate(make(Family::ex_collusion, 1, 1, 1, 1)), InputError);
  EXPECT_THROW(generate(make(Family::ex_collusion, 1, 1, 3, 2, r(1, 2))), InputError);
  EXPECT_THROW(reference_profiles(make(Family::random_explicit)), InputError);
  EXPECT_THROW(parse_family("ex_nothing"), InputError);
}

TEST(Factory, RandomIsReproducible) {
  for (Family f : {Family::random_explicit, Family::random_symmetric}) {
    GeneratorSpec s = make(f, 1, 1, 3);
    s.seed = 77;
    s.copies = 3;
    EXPECT_EQ(generate(s), generate(s));
    GeneratorSpec t = s;
    t.seed = 78;
    EXPECT_NE(generate(s), generate(t));
  }
}

TEST(Factory, RandomFamiliesAreAntichains) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    GeneratorSpec s = make(Family::random_explicit, 1, 1, 3);
    s.seed = seed;
    s.items = 6;
    const Instance inst = generate(s);
    Budget b;
    for (const auto& p : inst.players()) EXPECT_TRUE(validate_downward_closed(p, 10, seed, b).ok);
  }
}
