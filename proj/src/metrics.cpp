#include "spg/metrics.hpp"

#include <algorithm>

#include "spg/error.hpp"

namespace spg {

namespace {

Rational total_welfare(const Instance& instance, const Profile& profile) {
  Rational total;
  for (const auto& s : profile.sets) total += weight_of(instance, s);
  return total;
}

std::optional<Rational> ratio_of(const Rational& opt, const Rational& worst) {
  if (worst == 0) {
    if (opt == 0) return Rational(1);
    return std::nullopt;
  }
  return Rational(opt / worst);
}

bool within(const std::optional<Rational>& ratio, const Rational& bound) {
  return ratio && *ratio <= bound;
}

void set_rational_bound(PoAResult& r, std::string formula, const Rational& bound) {
  r.bound_formula = std::move(formula);
  r.bound = Interval{bound, bound};
  r.bound_satisfied = within(r.ratio, bound);
}

void set_sequential_bound(PoAResult& r, bool symmetric) {
  set_rational_bound(r, "alpha+1", bound_nash(r.alpha));
  if (symmetric) {
    r.bound_formula = "e^(1/alpha)/(e^(1/alpha)-1)";
    r.bound = bound_sequential_symmetric(r.alpha);
    r.bound_satisfied = r.bound_satisfied && r.ratio && at_most_sequential_bound(*r.ratio, r.alpha);
  }
}

/// Lowest-welfare profile of a non-empty list; the first one wins ties.
std::size_t worst_index(const Instance& instance, const std::vector<Profile>& profiles) {
  std::size_t worst = 0;
  Rational worst_value = total_welfare(instance, profiles.front());
  for (std::size_t i = 1; i < profiles.size(); ++i) {
    Rational w = total_welfare(instance, profiles[i]);
    if (w < worst_value) {
      worst_value = w;
      worst = i;
    }
  }
  return worst;
}

PoAResult from_profiles(const Instance& instance, std::string notion, const Rational& alpha,
                        const Optimum& opt, const std::vector<Profile>& equilibria) {
  if (equilibria.empty()) throw std::logic_error("no equilibrium found");
  PoAResult r;
  r.notion = std::move(notion);
  r.alpha = alpha;
  r.opt_welfare = opt.welfare;
  r.opt_profile = opt.profile;
  const std::size_t w = worst_index(instance, equilibria);
  r.worst_profile = equilibria[w];
  r.worst_welfare = total_welfare(instance, r.worst_profile);
  r.ratio = ratio_of(r.opt_welfare, r.worst_welfare);
  r.equilibria_examined = equilibria.size();
  return r;
}

}  // namespace

Optimum compute_opt(const Instance& instance, Budget& budget) {
  return compute_opt(instance, instance.all_items(), budget);
}

Optimum compute_opt(const Instance& instance, const ItemSet& pool, Budget& budget) {
  auto packing = max_weight_packing(instance, identity_order(instance.num_players()), pool, budget);
  return {Profile{std::move(packing.sets)}, std::move(packing.value)};
}

PoAResult empirical_poa(const Instance& instance, const Rational& alpha, Budget& budget) {
  const Optimum opt = compute_opt(instance, budget);
  PoAResult r = from_profiles(instance, "nash", alpha, opt, enumerate_nash(instance, alpha, budget));
  set_rational_bound(r, "alpha+1", bound_nash(alpha));
  return r;
}

PoAResult empirical_sequential_poa(const Instance& instance, const Rational& alpha,
                                   Budget& budget) {
  const Optimum opt = compute_opt(instance, budget);
  PlayerOrder order = identity_order(instance.num_players());
  std::optional<PoAResult> worst;
  std::size_t orders = 0;
  std::size_t outcomes = 0;
  do {
    ++orders;
    auto spe = enumerate_spe_outcomes(instance, order, alpha, budget);
    outcomes += spe.size();
    PoAResult r = from_profiles(instance, "spe", alpha, opt, spe);
    if (!worst || r.worst_welfare < worst->worst_welfare) {
      worst = std::move(r);
      worst->worst_order = order;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  worst->orders_examined = orders;
  worst->equilibria_examined = outcomes;
  set_sequential_bound(*worst, instance.symmetric());
  return *worst;
}

PoAResult empirical_collusion_poa(const Instance& instance, std::size_t k, const Rational& alpha,
                                  Budget& budget) {
  const std::size_t n = instance.num_players();
  if (k < 1 || k > n) throw InputError("k must lie between 1 and the number of players");
  const Optimum opt = compute_opt(instance, budget);
  std::vector<Profile> equilibria;
  for (auto& profile : enumerate_nash(instance, alpha, budget)) {
    if (k == 1 || verify_collusion(instance, profile, k, alpha, budget).verdict) {
      equilibria.push_back(std::move(profile));
    }
  }
  PoAResult r = from_profiles(instance, "collusion", alpha, opt, equilibria);
  r.k = k;
  if (n >= 2) {
    set_rational_bound(r, "alpha+(n-k)/(n-1)", bound_collusion(alpha, n, k));
  } else {
    r.bound_satisfied = r.ratio.has_value();
  }
  return r;
}

PoAResult greedy_path_poa(const Instance& instance, const PlayerOrder& order,
                          const Rational& alpha, Selector selector, Budget& budget) {
  return greedy_path_poa(instance, order, alpha, selector, compute_opt(instance, budget), budget);
}

PoAResult greedy_path_poa(const Instance& instance, const PlayerOrder& order,
                          const Rational& alpha, Selector selector, const Optimum& opt,
                          Budget& budget) {
  Profile outcome = greedy_sequential_outcome(instance, order, alpha, selector, budget);
  PoAResult r = from_profiles(instance, "spe-greedy", alpha, opt, {outcome});
  r.worst_order = order;
  r.orders_examined = 1;
  set_sequential_bound(r, instance.symmetric());
  return r;
}

std::optional<Optimum> saturating_optimum(const Instance& instance, const Profile& profile,
                                          Budget& budget) {
  if (!validate_profile(instance, profile, budget).empty()) return std::nullopt;
  ItemSet missing = instance.all_items() - profile.held();
  bool saturated = true;
  missing.for_each([&](ItemIndex j) { saturated = saturated && instance.weight(j) == 0; });
  if (!saturated) return std::nullopt;
  return Optimum{profile, total_welfare(instance, profile)};
}

std::optional<std::size_t> first_share_violation(const Instance& instance,
                                                 const PlayerOrder& order, const Profile& profile,
                                                 const Rational& alpha, Budget& budget) {
  long total_copies = 0;
  for (const auto& p : instance.players()) total_copies += p.copies();
  const Rational gamma = Rational(total_copies) * alpha;
  ItemSet remaining = instance.all_items();
  for (std::size_t t = 0; t < order.size(); ++t) {
    const std::size_t mover = order[t];
    const Rational rest = max_packing_value(instance, identity_order(instance.num_players()),
                                            remaining, budget);
    const Rational share = Rational(static_cast<long>(instance.player(mover).copies())) / gamma;
    if (weight_of(instance, profile.sets[mover]) < share * rest) return t;
    remaining -= profile.sets[mover];
  }
  return std::nullopt;
}

}  // namespace spg
