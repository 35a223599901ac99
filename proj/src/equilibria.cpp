#include "spg/equilibria.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "spg/error.hpp"

namespace spg {

std::string to_string(Concept c) {
  switch (c) {
    case Concept::nash:
      return "nash";
    case Concept::subgame_perfect:
      return "spe";
    case Concept::collusion:
      return "collusion";
  }
  return {};
}

PlayerOrder identity_order(std::size_t n) {
  PlayerOrder order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

namespace {

void require_alpha(const Rational& alpha) {
  if (alpha < 1) throw InputError("alpha must be at least 1");
}

void require_valid(const Instance& instance, const Profile& profile, Budget& budget) {
  const auto violations = validate_profile(instance, profile, budget);
  if (!violations.empty()) {
    throw InputError("invalid profile: " + describe(instance, violations.front()));
  }
}

void require_order(const Instance& instance, const PlayerOrder& order) {
  std::vector<bool> seen(instance.num_players(), false);
  if (order.size() != instance.num_players()) throw InputError("order must list every player once");
  for (std::size_t p : order) {
    if (p >= seen.size() || seen[p]) throw InputError("order must list every player once");
    seen[p] = true;
  }
}

Rational total_welfare(const Instance& instance, const Profile& profile) {
  Rational total;
  for (const auto& s : profile.sets) total += weight_of(instance, s);
  return total;
}

/// Items a player may use against the others' fixed sets.
ItemSet open_to(const Profile& profile, std::size_t player) {
  ItemSet others(profile.sets.front().universe());
  for (std::size_t k = 0; k < profile.sets.size(); ++k) {
    if (k != player) others |= profile.sets[k];
  }
  return ItemSet::full(others.universe()) - others;
}

class NashEnumerator {
 public:
  NashEnumerator(const Instance& instance, const Rational& alpha, Budget& budget)
      : instance_(instance), alpha_(alpha), budget_(budget), profile_(Profile::empty(instance)),
        memo_(instance.num_players()) {}

  std::vector<Profile> run() {
    dfs(0);
    return std::move(found_);
  }

 private:
  void dfs(ItemIndex j) {
    budget_.charge("Nash enumeration");
    if (j == instance_.num_items()) {
      if (is_equilibrium()) found_.push_back(profile_);
      return;
    }
    dfs(j + 1);
    for (std::size_t p = 0; p < instance_.num_players(); ++p) {
      profile_.sets[p].insert(j);
      if (is_member(instance_.player(p), profile_.sets[p], budget_)) dfs(j + 1);
      profile_.sets[p].erase(j);
    }
  }

  bool is_equilibrium() {
    for (std::size_t p = 0; p < instance_.num_players(); ++p) {
      const ItemSet pool = open_to(profile_, p);
      auto [it, fresh] = memo_[p].try_emplace(pool);
      if (fresh) it->second = best_response_value(instance_, p, pool, budget_);
      if (alpha_ * weight_of(instance_, profile_.sets[p]) < it->second) return false;
    }
    return true;
  }

  const Instance& instance_;
  const Rational& alpha_;
  Budget& budget_;
  Profile profile_;
  std::vector<std::unordered_map<ItemSet, Rational, ItemSetHash>> memo_;
  std::vector<Profile> found_;
};

class SpeEnumerator {
 public:
  SpeEnumerator(const Instance& instance, const PlayerOrder& order, const Rational& alpha,
                Budget& budget)
      : instance_(instance), order_(order), alpha_(alpha), budget_(budget),
        profile_(Profile::empty(instance)) {}

  std::vector<Profile> run() {
    node(0, instance_.all_items());
    return std::move(found_);
  }

 private:
  void node(std::size_t depth, const ItemSet& available) {
    budget_.charge("game tree search");
    if (depth == order_.size()) {
      found_.push_back(profile_);
      return;
    }
    const std::size_t mover = order_[depth];
    const Rational best = best_response_value(instance_, mover, available, budget_);
    const std::vector<ItemIndex> items = available.indices();
    std::vector<Rational> suffix(items.size() + 1);
    for (std::size_t i = items.size(); i-- > 0;) suffix[i] = suffix[i + 1] + instance_.weight(items[i]);
    ItemSet action = instance_.empty_set();
    actions(depth, available, items, suffix, 0, action, Rational(0), best);
  }

  /// Every feasible subset of the available items worth at least best/alpha.
  void actions(std::size_t depth, const ItemSet& available, const std::vector<ItemIndex>& items,
               const std::vector<Rational>& suffix, std::size_t pos, ItemSet& action,
               const Rational& value, const Rational& best) {
    budget_.charge("game tree actions");
    if (alpha_ * (value + suffix[pos]) < best) return;
    const std::size_t mover = order_[depth];
    if (pos == items.size()) {
      profile_.sets[mover] = action;
      node(depth + 1, available - action);
      profile_.sets[mover] = instance_.empty_set();
      return;
    }
    const ItemIndex j = items[pos];
    action.insert(j);
    if (is_member(instance_.player(mover), action, budget_)) {
      actions(depth, available, items, suffix, pos + 1, action, value + instance_.weight(j), best);
    }
    action.erase(j);
    actions(depth, available, items, suffix, pos + 1, action, value, best);
  }

  const Instance& instance_;
  const PlayerOrder& order_;
  const Rational& alpha_;
  Budget& budget_;
  Profile profile_;
  std::vector<Profile> found_;
};

/// Coalitions of a fixed size in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t t = i + 1; t < k; ++t) c[t] = c[t - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

EquilibriumReport verify_nash(const Instance& instance, const Profile& profile,
                              const Rational& alpha, Budget& budget) {
  require_alpha(alpha);
  require_valid(instance, profile, budget);
  EquilibriumReport report{Concept::nash, 1, alpha, true, std::nullopt,
                           total_welfare(instance, profile)};
  for (std::size_t p = 0; p < instance.num_players(); ++p) {
    auto check = check_alpha_best_response(instance, p, open_to(profile, p), profile.sets[p],
                                           alpha, budget);
    if (!check.holds) {
      report.verdict = false;
      report.witness = std::move(check.witness);
      break;
    }
  }
  return report;
}

std::vector<Profile> enumerate_nash(const Instance& instance, const Rational& alpha,
                                    Budget& budget) {
  require_alpha(alpha);
  return NashEnumerator(instance, alpha, budget).run();
}

Profile greedy_sequential_outcome(const Instance& instance, const PlayerOrder& order,
                                  const Rational& alpha, Selector selector, Budget& budget) {
  require_alpha(alpha);
  require_order(instance, order);
  if (selector == Selector::largest_deadline_greedy) {
    for (std::size_t j = 0; j < instance.num_items(); ++j) {
      if (instance.weight(static_cast<ItemIndex>(j)) != 1) {
        throw InputError("deadline greedy selector needs unit weights");
      }
    }
    for (const auto& p : instance.players()) {
      if (!p.is_scheduling()) throw InputError("deadline greedy selector needs scheduling players");
    }
  }
  Profile profile = Profile::empty(instance);
  ItemSet available = instance.all_items();
  for (std::size_t mover : order) {
    ItemSet pick = instance.empty_set();
    if (selector == Selector::exact_best_response) {
      pick = best_response(instance, mover, available, budget).set;
    } else {
      const FeasibilitySystem& system = instance.player(mover);
      const ItemSet maximum = max_cardinality_feasible(system, available, true, budget);
      std::vector<ItemIndex> ranked = maximum.indices();
      std::stable_sort(ranked.begin(), ranked.end(), [&](ItemIndex a, ItemIndex b) {
        return *deadline_of(system, a) > *deadline_of(system, b);
      });
      // ceil(m / alpha) of the most flexible jobs.
      const Rational share = Rational(static_cast<long>(ranked.size())) / alpha;
      mpz_class take_z;
      mpz_cdiv_q(take_z.get_mpz_t(), share.get_num_mpz_t(), share.get_den_mpz_t());
      const std::size_t take = take_z.get_ui();
      for (std::size_t t = 0; t < take; ++t) pick.insert(ranked[t]);
    }
    profile.sets[mover] = pick;
    available -= pick;
  }
  return profile;
}

std::vector<Profile> enumerate_spe_outcomes(const Instance& instance, const PlayerOrder& order,
                                            const Rational& alpha, Budget& budget) {
  require_alpha(alpha);
  require_order(instance, order);
  return SpeEnumerator(instance, order, alpha, budget).run();
}

EquilibriumReport verify_spe_outcome(const Instance& instance, const Profile& profile,
                                     const PlayerOrder& order, const Rational& alpha,
                                     Budget& budget) {
  require_alpha(alpha);
  require_order(instance, order);
  require_valid(instance, profile, budget);
  EquilibriumReport report{Concept::subgame_perfect, 1, alpha, true, std::nullopt,
                           total_welfare(instance, profile)};
  ItemSet available = instance.all_items();
  for (std::size_t mover : order) {
    const ItemSet& chosen = profile.sets[mover];
    auto check = check_alpha_best_response(instance, mover, available - chosen, chosen, alpha,
                                           budget);
    if (!check.holds) {
      report.verdict = false;
      report.witness = std::move(check.witness);
      break;
    }
    available -= chosen;
  }
  return report;
}

EquilibriumReport verify_collusion(const Instance& instance, const Profile& profile,
                                   std::size_t k, const Rational& alpha, Budget& budget) {
  require_alpha(alpha);
  const std::size_t n = instance.num_players();
  if (k < 1 || k > n) throw InputError("k must lie between 1 and the number of players");
  require_valid(instance, profile, budget);
  EquilibriumReport report{Concept::collusion, k, alpha, true, std::nullopt,
                           total_welfare(instance, profile)};
  const ItemSet unheld = instance.all_items() - profile.held();
  for (std::size_t size = 1; size <= k; ++size) {
    std::vector<std::size_t> coalition(size);
    std::iota(coalition.begin(), coalition.end(), std::size_t{0});
    do {
      ItemSet pool = unheld;
      Rational held;
      for (std::size_t p : coalition) {
        pool |= profile.sets[p];
        held += weight_of(instance, profile.sets[p]);
      }
      const Rational best = max_packing_value(instance, coalition, pool, budget);
      if (alpha * held < best) {
        auto packing = coalition_best_response(instance, coalition, pool, budget);
        report.verdict = false;
        report.witness = DeviationWitness{coalition, packing.sets, held, packing.value};
        return report;
      }
    } while (next_combination(coalition, n));
  }
  return report;
}

bool replay_witness(const Instance& instance, const Profile& profile,
                    const DeviationWitness& witness, const Rational& alpha, Budget& budget) {
  if (witness.players.size() != witness.proposed.size()) return false;
  Profile deviated = profile;
  for (std::size_t t = 0; t < witness.players.size(); ++t) {
    if (witness.players[t] >= instance.num_players()) return false;
    deviated.sets[witness.players[t]] = witness.proposed[t];
  }
  if (!validate_profile(instance, deviated, budget).empty()) return false;
  Rational old_value;
  Rational new_value;
  for (std::size_t p : witness.players) {
    old_value += payoff(instance, profile, p, budget).value();
    const Payoff now = payoff(instance, deviated, p, budget);
    if (now.is_infeasible()) return false;
    new_value += now.value();
  }
  return old_value == witness.old_value && new_value == witness.new_value &&
         new_value > alpha * old_value;
}

}  // namespace spg
