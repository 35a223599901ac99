#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "spg/bounds.hpp"
#include "spg/budget.hpp"
#include "spg/equilibria.hpp"
#include "spg/model.hpp"

namespace spg {

struct Optimum {
  Profile profile;
  Rational welfare;
};

/// Maximum-welfare valid profile; ties resolved as in max_weight_packing.
Optimum compute_opt(const Instance& instance, Budget& budget);

/// Optimum restricted to the items in `pool`, over all players.
Optimum compute_opt(const Instance& instance, const ItemSet& pool, Budget& budget);

struct PoAResult {
  std::string notion;  ///< "nash", "spe", "spe-greedy" or "collusion"
  Rational alpha{1};
  std::size_t k = 1;
  Rational opt_welfare;
  Rational worst_welfare;
  /// opt / worst; empty when the worst equilibrium has zero welfare but the
  /// optimum does not.
  std::optional<Rational> ratio;
  std::string bound_formula;    ///< empty when no bound applies
  std::optional<Interval> bound;  ///< degenerate interval for rational bounds
  bool bound_satisfied = true;
  Profile opt_profile;
  Profile worst_profile;
  std::size_t equilibria_examined = 0;
  std::optional<std::size_t> orders_examined;
  std::optional<PlayerOrder> worst_order;
};

/// Worst alpha-approximate Nash equilibrium against the optimum, checked
/// against alpha + 1.
PoAResult empirical_poa(const Instance& instance, const Rational& alpha, Budget& budget);

/// Worst subgame perfect outcome over all player orders. Checked against
/// alpha + 1, and also against e^(1/alpha)/(e^(1/alpha)-1) for symmetric
/// instances.
PoAResult empirical_sequential_poa(const Instance& instance, const Rational& alpha,
                                   Budget& budget);

/// Worst alpha-approximate k-collusion equilibrium, checked against
/// alpha + (n-k)/(n-1) when n >= 2.
PoAResult empirical_collusion_poa(const Instance& instance, std::size_t k, const Rational& alpha,
                                  Budget& budget);

/// Ratio of the optimum to one greedy sequential play.
PoAResult greedy_path_poa(const Instance& instance, const PlayerOrder& order,
                          const Rational& alpha, Selector selector, Budget& budget);
/// Same, with a known optimum.
PoAResult greedy_path_poa(const Instance& instance, const PlayerOrder& order,
                          const Rational& alpha, Selector selector, const Optimum& opt,
                          Budget& budget);

/// A valid profile holding every positive-weight item is optimal; returns it
/// as an Optimum in that case.
std::optional<Optimum> saturating_optimum(const Instance& instance, const Profile& profile,
                                          Budget& budget);

/// Checks w(S_i) >= x_i / (x alpha) * w(OPT(items left for i)) along a
/// sequential outcome, x_i being the mover's copy count and x their sum.
/// Returns the first position in `order` where it fails.
std::optional<std::size_t> first_share_violation(const Instance& instance,
                                                 const PlayerOrder& order, const Profile& profile,
                                                 const Rational& alpha, Budget& budget);

}  // namespace spg
