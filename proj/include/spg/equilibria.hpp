#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spg/best_response.hpp"
#include "spg/budget.hpp"
#include "spg/model.hpp"
#include "spg/rational.hpp"

namespace spg {

enum class Concept { nash, subgame_perfect, collusion };

std::string to_string(Concept c);

struct EquilibriumReport {
  Concept notion = Concept::nash;
  std::size_t k = 1;  ///< coalition size bound (collusion only)
  Rational alpha{1};
  bool verdict = true;
  std::optional<DeviationWitness> witness;  ///< present iff verdict is false
  Rational welfare;
};

/// A permutation of player indices.
using PlayerOrder = std::vector<std::size_t>;

PlayerOrder identity_order(std::size_t n);

/// Alpha-approximate Nash condition for every player against the others.
EquilibriumReport verify_nash(const Instance& instance, const Profile& profile,
                              const Rational& alpha, Budget& budget);

/// All valid profiles that are alpha-approximate Nash equilibria, found by
/// assigning each item to a player or to nobody. Ordered by that search.
std::vector<Profile> enumerate_nash(const Instance& instance, const Rational& alpha,
                                    Budget& budget);

enum class Selector {
  exact_best_response,
  largest_deadline_greedy,  ///< ceil(m_i / alpha) of the deadline-greedy maximum set
};

/// One sequential pass in `order`; each mover takes the selector's pick from
/// the items still free.
Profile greedy_sequential_outcome(const Instance& instance, const PlayerOrder& order,
                                  const Rational& alpha, Selector selector, Budget& budget);

/// Outcomes reachable by some alpha-approximate subgame perfect equilibrium
/// under `order`: every mover may take any feasible set worth at least
/// 1/alpha of the best set still available.
std::vector<Profile> enumerate_spe_outcomes(const Instance& instance, const PlayerOrder& order,
                                            const Rational& alpha, Budget& budget);

/// Checks that a profile is such an on-path outcome for `order`.
EquilibriumReport verify_spe_outcome(const Instance& instance, const Profile& profile,
                                     const PlayerOrder& order, const Rational& alpha,
                                     Budget& budget);

/// Alpha-approximate k-collusion condition for every coalition of at most k
/// players, smallest coalitions first; stops at the first violation.
EquilibriumReport verify_collusion(const Instance& instance, const Profile& profile,
                                   std::size_t k, const Rational& alpha, Budget& budget);

/// Replays a witness: the deviators' new sets must be feasible, avoid every
/// non-deviator's items, and beat alpha times their old total.
bool replay_witness(const Instance& instance, const Profile& profile,
                    const DeviationWitness& witness, const Rational& alpha, Budget& budget);

}  // namespace spg
