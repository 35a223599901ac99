#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spg/budget.hpp"
#include "spg/item_set.hpp"
#include "spg/model.hpp"
#include "spg/rational.hpp"

namespace spg {

/// Pairwise-disjoint feasible sets for a group of players.
struct Packing {
  std::vector<std::size_t> members;
  std::vector<ItemSet> sets;  ///< aligned with members
  Rational value;
};

/// Maximum-weight packing of `pool` among `members`. Ties: fewest items,
/// then the lexicographically smallest item->member assignment in item-id
/// order (members in the given order, "unassigned" last).
Packing max_weight_packing(const Instance& instance, const std::vector<std::size_t>& members,
                           const ItemSet& pool, Budget& budget);

/// Value of max_weight_packing without the tie-breaking pass.
Rational max_packing_value(const Instance& instance, const std::vector<std::size_t>& members,
                           const ItemSet& pool, Budget& budget);

struct Response {
  ItemSet set;
  Rational value;
};

/// Maximum-weight feasible subset of `available` for one player; ties go to
/// the smallest set, then the lexicographically first id list.
Response best_response(const Instance& instance, std::size_t player, const ItemSet& available,
                       Budget& budget);

Rational best_response_value(const Instance& instance, std::size_t player,
                             const ItemSet& available, Budget& budget);

/// Certificate that one player or a coalition can improve.
struct DeviationWitness {
  std::vector<std::size_t> players;
  std::vector<ItemSet> proposed;  ///< aligned with players
  Rational old_value;
  Rational new_value;
};

struct AlphaCheck {
  bool holds = true;
  std::optional<DeviationWitness> witness;
};

/// alpha * w(chosen) >= best value over available | chosen, decided exactly.
AlphaCheck check_alpha_best_response(const Instance& instance, std::size_t player,
                                     const ItemSet& available, const ItemSet& chosen,
                                     const Rational& alpha, Budget& budget);

bool is_alpha_best_response(const Instance& instance, std::size_t player,
                            const ItemSet& available, const ItemSet& chosen,
                            const Rational& alpha, Budget& budget);

/// Joint best response of a coalition over `available` (the coalition's own
/// items plus unheld items).
Packing coalition_best_response(const Instance& instance, const std::vector<std::size_t>& coalition,
                                const ItemSet& available, Budget& budget);

}  // namespace spg
