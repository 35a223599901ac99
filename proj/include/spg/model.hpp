#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spg/budget.hpp"
#include "spg/feasibility.hpp"
#include "spg/item_set.hpp"
#include "spg/rational.hpp"

namespace spg {

struct Item {
  std::string id;
  Rational weight;
  bool operator==(const Item&) const = default;
};

/// A set packing game: id-sorted items plus one feasibility system per
/// player. `symmetric` is set by construction for shared-family games.
class Instance {
 public:
  /// Items must be sorted by id, unique and nonnegative; every player system
  /// must range over the same item universe.
  Instance(std::vector<Item> items, std::vector<FeasibilitySystem> players,
           bool symmetric = false);

  const std::vector<Item>& items() const { return items_; }
  const std::vector<FeasibilitySystem>& players() const { return players_; }
  const FeasibilitySystem& player(std::size_t i) const { return players_.at(i); }
  std::size_t num_items() const { return items_.size(); }
  std::size_t num_players() const { return players_.size(); }
  bool symmetric() const { return symmetric_; }

  const Rational& weight(ItemIndex j) const { return items_[j].weight; }
  std::optional<ItemIndex> find(const std::string& id) const;
  ItemIndex index_of(const std::string& id) const;  ///< throws InputError

  ItemSet empty_set() const { return ItemSet(items_.size()); }
  ItemSet all_items() const { return ItemSet::full(items_.size()); }

  bool operator==(const Instance&) const = default;

 private:
  std::vector<Item> items_;
  std::vector<FeasibilitySystem> players_;
  bool symmetric_;
};

/// Sum of item weights.
Rational weight_of(const Instance& instance, const ItemSet& items);

/// One item set per player.
struct Profile {
  std::vector<ItemSet> sets;

  static Profile empty(const Instance& instance);
  ItemSet held() const;  ///< union of all player sets
  bool operator==(const Profile&) const = default;
};

/// Total order used to list profiles deterministically.
bool profile_less(const Profile& a, const Profile& b);

/// Player utility; Infeasible sits below every finite value.
class Payoff {
 public:
  static Payoff finite(Rational value) { return Payoff(std::move(value)); }
  static Payoff infeasible() { return Payoff(); }

  bool is_infeasible() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  std::strong_ordering operator<=>(const Payoff& other) const;
  bool operator==(const Payoff& other) const { return (*this <=> other) == 0; }

 private:
  Payoff() = default;
  explicit Payoff(Rational v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

/// Infeasible iff the player's set overlaps another player's set. Unknown
/// items or a set outside the player's family raise InputError.
Payoff payoff(const Instance& instance, const Profile& profile, std::size_t player,
              Budget& budget);

/// Total weight of a valid profile. Overlapping or infeasible profiles raise
/// InputError.
Rational welfare(const Instance& instance, const Profile& profile, Budget& budget);

struct Violation {
  enum class Kind { shape, unknown_item, overlap, infeasible };
  Kind kind;
  std::vector<std::size_t> players;
  ItemSet items;
  bool operator==(const Violation&) const = default;
};

std::string describe(const Instance& instance, const Violation& v);

/// Every overlap pair and every per-player feasibility failure; empty iff
/// the profile is valid.
std::vector<Violation> validate_profile(const Instance& instance, const Profile& profile,
                                        Budget& budget);

}  // namespace spg
