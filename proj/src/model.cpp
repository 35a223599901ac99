#include "spg/model.hpp"

#include <algorithm>

#include "spg/error.hpp"

namespace spg {

Instance::Instance(std::vector<Item> items, std::vector<FeasibilitySystem> players, bool symmetric)
    : items_(std::move(items)), players_(std::move(players)), symmetric_(symmetric) {
  if (players_.empty()) throw InputError("a game needs at least one player");
  for (std::size_t j = 0; j < items_.size(); ++j) {
    if (items_[j].weight < 0) throw InputError("negative weight for item '" + items_[j].id + "'");
    if (j > 0 && !(items_[j - 1].id < items_[j].id)) {
      throw InputError("item ids must be unique and sorted, offending id '" + items_[j].id + "'");
    }
  }
  for (const auto& p : players_) {
    if (p.universe() != items_.size()) {
      throw InputError("feasibility system refers to a different item universe");
    }
  }
}

std::optional<ItemIndex> Instance::find(const std::string& id) const {
  auto it = std::lower_bound(items_.begin(), items_.end(), id,
                             [](const Item& item, const std::string& key) { return item.id < key; });
  if (it == items_.end() || it->id != id) return std::nullopt;
  return static_cast<ItemIndex>(it - items_.begin());
}

ItemIndex Instance::index_of(const std::string& id) const {
  if (auto j = find(id)) return *j;
  throw InputError("unknown item id '" + id + "'");
}

Rational weight_of(const Instance& instance, const ItemSet& items) {
  Rational total;
  items.for_each([&](ItemIndex j) { total += instance.weight(j); });
  return total;
}

Profile Profile::empty(const Instance& instance) {
  return Profile{std::vector<ItemSet>(instance.num_players(), instance.empty_set())};
}

ItemSet Profile::held() const {
  ItemSet all = sets.empty() ? ItemSet() : ItemSet(sets.front().universe());
  for (const auto& s : sets) all |= s;
  return all;
}

bool profile_less(const Profile& a, const Profile& b) {
  return std::lexicographical_compare(a.sets.begin(), a.sets.end(), b.sets.begin(), b.sets.end(),
                                      [](const ItemSet& x, const ItemSet& y) { return lex_less(x, y); });
}

std::strong_ordering Payoff::operator<=>(const Payoff& other) const {
  if (is_infeasible() || other.is_infeasible()) {
    return other.is_infeasible() <=> is_infeasible();
  }
  const int c = cmp(*value_, *other.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

namespace {

void check_shape(const Instance& instance, const Profile& profile) {
  if (profile.sets.size() != instance.num_players()) {
    throw InputError("profile has " + std::to_string(profile.sets.size()) + " sets for " +
                     std::to_string(instance.num_players()) + " players");
  }
  for (const auto& s : profile.sets) {
    if (s.universe() != instance.num_items()) throw InputError("profile references unknown items");
  }
}

}  // namespace

Payoff payoff(const Instance& instance, const Profile& profile, std::size_t player,
              Budget& budget) {
  check_shape(instance, profile);
  if (player >= instance.num_players()) throw InputError("player index out of range");
  const ItemSet& mine = profile.sets[player];
  if (!is_member(instance.player(player), mine, budget)) {
    throw InputError("set of player " + std::to_string(player + 1) + " is not feasible");
  }
  for (std::size_t k = 0; k < profile.sets.size(); ++k) {
    if (k != player && mine.intersects(profile.sets[k])) return Payoff::infeasible();
  }
  return Payoff::finite(weight_of(instance, mine));
}

Rational welfare(const Instance& instance, const Profile& profile, Budget& budget) {
  const auto violations = validate_profile(instance, profile, budget);
  if (!violations.empty()) {
    throw InputError("welfare of an invalid profile: " + describe(instance, violations.front()));
  }
  Rational total;
  for (const auto& s : profile.sets) total += weight_of(instance, s);
  return total;
}

std::string describe(const Instance& instance, const Violation& v) {
  std::string ids;
  v.items.for_each([&](ItemIndex j) {
    if (j < instance.num_items()) ids += (ids.empty() ? "" : ",") + instance.items()[j].id;
  });
  auto player = [](std::size_t p) { return std::to_string(p + 1); };
  switch (v.kind) {
    case Violation::Kind::shape:
      return "profile does not have one set per player";
    case Violation::Kind::unknown_item:
      return "player " + player(v.players.at(0)) + " references unknown items";
    case Violation::Kind::overlap:
      return "players " + player(v.players.at(0)) + " and " + player(v.players.at(1)) +
             " share {" + ids + "}";
    case Violation::Kind::infeasible:
      return "set of player " + player(v.players.at(0)) + " is infeasible";
  }
  return {};
}

std::vector<Violation> validate_profile(const Instance& instance, const Profile& profile,
                                        Budget& budget) {
  std::vector<Violation> out;
  if (profile.sets.size() != instance.num_players()) {
    out.push_back({Violation::Kind::shape, {}, ItemSet()});
    return out;
  }
  std::vector<bool> usable(profile.sets.size(), true);
  for (std::size_t i = 0; i < profile.sets.size(); ++i) {
    if (profile.sets[i].universe() != instance.num_items()) {
      out.push_back({Violation::Kind::unknown_item, {i}, ItemSet()});
      usable[i] = false;
    }
  }
  for (std::size_t i = 0; i < profile.sets.size(); ++i) {
    for (std::size_t k = i + 1; k < profile.sets.size(); ++k) {
      if (usable[i] && usable[k] && profile.sets[i].intersects(profile.sets[k])) {
        out.push_back({Violation::Kind::overlap, {i, k}, profile.sets[i] & profile.sets[k]});
      }
    }
  }
  for (std::size_t i = 0; i < profile.sets.size(); ++i) {
    if (usable[i] && !is_member(instance.player(i), profile.sets[i], budget)) {
      out.push_back({Violation::Kind::infeasible, {i}, profile.sets[i]});
    }
  }
  return out;
}

}  // namespace spg
