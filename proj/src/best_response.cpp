#include "spg/best_response.hpp"

#include <algorithm>
#include <numeric>

#include "spg/error.hpp"

namespace spg {

namespace {

/// Search state shared by both passes of the packing search.
class PackingSearch {
 public:
  PackingSearch(const Instance& instance, const std::vector<std::size_t>& members,
                const ItemSet& pool, Budget& budget)
      : instance_(instance), members_(members), budget_(budget) {
    for (std::size_t m : members_) {
      if (m >= instance.num_players()) throw InputError("player index out of range");
    }
    for (std::size_t a = 0; a < members_.size(); ++a) {
      for (std::size_t b = a + 1; b < members_.size(); ++b) {
        if (members_[a] == members_[b]) throw InputError("coalition lists a player twice");
      }
    }
    if (pool.universe() != instance.num_items()) throw InputError("pool over wrong universe");

    twin_of_.assign(members_.size(), kNone);
    for (std::size_t b = 0; b < members_.size(); ++b) {
      for (std::size_t a = b; a-- > 0;) {
        if (instance.player(members_[a]) == instance.player(members_[b])) {
          twin_of_[b] = a;
          break;
        }
      }
    }

    sets_.assign(members_.size(), instance.empty_set());
    ItemSet single = instance.empty_set();
    pool.for_each([&](ItemIndex j) {
      if (instance.weight(j) <= 0) return;
      single.insert(j);
      for (std::size_t m = 0; m < members_.size(); ++m) {
        if (is_member(instance.player(members_[m]), single, budget_)) {
          items_.push_back(j);
          break;
        }
      }
      single.erase(j);
    });
  }

  Rational max_value() {
    order_ = items_;
    std::stable_sort(order_.begin(), order_.end(), [&](ItemIndex a, ItemIndex b) {
      return instance_.weight(a) > instance_.weight(b);
    });
    suffix_ = suffix_sums(order_);
    best_ = 0;
    Rational current;
    value_dfs(0, current);
    return best_;
  }

  Packing canonical(const Rational& target) {
    order_ = items_;
    suffix_ = suffix_sums(order_);
    std::vector<Rational> sorted;
    for (ItemIndex j : items_) sorted.push_back(instance_.weight(j));
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::size_t cap = 0;
    Rational reach;
    while (reach < target && cap < sorted.size()) reach += sorted[cap++];

    for (; cap <= order_.size(); ++cap) {
      for (auto& s : sets_) s = instance_.empty_set();
      Rational current;
      if (tie_dfs(0, current, 0, cap, target)) {
        return Packing{members_, sets_, target};
      }
    }
    throw std::logic_error("packing value not reproducible in tie-breaking pass");
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::vector<Rational> suffix_sums(const std::vector<ItemIndex>& order) const {
    std::vector<Rational> s(order.size() + 1);
    for (std::size_t i = order.size(); i-- > 0;) s[i] = s[i + 1] + instance_.weight(order[i]);
    return s;
  }

  /// Members sharing a descriptor are interchangeable: an unused member may
  /// only be opened when its previous twin is already in use.
  bool blocked(std::size_t m) const {
    return sets_[m].empty() && twin_of_[m] != kNone && sets_[twin_of_[m]].empty();
  }

  bool can_take(std::size_t m, ItemIndex j) {
    if (blocked(m)) return false;
    sets_[m].insert(j);
    const bool ok = is_member(instance_.player(members_[m]), sets_[m], budget_);
    if (!ok) sets_[m].erase(j);
    return ok;
  }

  void value_dfs(std::size_t pos, Rational& current) {
    budget_.charge("packing search");
    if (current > best_) best_ = current;
    if (pos == order_.size() || current + suffix_[pos] <= best_) return;
    const ItemIndex j = order_[pos];
    const Rational& w = instance_.weight(j);
    for (std::size_t m = 0; m < members_.size(); ++m) {
      if (!can_take(m, j)) continue;
      current += w;
      value_dfs(pos + 1, current);
      current -= w;
      sets_[m].erase(j);
      if (current + suffix_[pos] <= best_) return;
    }
    value_dfs(pos + 1, current);
  }

  bool tie_dfs(std::size_t pos, Rational& current, std::size_t count, std::size_t cap,
               const Rational& target) {
    budget_.charge("packing tie-break search");
    if (current == target) return true;
    if (pos == order_.size() || count == cap || current + suffix_[pos] < target) return false;
    const ItemIndex j = order_[pos];
    const Rational& w = instance_.weight(j);
    for (std::size_t m = 0; m < members_.size(); ++m) {
      if (!can_take(m, j)) continue;
      current += w;
      if (tie_dfs(pos + 1, current, count + 1, cap, target)) return true;
      current -= w;
      sets_[m].erase(j);
    }
    return tie_dfs(pos + 1, current, count, cap, target);
  }

  const Instance& instance_;
  std::vector<std::size_t> members_;
  Budget& budget_;
  std::vector<std::size_t> twin_of_;
  std::vector<ItemIndex> items_;
  std::vector<ItemIndex> order_;
  std::vector<Rational> suffix_;
  std::vector<ItemSet> sets_;
  Rational best_;
};

}  // namespace

Packing max_weight_packing(const Instance& instance, const std::vector<std::size_t>& members,
                           const ItemSet& pool, Budget& budget) {
  PackingSearch search(instance, members, pool, budget);
  const Rational value = search.max_value();
  return search.canonical(value);
}

Rational max_packing_value(const Instance& instance, const std::vector<std::size_t>& members,
                           const ItemSet& pool, Budget& budget) {
  return PackingSearch(instance, members, pool, budget).max_value();
}

Response best_response(const Instance& instance, std::size_t player, const ItemSet& available,
                       Budget& budget) {
  auto packing = max_weight_packing(instance, {player}, available, budget);
  return {std::move(packing.sets.front()), std::move(packing.value)};
}

Rational best_response_value(const Instance& instance, std::size_t player,
                             const ItemSet& available, Budget& budget) {
  return max_packing_value(instance, {player}, available, budget);
}

AlphaCheck check_alpha_best_response(const Instance& instance, std::size_t player,
                                     const ItemSet& available, const ItemSet& chosen,
                                     const Rational& alpha, Budget& budget) {
  if (alpha < 1) throw InputError("alpha must be at least 1");
  if (player >= instance.num_players()) throw InputError("player index out of range");
  if (!is_member(instance.player(player), chosen, budget)) {
    throw InputError("chosen set is not feasible for player " + std::to_string(player + 1));
  }
  const ItemSet pool = available | chosen;
  const Rational held = weight_of(instance, chosen);
  const Rational best = best_response_value(instance, player, pool, budget);
  if (alpha * held >= best) return {};
  auto response = best_response(instance, player, pool, budget);
  return {false, DeviationWitness{{player}, {std::move(response.set)}, held, response.value}};
}

bool is_alpha_best_response(const Instance& instance, std::size_t player,
                            const ItemSet& available, const ItemSet& chosen,
                            const Rational& alpha, Budget& budget) {
  return check_alpha_best_response(instance, player, available, chosen, alpha, budget).holds;
}

Packing coalition_best_response(const Instance& instance, const std::vector<std::size_t>& coalition,
                                const ItemSet& available, Budget& budget) {
  if (coalition.empty()) throw InputError("empty coalition");
  return max_weight_packing(instance, coalition, available, budget);
}

}  // namespace spg
