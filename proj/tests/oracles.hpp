#pragma once

// Brute-force reference implementations. They read descriptor data only and
// share no search code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "spg/model.hpp"

namespace oracle {

using spg::Instance;
using spg::ItemIndex;
using spg::ItemSet;
using spg::Profile;
using spg::Rational;
using Mask = std::uint32_t;

inline std::vector<ItemIndex> members_of(Mask m) {
  std::vector<ItemIndex> out;
  for (ItemIndex j = 0; j < 32; ++j) {
    if (m >> j & 1U) out.push_back(j);
  }
  return out;
}

inline Mask to_mask(const ItemSet& s) {
  Mask m = 0;
  for (auto j : s.indices()) m |= Mask{1} << j;
  return m;
}

inline ItemSet to_set(std::size_t universe, Mask m) { return ItemSet::of(universe, members_of(m)); }

inline Rational weight(const Instance& inst, Mask m) {
  Rational w;
  for (auto j : members_of(m)) w += inst.weight(j);
  return w;
}

struct Task {
  Rational release, processing, deadline;
};

/// Some job order, each job started as early as possible, meets all deadlines.
inline bool one_machine(std::vector<Task> tasks) {
  std::vector<std::size_t> perm(tasks.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Rational t;
    bool ok = true;
    for (auto i : perm) {
      Rational start = std::max(t, tasks[i].release);
      t = start + tasks[i].processing;
      if (t > tasks[i].deadline) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Tries every assignment of items to `blocks` groups.
inline bool split(const std::vector<ItemIndex>& items, std::size_t blocks,
                  const std::function<bool(std::size_t, const std::vector<ItemIndex>&)>& block_ok) {
  std::vector<std::size_t> choice(items.size(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t b = 0; b < blocks && ok; ++b) {
      std::vector<ItemIndex> part;
      for (std::size_t t = 0; t < items.size(); ++t) {
        if (choice[t] == b) part.push_back(items[t]);
      }
      ok = block_ok(b, part);
    }
    if (ok) return true;
    std::size_t t = 0;
    while (t < items.size() && ++choice[t] == blocks) choice[t++] = 0;
    if (t == items.size()) return false;
  }
}

inline bool explicit_member(const spg::ExplicitFamily& f, const std::vector<ItemIndex>& items) {
  if (items.empty()) return true;
  for (const auto& s : f.maximal_sets) {
    if (std::all_of(items.begin(), items.end(), [&](ItemIndex j) { return s.contains(j); })) return true;
  }
  return false;
}

inline bool jobs_on_machines(const std::map<ItemIndex, spg::Job>& jobs, std::size_t machines,
                             const std::vector<ItemIndex>& items) {
  for (auto j : items) {
    if (!jobs.count(j)) return false;
  }
  machines = std::max<std::size_t>(1, std::min(machines, items.size()));
  return split(items, machines, [&](std::size_t, const std::vector<ItemIndex>& part) {
    std::vector<Task> tasks;
    for (auto j : part) tasks.push_back({jobs.at(j).release, jobs.at(j).processing, jobs.at(j).deadline});
    return one_machine(tasks);
  });
}

inline bool member(const spg::FeasibilitySystem& sys, const std::vector<ItemIndex>& items) {
  const auto& d = sys.descriptor();
  if (auto* e = std::get_if<spg::ExplicitFamily>(&d)) return explicit_member(*e, items);
  if (auto* s = std::get_if<spg::SingleMachine>(&d)) return jobs_on_machines(s->jobs, 1, items);
  if (auto* m = std::get_if<spg::IdenticalMachines>(&d)) return jobs_on_machines(m->jobs, m->copies, items);
  if (auto* u = std::get_if<spg::UnrelatedMachines>(&d)) {
    for (auto j : items) {
      if (!u->jobs.count(j)) return false;
    }
    return split(items, u->machines.size(), [&](std::size_t m, const std::vector<ItemIndex>& part) {
      std::vector<Task> tasks;
      for (auto j : part) {
        auto it = u->processing[m].find(j);
        if (it == u->processing[m].end()) return false;
        tasks.push_back({u->jobs.at(j).release, it->second, u->jobs.at(j).deadline});
      }
      return one_machine(tasks);
    });
  }
  const auto& shared = std::get<spg::SharedSymmetric>(d);
  const auto& base = shared.base->descriptor();
  if (auto* s = std::get_if<spg::SingleMachine>(&base)) return jobs_on_machines(s->jobs, shared.copies, items);
  const auto& family = std::get<spg::ExplicitFamily>(base);
  const std::size_t blocks = std::max<std::size_t>(1, std::min<std::size_t>(shared.copies, items.size()));
  return split(items, blocks, [&](std::size_t, const std::vector<ItemIndex>& part) {
    return explicit_member(family, part);
  });
}

inline bool member(const spg::FeasibilitySystem& sys, Mask m) { return member(sys, members_of(m)); }

/// Index lists compared lexicographically, a prefix first.
inline bool lex_before(Mask a, Mask b) {
  auto x = members_of(a), y = members_of(b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

struct Best {
  Mask set = 0;
  Rational value;
};

/// Every subset of the pool: max weight, then fewest items, then lex first.
inline Best best_response(const Instance& inst, std::size_t player, Mask pool) {
  Best best;
  for (Mask s = pool;; s = (s - 1) & pool) {
    if (member(inst.player(player), s)) {
      Rational w = weight(inst, s);
      const int c = __builtin_popcount(s), bc = __builtin_popcount(best.set);
      if (w > best.value || (w == best.value && (c < bc || (c == bc && lex_before(s, best.set))))) {
        best = {s, w};
      }
    }
    if (s == 0) break;
  }
  return best;
}

/// Every assignment of pool items to a member or to nobody, pruned only by
/// downward closure of the members' families.
inline Rational joint_value(const Instance& inst, const std::vector<std::size_t>& members, Mask pool) {
  const auto items = members_of(pool);
  std::vector<Mask> held(members.size(), 0);
  Rational best;
  std::function<void(std::size_t, const Rational&)> go = [&](std::size_t t, const Rational& value) {
    if (t == items.size()) {
      best = std::max(best, value);
      return;
    }
    go(t + 1, value);
    for (std::size_t m = 0; m < members.size(); ++m) {
      held[m] |= Mask{1} << items[t];
      if (member(inst.player(members[m]), held[m])) go(t + 1, value + inst.weight(items[t]));
      held[m] &= ~(Mask{1} << items[t]);
    }
  };
  go(0, Rational(0));
  return best;
}

inline Rational opt_value(const Instance& inst) {
  std::vector<std::size_t> all(inst.num_players());
  std::iota(all.begin(), all.end(), 0);
  return joint_value(inst, all, (Mask{1} << inst.num_items()) - 1);
}

inline std::vector<Mask> masks_of(const Profile& p) {
  std::vector<Mask> out;
  for (const auto& s : p.sets) out.push_back(to_mask(s));
  return out;
}

/// All valid profiles meeting the alpha Nash condition.
inline std::set<std::vector<Mask>> nash(const Instance& inst, const Rational& alpha) {
  const std::size_t n = inst.num_players(), m = inst.num_items();
  const Mask all = (Mask{1} << m) - 1;
  std::set<std::vector<Mask>> out;
  std::map<std::pair<std::size_t, Mask>, Rational> memo;
  auto best_value = [&](std::size_t i, Mask pool) {
    auto key = std::make_pair(i, pool);
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, best_response(inst, i, pool).value).first;
    return it->second;
  };
  std::vector<Mask> sets(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t j) {
    if (j == m) {
      for (std::size_t i = 0; i < n; ++i) {
        Mask others = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != i) others |= sets[k];
        }
        if (alpha * weight(inst, sets[i]) < best_value(i, all & ~others)) return;
      }
      out.insert(sets);
      return;
    }
    go(j + 1);
    for (std::size_t i = 0; i < n; ++i) {
      sets[i] |= Mask{1} << j;
      if (member(inst.player(i), sets[i])) go(j + 1);
      sets[i] &= ~(Mask{1} << j);
    }
  };
  go(0);
  return out;
}

/// Sequential play in `order`: each mover picks any feasible subset of what
/// is left that is worth at least 1/alpha of the best one.
inline std::set<std::vector<Mask>> spe_outcomes(const Instance& inst, const std::vector<std::size_t>& order,
                                                const Rational& alpha) {
  std::set<std::vector<Mask>> out;
  std::vector<Mask> sets(inst.num_players(), 0);
  std::function<void(std::size_t, Mask)> go = [&](std::size_t t, Mask left) {
    if (t == order.size()) {
      out.insert(sets);
      return;
    }
    const std::size_t mover = order[t];
    const Rational best = best_response(inst, mover, left).value;
    for (Mask s = left;; s = (s - 1) & left) {
      if (member(inst.player(mover), s) && alpha * weight(inst, s) >= best) {
        sets[mover] = s;
        go(t + 1, left & ~s);
        sets[mover] = 0;
      }
      if (s == 0) break;
    }
  };
  go(0, (Mask{1} << inst.num_items()) - 1);
  return out;
}

/// Collusion condition by joint enumeration over every coalition of size <= k.
inline bool collusion_holds(const Instance& inst, const std::vector<Mask>& sets, std::size_t k,
                            const Rational& alpha) {
  const std::size_t n = inst.num_players();
  Mask held = 0;
  for (auto s : sets) held |= s;
  const Mask free = ((Mask{1} << inst.num_items()) - 1) & ~held;
  for (Mask c = 1; c < (Mask{1} << n); ++c) {
    if (static_cast<std::size_t>(__builtin_popcount(c)) > k) continue;
    std::vector<std::size_t> members;
    Mask pool = free;
    Rational old;
    for (std::size_t i = 0; i < n; ++i) {
      if (c >> i & 1U) {
        members.push_back(i);
        pool |= sets[i];
        old += weight(inst, sets[i]);
      }
    }
    if (alpha * old < joint_value(inst, members, pool)) return false;
  }
  return true;
}

/// Deadline-class simulation of the largest-deadlines-first sequential play
/// on n^2 unit jobs, n per deadline 1..n, single machine per player. Each
/// player fills time slots from the latest backwards with the job of largest
/// remaining deadline that still fits, then keeps ceil(count / alpha) of
/// them, largest deadlines first.
inline std::vector<long> deadline_greedy_counts(long n, const Rational& alpha) {
  std::vector<long> left(n + 1, n);
  std::vector<long> taken_per_player;
  for (long player = 0; player < n; ++player) {
    std::vector<long> picked;
    std::vector<long> avail = left;
    for (long slot = n; slot >= 1; --slot) {
      for (long d = n; d >= slot; --d) {
        if (avail[d] > 0) {
          --avail[d];
          picked.push_back(d);
          break;
        }
      }
    }
    std::sort(picked.rbegin(), picked.rend());
    long keep = 0;
    while (Rational(keep) * alpha < Rational(static_cast<long>(picked.size()))) ++keep;
    for (long t = 0; t < keep; ++t) --left[picked[t]];
    taken_per_player.push_back(keep);
  }
  return taken_per_player;
}

}  // namespace oracle
