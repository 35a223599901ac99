#pragma once

#include <memory>
#include <random>

#include "spg/model.hpp"

namespace testing_support {

using namespace spg;

inline Rational r(long a, long b = 1) { return make_rational(a, b); }

inline std::vector<Item> unit_items(const std::vector<std::string>& ids) {
  std::vector<Item> items;
  for (const auto& id : ids) items.push_back({id, 1});
  return items;
}

/// Two players on items "1", "2": player 1 may take either alone, player 2
/// only item 2.
inline Instance example_one() {
  return Instance(unit_items({"1", "2"}),
                  {FeasibilitySystem(2, ExplicitFamily{{ItemSet::of(2, {0}), ItemSet::of(2, {1})}}),
                   FeasibilitySystem(2, ExplicitFamily{{ItemSet::of(2, {1})}})});
}

inline Profile profile(std::size_t universe, const std::vector<std::vector<ItemIndex>>& sets) {
  Profile p;
  for (const auto& s : sets) p.sets.push_back(ItemSet::of(universe, s));
  return p;
}

inline Rational small_rational(std::mt19937_64& rng, long max_num, long den) {
  return make_rational(static_cast<long>(rng() % static_cast<std::uint64_t>(max_num)), den);
}

inline std::map<ItemIndex, Job> random_jobs(std::mt19937_64& rng, std::size_t universe, bool releases) {
  std::map<ItemIndex, Job> jobs;
  for (ItemIndex j = 0; j < universe; ++j) {
    if (rng() % 5 == 0) continue;
    Rational release = releases ? small_rational(rng, 3, 2) : Rational(0);
    Rational processing = make_rational(1 + static_cast<long>(rng() % 4), 2);
    Rational deadline = release + processing + small_rational(rng, 6, 2);
    jobs[j] = {release, processing, deadline};
  }
  return jobs;
}

/// A random system of every kind, small enough for brute force.
inline FeasibilitySystem random_system(std::mt19937_64& rng, std::size_t universe) {
  switch (rng() % 5) {
    case 0: {
      ExplicitFamily f;
      for (int t = 0; t < 3; ++t) {
        ItemSet s(universe);
        for (ItemIndex j = 0; j < universe; ++j) {
          if (rng() & 1U) s.insert(j);
        }
        f.maximal_sets.push_back(s);
      }
      std::vector<ItemSet> kept;
      for (std::size_t a = 0; a < f.maximal_sets.size(); ++a) {
        bool dominated = false;
        for (std::size_t b = 0; b < f.maximal_sets.size(); ++b) {
          if (a != b && f.maximal_sets[a].is_subset_of(f.maximal_sets[b]) &&
              (f.maximal_sets[a] != f.maximal_sets[b] || b < a)) {
            dominated = true;
          }
        }
        if (!dominated) kept.push_back(f.maximal_sets[a]);
      }
      return FeasibilitySystem(universe, ExplicitFamily{kept});
    }
    case 1:
      return FeasibilitySystem(universe, SingleMachine{random_jobs(rng, universe, rng() & 1U)});
    case 2:
      return FeasibilitySystem(universe, IdenticalMachines{static_cast<std::uint32_t>(1 + rng() % 3),
                                                           random_jobs(rng, universe, rng() & 1U)});
    case 3: {
      UnrelatedMachines u;
      for (ItemIndex j = 0; j < universe; ++j) {
        if (rng() % 5 == 0) continue;
        Rational release = small_rational(rng, 3, 2);
        u.jobs[j] = {release, release + make_rational(1 + static_cast<long>(rng() % 6), 2)};
      }
      const std::size_t machines = 1 + rng() % 2;
      for (std::size_t m = 0; m < machines; ++m) {
        u.machines.push_back("m" + std::to_string(m));
        std::map<ItemIndex, Rational> row;
        for (const auto& entry : u.jobs) {
          if (rng() % 4 != 0) row[entry.first] = make_rational(1 + static_cast<long>(rng() % 4), 2);
        }
        u.processing.push_back(row);
      }
      return FeasibilitySystem(universe, u);
    }
    default: {
      auto base = std::make_shared<const FeasibilitySystem>(
          universe, SingleMachine{random_jobs(rng, universe, rng() & 1U)});
      return FeasibilitySystem(universe, SharedSymmetric{base, static_cast<std::uint32_t>(1 + rng() % 3)});
    }
  }
}

}  // namespace testing_support
