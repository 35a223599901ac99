#include "spg/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "spg/error.hpp"

namespace spg {

bool SharedSymmetric::operator==(const SharedSymmetric& other) const {
  if (copies != other.copies) return false;
  if (base == other.base) return true;
  return base && other.base && *base == *other.base;
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_job(std::size_t universe, ItemIndex item, const Rational& processing) {
  if (item >= universe) throw InputError("job references unknown item");
  if (processing <= 0) throw InputError("processing times must be positive");
}

/// Machine view shared by every scheduling descriptor.
struct MachineEnv {
  std::size_t machines = 1;
  bool identical = true;
  const std::map<ItemIndex, Job>* jobs = nullptr;
  const UnrelatedMachines* unrelated = nullptr;

  bool knows(ItemIndex j) const {
    return jobs ? jobs->count(j) > 0 : unrelated->jobs.count(j) > 0;
  }

  std::optional<Rational> processing(std::size_t m, ItemIndex j) const {
    if (jobs) {
      auto it = jobs->find(j);
      if (it == jobs->end()) return std::nullopt;
      return it->second.processing;
    }
    const auto& row = unrelated->processing[m];
    auto it = row.find(j);
    if (it == row.end()) return std::nullopt;
    return it->second;
  }

  const Rational& release(ItemIndex j) const {
    return jobs ? jobs->at(j).release : unrelated->jobs.at(j).release;
  }

  const Rational& deadline(ItemIndex j) const {
    return jobs ? jobs->at(j).deadline : unrelated->jobs.at(j).deadline;
  }
};

std::optional<MachineEnv> machine_env(const FeasibilitySystem& system) {
  return std::visit(
      Overloaded{
          [](const ExplicitFamily&) -> std::optional<MachineEnv> { return std::nullopt; },
          [](const SingleMachine& s) -> std::optional<MachineEnv> {
            return MachineEnv{1, true, &s.jobs, nullptr};
          },
          [](const IdenticalMachines& s) -> std::optional<MachineEnv> {
            return MachineEnv{s.copies, true, &s.jobs, nullptr};
          },
          [](const UnrelatedMachines& s) -> std::optional<MachineEnv> {
            return MachineEnv{s.machines.size(), false, nullptr, &s};
          },
          [](const SharedSymmetric& s) -> std::optional<MachineEnv> {
            if (const auto* single = std::get_if<SingleMachine>(&s.base->descriptor())) {
              return MachineEnv{s.copies, true, &single->jobs, nullptr};
            }
            return std::nullopt;
          },
      },
      system.descriptor());
}

bool sorted_by_deadline(const MachineEnv& env, ItemIndex a, ItemIndex b) {
  const auto& da = env.deadline(a);
  const auto& db = env.deadline(b);
  return da != db ? da < db : a < b;
}

void search_orders(const MachineEnv& env, std::size_t m, std::vector<ItemIndex>& remaining,
                   const Rational& time, std::vector<ScheduledJob>& sequence,
                   std::optional<std::vector<ScheduledJob>>& found, Budget& budget) {
  budget.charge("single-machine order search");
  if (remaining.empty()) {
    found = sequence;
    return;
  }
  for (std::size_t idx = 0; idx < remaining.size() && !found; ++idx) {
    const ItemIndex j = remaining[idx];
    const Rational p = *env.processing(m, j);
    const Rational start = std::max(time, env.release(j));
    const Rational end = start + p;
    if (end > env.deadline(j)) continue;
    bool viable = true;
    for (ItemIndex k : remaining) {
      if (k == j) continue;
      const Rational k_end = std::max(end, env.release(k)) + *env.processing(m, k);
      if (k_end > env.deadline(k)) {
        viable = false;
        break;
      }
    }
    if (!viable) continue;
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(idx));
    sequence.push_back({j, start});
    search_orders(env, m, remaining, end, sequence, found, budget);
    sequence.pop_back();
    remaining.insert(remaining.begin() + static_cast<std::ptrdiff_t>(idx), j);
  }
}

/// Feasible non-preemptive schedule of `items` on machine m, if any.
std::optional<std::vector<ScheduledJob>> schedule_one(const MachineEnv& env, std::size_t m,
                                                      std::vector<ItemIndex> items,
                                                      Budget& budget) {
  for (ItemIndex j : items) {
    auto p = env.processing(m, j);
    if (!p || env.release(j) + *p > env.deadline(j)) return std::nullopt;
  }
  std::sort(items.begin(), items.end(),
            [&](ItemIndex a, ItemIndex b) { return sorted_by_deadline(env, a, b); });
  const bool common_release =
      std::all_of(items.begin(), items.end(),
                  [&](ItemIndex j) { return env.release(j) == env.release(items.front()); });
  if (items.empty() || common_release) {
    // Earliest deadline first is optimal when all jobs are released together.
    std::vector<ScheduledJob> sequence;
    Rational t = items.empty() ? Rational(0) : env.release(items.front());
    for (ItemIndex j : items) {
      sequence.push_back({j, t});
      t += *env.processing(m, j);
      if (t > env.deadline(j)) return std::nullopt;
    }
    return sequence;
  }
  std::vector<ScheduledJob> sequence;
  std::optional<std::vector<ScheduledJob>> found;
  Rational start = env.release(items.front());
  for (ItemIndex j : items) start = std::min(start, env.release(j));
  search_orders(env, m, items, start, sequence, found, budget);
  return found;
}

bool uniform_unit_case(const MachineEnv& env, const std::vector<ItemIndex>& items) {
  if (!env.identical || items.empty()) return false;
  const Rational& r0 = env.release(items.front());
  const Rational p0 = *env.processing(0, items.front());
  return std::all_of(items.begin(), items.end(), [&](ItemIndex j) {
    return env.release(j) == r0 && *env.processing(0, j) == p0;
  });
}

void assign_machines(const MachineEnv& env, const std::vector<ItemIndex>& items, std::size_t pos,
                     std::vector<std::vector<ItemIndex>>& per_machine,
                     std::optional<ScheduleWitness>& found, Budget& budget) {
  budget.charge("machine assignment search");
  if (pos == items.size()) {
    ScheduleWitness w;
    for (std::size_t m = 0; m < env.machines; ++m) {
      w.machines.push_back(*schedule_one(env, m, per_machine[m], budget));
    }
    found = std::move(w);
    return;
  }
  const ItemIndex j = items[pos];
  bool tried_empty = false;
  for (std::size_t m = 0; m < env.machines && !found; ++m) {
    if (env.identical && per_machine[m].empty()) {
      if (tried_empty) continue;
      tried_empty = true;
    }
    per_machine[m].push_back(j);
    if (schedule_one(env, m, per_machine[m], budget)) {
      assign_machines(env, items, pos + 1, per_machine, found, budget);
    }
    per_machine[m].pop_back();
  }
}

std::optional<ScheduleWitness> schedule_many(const MachineEnv& env, const ItemSet& set,
                                             Budget& budget) {
  std::vector<ItemIndex> items = set.indices();
  for (ItemIndex j : items) {
    if (!env.knows(j)) return std::nullopt;
  }
  if (env.machines == 1) {
    auto seq = schedule_one(env, 0, items, budget);
    if (!seq) return std::nullopt;
    return ScheduleWitness{{std::move(*seq)}};
  }
  std::sort(items.begin(), items.end(),
            [&](ItemIndex a, ItemIndex b) { return sorted_by_deadline(env, a, b); });
  if (uniform_unit_case(env, items)) {
    // Equal processing and releases: round-robin in deadline order is optimal.
    ScheduleWitness w;
    w.machines.resize(env.machines);
    const Rational p = *env.processing(0, items.front());
    const Rational r0 = env.release(items.front());
    for (std::size_t t = 0; t < items.size(); ++t) {
      const Rational start = r0 + p * Rational(static_cast<long>(t / env.machines));
      if (start + p > env.deadline(items[t])) return std::nullopt;
      w.machines[t % env.machines].push_back({items[t], start});
    }
    return w;
  }
  std::vector<std::vector<ItemIndex>> per_machine(env.machines);
  std::optional<ScheduleWitness> found;
  assign_machines(env, items, 0, per_machine, found, budget);
  return found;
}

bool in_explicit(const ExplicitFamily& family, const ItemSet& set) {
  return std::any_of(family.maximal_sets.begin(), family.maximal_sets.end(),
                     [&](const ItemSet& m) { return set.is_subset_of(m); });
}

bool partition_blocks(const ExplicitFamily& family, const std::vector<ItemIndex>& items,
                      std::size_t pos, std::vector<ItemSet>& blocks, Budget& budget) {
  budget.charge("shared family partition search");
  if (pos == items.size()) return true;
  bool tried_empty = false;
  for (auto& block : blocks) {
    if (block.empty()) {
      if (tried_empty) continue;
      tried_empty = true;
    }
    block.insert(items[pos]);
    if (in_explicit(family, block) && partition_blocks(family, items, pos + 1, blocks, budget)) {
      return true;
    }
    block.erase(items[pos]);
  }
  return false;
}

ItemSet explicit_support(const ExplicitFamily& family, std::size_t universe) {
  ItemSet s(universe);
  for (const auto& m : family.maximal_sets) s |= m;
  return s;
}

}  // namespace

FeasibilitySystem::FeasibilitySystem(std::size_t universe, Variant descriptor)
    : universe_(universe), descriptor_(std::move(descriptor)) {
  std::visit(
      Overloaded{
          [&](const ExplicitFamily& f) {
            for (const auto& m : f.maximal_sets) {
              if (m.universe() != universe_) throw InputError("maximal set over wrong universe");
            }
          },
          [&](const SingleMachine& s) {
            for (const auto& [j, job] : s.jobs) check_job(universe_, j, job.processing);
          },
          [&](const IdenticalMachines& s) {
            if (s.copies < 1) throw InputError("copies must be at least 1");
            for (const auto& [j, job] : s.jobs) check_job(universe_, j, job.processing);
          },
          [&](const UnrelatedMachines& s) {
            if (s.machines.empty()) throw InputError("unrelated system needs a machine");
            if (s.processing.size() != s.machines.size()) {
              throw InputError("one processing row per machine required");
            }
            for (const auto& row : s.processing) {
              for (const auto& [j, p] : row) {
                check_job(universe_, j, p);
                if (!s.jobs.count(j)) throw InputError("processing time for job without window");
              }
            }
            for (const auto& [j, w] : s.jobs) {
              if (j >= universe_) throw InputError("job references unknown item");
            }
          },
          [&](const SharedSymmetric& s) {
            if (!s.base) throw InputError("shared system without base");
            if (s.copies < 1) throw InputError("copies must be at least 1");
            if (s.base->universe() != universe_) throw InputError("shared base over wrong universe");
            const auto& d = s.base->descriptor();
            if (!std::holds_alternative<ExplicitFamily>(d) &&
                !std::holds_alternative<SingleMachine>(d)) {
              throw InputError("shared base must be explicit or single_machine");
            }
          },
      },
      descriptor_);
}

std::string FeasibilitySystem::kind_name() const {
  return std::visit(Overloaded{
                        [](const ExplicitFamily&) { return std::string("explicit"); },
                        [](const SingleMachine&) { return std::string("single_machine"); },
                        [](const IdenticalMachines&) { return std::string("identical_machines"); },
                        [](const UnrelatedMachines&) { return std::string("unrelated_machines"); },
                        [](const SharedSymmetric&) { return std::string("shared_symmetric"); },
                    },
                    descriptor_);
}

std::uint32_t FeasibilitySystem::copies() const {
  if (const auto* s = std::get_if<IdenticalMachines>(&descriptor_)) return s->copies;
  if (const auto* s = std::get_if<SharedSymmetric>(&descriptor_)) return s->copies;
  return 1;
}

ItemSet FeasibilitySystem::support() const {
  ItemSet s(universe_);
  std::visit(Overloaded{
                 [&](const ExplicitFamily& f) { s = explicit_support(f, universe_); },
                 [&](const SingleMachine& m) {
                   for (const auto& [j, job] : m.jobs) s.insert(j);
                 },
                 [&](const IdenticalMachines& m) {
                   for (const auto& [j, job] : m.jobs) s.insert(j);
                 },
                 [&](const UnrelatedMachines& m) {
                   for (const auto& [j, w] : m.jobs) s.insert(j);
                 },
                 [&](const SharedSymmetric& m) { s = m.base->support(); },
             },
             descriptor_);
  return s;
}

bool FeasibilitySystem::is_scheduling() const { return machine_env(*this).has_value(); }

Membership check_membership(const FeasibilitySystem& system, const ItemSet& items,
                            Budget& budget) {
  if (items.universe() != system.universe()) {
    throw InputError("item set and feasibility system disagree on the item universe");
  }
  if (auto env = machine_env(system)) {
    auto witness = schedule_many(*env, items, budget);
    if (!witness) return {false, std::nullopt};
    witness->machines.resize(env->machines);
    return {true, std::move(witness)};
  }
  if (items.empty()) return {true, std::nullopt};
  if (const auto* f = std::get_if<ExplicitFamily>(&system.descriptor())) {
    return {in_explicit(*f, items), std::nullopt};
  }
  const auto& shared = std::get<SharedSymmetric>(system.descriptor());
  const auto& family = std::get<ExplicitFamily>(shared.base->descriptor());
  if (!items.is_subset_of(explicit_support(family, system.universe()))) {
    return {false, std::nullopt};
  }
  if (in_explicit(family, items)) return {true, std::nullopt};
  if (shared.copies == 1) return {false, std::nullopt};
  std::vector<ItemSet> blocks(shared.copies, ItemSet(system.universe()));
  return {partition_blocks(family, items.indices(), 0, blocks, budget), std::nullopt};
}

bool is_member(const FeasibilitySystem& system, const ItemSet& items, Budget& budget) {
  return check_membership(system, items, budget).member;
}

bool witness_is_valid(const FeasibilitySystem& system, const ItemSet& items,
                      const ScheduleWitness& witness) {
  auto env = machine_env(system);
  if (!env || witness.machines.size() != env->machines) return false;
  ItemSet seen(system.universe());
  for (std::size_t m = 0; m < witness.machines.size(); ++m) {
    auto sequence = witness.machines[m];
    std::sort(sequence.begin(), sequence.end(),
              [](const ScheduledJob& a, const ScheduledJob& b) { return a.start < b.start; });
    Rational busy_until;
    bool first = true;
    for (const auto& [j, start] : sequence) {
      if (!items.contains(j) || seen.contains(j) || !env->knows(j)) return false;
      seen.insert(j);
      auto p = env->processing(m, j);
      if (!p) return false;
      if (start < env->release(j) || start + *p > env->deadline(j)) return false;
      if (!first && start < busy_until) return false;
      busy_until = start + *p;
      first = false;
    }
  }
  return seen == items;
}

ClosureCheck validate_downward_closed(const FeasibilitySystem& system, std::size_t samples,
                                      std::uint64_t seed, Budget& budget) {
  const ExplicitFamily* family = std::get_if<ExplicitFamily>(&system.descriptor());
  if (const auto* shared = std::get_if<SharedSymmetric>(&system.descriptor())) {
    family = std::get_if<ExplicitFamily>(&shared->base->descriptor());
  }
  if (family) {
    const auto& sets = family->maximal_sets;
    for (std::size_t a = 0; a < sets.size(); ++a) {
      for (std::size_t b = 0; b < sets.size(); ++b) {
        if (a != b && sets[a].is_subset_of(sets[b])) {
          return {false, sets[b], sets[a]};
        }
      }
    }
    return {};
  }

  std::mt19937_64 rng(seed);
  std::vector<ItemIndex> pool = system.support().indices();
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = pool.size(); i > 1; --i) {
      std::swap(pool[i - 1], pool[rng() % i]);
    }
    ItemSet feasible(system.universe());
    for (ItemIndex j : pool) {
      feasible.insert(j);
      if (!is_member(system, feasible, budget)) feasible.erase(j);
    }
    const auto members = feasible.indices();
    for (int trial = 0; trial < 4; ++trial) {
      ItemSet subset = feasible;
      for (ItemIndex j : members) {
        if (rng() & 1U) subset.erase(j);
      }
      if (!is_member(system, subset, budget)) return {false, feasible, subset};
    }
    if (!members.empty()) {
      ItemSet minus_one = feasible;
      minus_one.erase(members[rng() % members.size()]);
      if (!is_member(system, minus_one, budget)) return {false, feasible, minus_one};
    }
  }
  return {};
}

std::optional<Rational> deadline_of(const FeasibilitySystem& system, ItemIndex item) {
  auto env = machine_env(system);
  if (!env || !env->knows(item)) return std::nullopt;
  return env->deadline(item);
}

namespace {

void max_card_search(const FeasibilitySystem& system, const std::vector<ItemIndex>& cands,
                     std::size_t pos, ItemSet& current, std::size_t& best, Budget& budget) {
  budget.charge("maximum cardinality search");
  best = std::max(best, current.size());
  if (current.size() + (cands.size() - pos) <= best) return;
  const ItemIndex j = cands[pos];
  if (!current.contains(j)) {
    current.insert(j);
    if (is_member(system, current, budget)) {
      max_card_search(system, cands, pos + 1, current, best, budget);
    }
    current.erase(j);
  }
  max_card_search(system, cands, pos + 1, current, best, budget);
}

std::size_t max_card_with(const FeasibilitySystem& system, const std::vector<ItemIndex>& cands,
                          ItemSet forced, Budget& budget) {
  std::vector<ItemIndex> rest;
  for (ItemIndex j : cands) {
    if (!forced.contains(j)) rest.push_back(j);
  }
  std::size_t best = forced.size();
  max_card_search(system, rest, 0, forced, best, budget);
  return best;
}

}  // namespace

ItemSet max_cardinality_feasible(const FeasibilitySystem& system, const ItemSet& available,
                                 bool prefer_largest_deadline, Budget& budget) {
  if (available.universe() != system.universe()) {
    throw InputError("item set and feasibility system disagree on the item universe");
  }
  auto env = machine_env(system);
  if (prefer_largest_deadline && !env) {
    throw InputError("deadline preference needs a scheduling system");
  }
  std::vector<ItemIndex> order;
  ItemSet single(system.universe());
  available.for_each([&](ItemIndex j) {
    single.insert(j);
    if (is_member(system, single, budget)) order.push_back(j);
    single.erase(j);
  });
  if (prefer_largest_deadline) {
    std::stable_sort(order.begin(), order.end(), [&](ItemIndex a, ItemIndex b) {
      return env->deadline(a) > env->deadline(b);
    });
  }

  ItemSet chosen(system.universe());
  if (env && uniform_unit_case(*env, order)) {
    // Unit-type jobs form a matroid, so the plain scan is already maximum.
    for (ItemIndex j : order) {
      chosen.insert(j);
      if (!is_member(system, chosen, budget)) chosen.erase(j);
    }
    return chosen;
  }

  const std::size_t target = max_card_with(system, order, chosen, budget);
  for (ItemIndex j : order) {
    if (chosen.size() == target) break;
    chosen.insert(j);
    if (!is_member(system, chosen, budget) ||
        max_card_with(system, order, chosen, budget) < target) {
      chosen.erase(j);
    }
  }
  return chosen;
}

}  // namespace spg
