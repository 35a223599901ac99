#include "spg/factory.hpp"

#include <algorithm>
#include <memory>
#include <random>

#include "spg/equilibria.hpp"
#include "spg/error.hpp"

namespace spg {

namespace {

std::string padded(unsigned value, unsigned largest) {
  const std::size_t width = std::to_string(largest).size();
  std::string s = std::to_string(value);
  return std::string(width - std::min(width, s.size()), '0') + s;
}

Rational ratio(unsigned a, unsigned b) { return make_rational(static_cast<long>(a), static_cast<long>(b)); }

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

void check_spec(const GeneratorSpec& s) {
  switch (s.family) {
    case Family::ex_trivial:
      break;
    case Family::ex_asym:
      require(s.q >= 1 && s.p >= s.q, "ex_asym needs p >= q >= 1");
      break;
    case Family::ex_sym:
      require(s.q >= 1 && s.p >= s.q, "ex_sym needs p >= q >= 1");
      require(s.n >= 1, "ex_sym needs n >= 1");
      break;
    case Family::ex_seq:
      require(s.n >= 1, "ex_seq needs n >= 1");
      require(s.alpha >= 1, "alpha must be at least 1");
      break;
    case Family::ex_collusion:
      require(s.n >= 2, "ex_collusion needs n >= 2");
      require(s.k >= 1 && s.k <= s.n, "ex_collusion needs 1 <= k <= n");
      require(s.alpha >= 1, "alpha must be at least 1");
      break;
    case Family::random_explicit:
    case Family::random_symmetric:
      require(s.n >= 1, "random families need n >= 1");
      require(s.max_weight >= 1, "max_weight must be at least 1");
      require(s.copies >= 1, "copies must be at least 1");
      break;
  }
}

/// Index lookup for ids known to exist.
struct Namer {
  const std::vector<Item>& items;
  ItemIndex operator()(const std::string& id) const {
    auto it = std::lower_bound(items.begin(), items.end(), id,
                               [](const Item& item, const std::string& key) { return item.id < key; });
    return static_cast<ItemIndex>(it - items.begin());
  }
};

std::vector<Item> sorted(std::vector<Item> items) {
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
  return items;
}

ItemSet set_of(std::size_t universe, const Namer& name, const std::vector<std::string>& ids) {
  ItemSet s(universe);
  for (const auto& id : ids) s.insert(name(id));
  return s;
}

// ---- ex_trivial ----------------------------------------------------------

Instance trivial() {
  std::vector<Item> items{{"1", 1}, {"2", 1}};
  ItemSet one = ItemSet::of(2, {0});
  ItemSet two = ItemSet::of(2, {1});
  return Instance(items, {FeasibilitySystem(2, ExplicitFamily{{one, two}}),
                          FeasibilitySystem(2, ExplicitFamily{{two}})});
}

// ---- ex_asym -------------------------------------------------------------

std::string p_job(unsigned i, unsigned largest) { return "p" + padded(i, largest); }
std::string q_job(unsigned i, unsigned largest) { return "q" + padded(i, largest); }

Instance asym(unsigned p, unsigned q) {
  const unsigned largest = std::max(p, q);
  std::vector<Item> raw;
  for (unsigned i = 1; i <= p; ++i) raw.push_back({p_job(i, largest), 1});
  for (unsigned i = 1; i <= q; ++i) raw.push_back({q_job(i, largest), 1});
  const auto items = sorted(raw);
  const Namer name{items};
  const std::size_t u = items.size();

  std::map<ItemIndex, TimeWindow> windows;
  for (const auto& item : items) windows[name(item.id)] = {0, 1};

  std::vector<FeasibilitySystem> players;
  {
    std::map<ItemIndex, Rational> fast;
    for (const auto& item : items) fast[name(item.id)] = ratio(1, p);
    players.emplace_back(u, UnrelatedMachines{{"m1"}, {fast}, windows});
  }
  for (unsigned i = 2; i <= q + 1; ++i) {
    std::map<ItemIndex, Rational> slow;
    for (unsigned j = 1; j <= p; ++j) slow[name(p_job(j, largest))] = 2;
    for (unsigned j = 1; j <= q; ++j) slow[name(q_job(j, largest))] = 1;
    players.emplace_back(u, UnrelatedMachines{{"m" + std::to_string(i)}, {slow}, windows});
  }
  return Instance(items, std::move(players));
}

ReferenceProfiles asym_profiles(const Instance& inst, unsigned p, unsigned q) {
  const unsigned largest = std::max(p, q);
  const Namer name{inst.items()};
  ReferenceProfiles r{Profile::empty(inst), Profile::empty(inst)};
  for (unsigned j = 1; j <= p; ++j) r.opt.sets[0].insert(name(p_job(j, largest)));
  for (unsigned j = 1; j <= q; ++j) {
    r.opt.sets[j].insert(name(q_job(j, largest)));
    r.bad.sets[0].insert(name(q_job(j, largest)));
  }
  return r;
}

// ---- ex_sym --------------------------------------------------------------

Instance sym(unsigned p, unsigned q, unsigned n) {
  const unsigned q_count = q * (n - 1) + p;
  const unsigned p_count = n - 1;
  const unsigned largest = std::max(q_count, p_count);
  std::vector<Item> raw;
  for (unsigned i = 1; i <= p_count; ++i) raw.push_back({p_job(i, largest), Rational(static_cast<long>(p))});
  for (unsigned i = 1; i <= q_count; ++i) raw.push_back({q_job(i, largest), 1});
  const auto items = sorted(raw);
  const Namer name{items};
  const std::size_t u = items.size();

  SingleMachine machine;
  for (unsigned i = 1; i <= p_count; ++i) machine.jobs[name(p_job(i, largest))] = {0, 1, 1};
  for (unsigned i = 1; i <= q_count; ++i) machine.jobs[name(q_job(i, largest))] = {0, ratio(1, q_count), 1};
  auto base = std::make_shared<const FeasibilitySystem>(u, machine);
  std::vector<FeasibilitySystem> players(n, FeasibilitySystem(u, SharedSymmetric{base, 1}));
  return Instance(items, std::move(players), true);
}

ReferenceProfiles sym_profiles(const Instance& inst, unsigned p, unsigned q, unsigned n) {
  const unsigned q_count = q * (n - 1) + p;
  const unsigned largest = std::max(q_count, n - 1);
  const Namer name{inst.items()};
  ReferenceProfiles r{Profile::empty(inst), Profile::empty(inst)};
  for (unsigned j = 1; j <= q_count; ++j) r.opt.sets[0].insert(name(q_job(j, largest)));
  for (unsigned i = 1; i < n; ++i) r.opt.sets[i].insert(name(p_job(i, largest)));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 1; j <= q; ++j) r.bad.sets[i].insert(name(q_job(i * q + j, largest)));
  }
  return r;
}

// ---- ex_seq --------------------------------------------------------------

std::string seq_job(unsigned cls, unsigned m, unsigned n) {
  return "d" + padded(cls, n) + "_" + padded(m, n);
}

Instance seq(unsigned n) {
  std::vector<Item> raw;
  for (unsigned k = 1; k <= n; ++k) {
    for (unsigned m = 1; m <= n; ++m) raw.push_back({seq_job(k, m, n), 1});
  }
  const auto items = sorted(raw);
  const Namer name{items};
  const std::size_t u = items.size();
  SingleMachine machine;
  for (unsigned k = 1; k <= n; ++k) {
    for (unsigned m = 1; m <= n; ++m) {
      machine.jobs[name(seq_job(k, m, n))] = {0, 1, Rational(static_cast<long>(k))};
    }
  }
  auto base = std::make_shared<const FeasibilitySystem>(u, machine);
  std::vector<FeasibilitySystem> players(n, FeasibilitySystem(u, SharedSymmetric{base, 1}));
  return Instance(items, std::move(players), true);
}

// ---- ex_collusion --------------------------------------------------------

std::string pair_item(unsigned i, unsigned j, unsigned n) {
  return "x" + padded(i, n) + "_" + padded(j, n);
}

Instance collusion(unsigned n, unsigned k, const Rational& alpha) {
  const Rational outside = Rational(static_cast<long>(n - k)) + Rational(static_cast<long>(n - 1)) * (alpha - 1);
  std::vector<Item> raw;
  for (unsigned i = 1; i <= n; ++i) {
    raw.push_back({pair_item(i, 0, n), outside});
    for (unsigned j = 1; j <= n; ++j) {
      if (i != j) raw.push_back({pair_item(i, j, n), 1});
    }
  }
  const auto items = sorted(raw);
  const Namer name{items};
  const std::size_t u = items.size();
  std::vector<FeasibilitySystem> players;
  for (unsigned i = 1; i <= n; ++i) {
    std::vector<std::string> opt_ids{pair_item(i, 0, n)};
    std::vector<std::string> eq_ids;
    for (unsigned j = 1; j <= n; ++j) {
      if (j == i) continue;
      opt_ids.push_back(pair_item(i, j, n));
      eq_ids.push_back(pair_item(j, i, n));
    }
    players.emplace_back(u, ExplicitFamily{{set_of(u, name, opt_ids), set_of(u, name, eq_ids)}});
  }
  return Instance(items, std::move(players));
}

ReferenceProfiles collusion_profiles(const Instance& inst) {
  ReferenceProfiles r{Profile::empty(inst), Profile::empty(inst)};
  for (std::size_t i = 0; i < inst.num_players(); ++i) {
    const auto& family = std::get<ExplicitFamily>(inst.player(i).descriptor());
    r.opt.sets[i] = family.maximal_sets[0];
    r.bad.sets[i] = family.maximal_sets[1];
  }
  return r;
}

// ---- random families -----------------------------------------------------

std::vector<ItemSet> antichain(std::vector<ItemSet> sets) {
  std::vector<ItemSet> out;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < sets.size() && !dominated; ++b) {
      if (a == b) continue;
      // Keep the first of equal sets, drop strict subsets.
      dominated = sets[a].is_subset_of(sets[b]) && (sets[a] != sets[b] || b < a);
    }
    if (!dominated) out.push_back(sets[a]);
  }
  return out;
}

std::vector<Item> random_items(std::mt19937_64& rng, unsigned count, unsigned max_weight) {
  std::vector<Item> items;
  for (unsigned j = 1; j <= count; ++j) {
    items.push_back({"i" + padded(j, count), Rational(static_cast<long>(1 + rng() % max_weight))});
  }
  return items;
}

Instance random_explicit(const GeneratorSpec& s) {
  std::mt19937_64 rng(s.seed);
  auto items = random_items(rng, s.items, s.max_weight);
  const std::size_t u = items.size();
  std::vector<FeasibilitySystem> players;
  for (unsigned i = 0; i < s.n; ++i) {
    std::vector<ItemSet> sets;
    const unsigned count = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned c = 0; c < count; ++c) {
      ItemSet set(u);
      for (std::size_t j = 0; j < u; ++j) {
        if (rng() & 1U) set.insert(static_cast<ItemIndex>(j));
      }
      sets.push_back(set);
    }
    players.emplace_back(u, ExplicitFamily{antichain(std::move(sets))});
  }
  return Instance(std::move(items), std::move(players));
}

Instance random_symmetric(const GeneratorSpec& s) {
  std::mt19937_64 rng(s.seed);
  auto items = random_items(rng, s.items, s.max_weight);
  const std::size_t u = items.size();
  std::vector<ItemSet> sets;
  const unsigned count = 1 + static_cast<unsigned>(rng() % 3);
  for (unsigned c = 0; c < count && u > 0; ++c) {
    ItemSet set(u);
    const unsigned size = 1 + static_cast<unsigned>(rng() % 3);
    for (unsigned t = 0; t < size; ++t) set.insert(static_cast<ItemIndex>(rng() % u));
    sets.push_back(set);
  }
  if (sets.empty()) sets.emplace_back(u);
  auto base = std::make_shared<const FeasibilitySystem>(u, ExplicitFamily{antichain(std::move(sets))});
  std::vector<FeasibilitySystem> players;
  for (unsigned i = 0; i < s.n; ++i) {
    const auto copies = 1 + static_cast<std::uint32_t>(rng() % s.copies);
    players.emplace_back(u, SharedSymmetric{base, copies});
  }
  return Instance(std::move(items), std::move(players), true);
}

}  // namespace

std::string to_string(Family family) {
  switch (family) {
    case Family::ex_trivial: return "ex_trivial";
    case Family::ex_asym: return "ex_asym";
    case Family::ex_sym: return "ex_sym";
    case Family::ex_seq: return "ex_seq";
    case Family::ex_collusion: return "ex_collusion";
    case Family::random_explicit: return "random_explicit";
    case Family::random_symmetric: return "random_symmetric";
  }
  return {};
}

Family parse_family(const std::string& name) {
  for (Family f : {Family::ex_trivial, Family::ex_asym, Family::ex_sym, Family::ex_seq,
                   Family::ex_collusion, Family::random_explicit, Family::random_symmetric}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown generator family '" + name + "'");
}

Rational family_alpha(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::ex_asym:
    case Family::ex_sym:
      return ratio(spec.p, spec.q);
    case Family::ex_seq:
    case Family::ex_collusion:
      return spec.alpha;
    default:
      return 1;
  }
}

Instance generate(const GeneratorSpec& spec) {
  check_spec(spec);
  switch (spec.family) {
    case Family::ex_trivial: return trivial();
    case Family::ex_asym: return asym(spec.p, spec.q);
    case Family::ex_sym: return sym(spec.p, spec.q, spec.n);
    case Family::ex_seq: return seq(spec.n);
    case Family::ex_collusion: return collusion(spec.n, spec.k, spec.alpha);
    case Family::random_explicit: return random_explicit(spec);
    case Family::random_symmetric: return random_symmetric(spec);
  }
  throw InputError("unknown generator family");
}

ReferenceProfiles reference_profiles(const GeneratorSpec& spec) {
  const Instance inst = generate(spec);
  switch (spec.family) {
    case Family::ex_trivial: {
      ReferenceProfiles r{Profile::empty(inst), Profile::empty(inst)};
      r.opt.sets[0].insert(0);
      r.opt.sets[1].insert(1);
      r.bad.sets[0].insert(1);
      return r;
    }
    case Family::ex_asym: return asym_profiles(inst, spec.p, spec.q);
    case Family::ex_sym: return sym_profiles(inst, spec.p, spec.q, spec.n);
    case Family::ex_seq: {
      ReferenceProfiles r{Profile::empty(inst), Profile::empty(inst)};
      const Namer name{inst.items()};
      for (unsigned i = 1; i <= spec.n; ++i) {
        for (unsigned k = 1; k <= spec.n; ++k) r.opt.sets[i - 1].insert(name(seq_job(k, i, spec.n)));
      }
      Budget budget;
      r.bad = greedy_sequential_outcome(inst, identity_order(inst.num_players()), spec.alpha,
                                        Selector::largest_deadline_greedy, budget);
      return r;
    }
    case Family::ex_collusion: return collusion_profiles(inst);
    default:
      throw InputError("reference profiles exist only for the constructed families");
  }
}

}  // namespace spg
