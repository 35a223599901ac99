#include "spg/io.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "spg/error.hpp"

namespace spg {

namespace {

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(std::string("missing field '") + key + "'");
  }
  return obj.at(key);
}

std::string text_of(const Json& value, const char* what) {
  if (!value.is_string()) throw InputError(std::string(what) + " must be a string");
  return value.get<std::string>();
}

Rational rational_of(const Json& value, const char* what) {
  if (value.is_number_integer()) return Rational(value.get<long>());
  return parse_rational(text_of(value, what));
}

std::uint32_t count_of(const Json& value, const char* what) {
  if (!value.is_number_unsigned() || value.get<std::uint64_t>() > 0xffffffffULL) {
    throw InputError(std::string(what) + " must be a nonnegative integer");
  }
  return value.get<std::uint32_t>();
}

ItemIndex index_for(const Instance& instance, const Json& id) {
  return static_cast<ItemIndex>(instance.index_of(text_of(id, "item id")));
}

/// Item lookup during parsing, before the Instance exists.
struct Catalog {
  std::vector<Item> items;

  ItemIndex at(const Json& id) const {
    const std::string key = text_of(id, "item id");
    auto it = std::lower_bound(items.begin(), items.end(), key,
                               [](const Item& item, const std::string& k) { return item.id < k; });
    if (it == items.end() || it->id != key) throw InputError("unknown item '" + key + "'");
    return static_cast<ItemIndex>(it - items.begin());
  }

  ItemSet set(const Json& ids) const {
    if (!ids.is_array()) throw InputError("item list must be an array");
    ItemSet s(items.size());
    for (const auto& id : ids) s.insert(at(id));
    return s;
  }
};

Json job_json(const std::vector<Item>& items, ItemIndex j, const Job& job) {
  Json out;
  out["id"] = items[j].id;
  out["release"] = to_string(job.release);
  out["processing"] = to_string(job.processing);
  out["deadline"] = to_string(job.deadline);
  return out;
}

Json jobs_json(const std::vector<Item>& items, const std::map<ItemIndex, Job>& jobs) {
  Json out = Json::array();
  for (const auto& [j, job] : jobs) out.push_back(job_json(items, j, job));
  return out;
}

std::map<ItemIndex, Job> jobs_from(const Catalog& catalog, const Json& doc) {
  const Json& list = field(doc, "jobs");
  if (!list.is_array()) throw InputError("jobs must be an array");
  std::map<ItemIndex, Job> jobs;
  for (const auto& entry : list) {
    const ItemIndex j = catalog.at(field(entry, "id"));
    Job job{rational_of(field(entry, "release"), "release"),
            rational_of(field(entry, "processing"), "processing"),
            rational_of(field(entry, "deadline"), "deadline")};
    if (!jobs.emplace(j, job).second) throw InputError("duplicate job '" + catalog.items[j].id + "'");
  }
  return jobs;
}

Json system_json(const Instance& instance, const FeasibilitySystem& system) {
  const auto& items = instance.items();
  Json out;
  out["kind"] = system.kind_name();
  std::visit(
      [&](const auto& d) {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ExplicitFamily>) {
          Json sets = Json::array();
          for (const auto& s : d.maximal_sets) sets.push_back(item_ids(instance, s));
          out["maximal_sets"] = sets;
        } else if constexpr (std::is_same_v<T, SingleMachine>) {
          out["jobs"] = jobs_json(items, d.jobs);
        } else if constexpr (std::is_same_v<T, IdenticalMachines>) {
          out["copies"] = d.copies;
          out["jobs"] = jobs_json(items, d.jobs);
        } else if constexpr (std::is_same_v<T, UnrelatedMachines>) {
          Json machines = Json::array();
          for (std::size_t m = 0; m < d.machines.size(); ++m) {
            Json times = Json::object();
            for (const auto& [j, p] : d.processing[m]) times[items[j].id] = to_string(p);
            machines.push_back(Json{{"name", d.machines[m]}, {"processing", times}});
          }
          out["machines"] = machines;
          Json jobs = Json::array();
          for (const auto& [j, w] : d.jobs) {
            jobs.push_back(Json{{"id", items[j].id},
                                {"release", to_string(w.release)},
                                {"deadline", to_string(w.deadline)}});
          }
          out["jobs"] = jobs;
        } else {
          out["copies"] = d.copies;
        }
      },
      system.descriptor());
  return out;
}

FeasibilitySystem system_from(const Catalog& catalog, const Json& doc,
                              const std::shared_ptr<const FeasibilitySystem>& base) {
  const std::size_t u = catalog.items.size();
  const std::string kind = text_of(field(doc, "kind"), "kind");
  if (kind == "explicit") {
    const Json& sets = field(doc, "maximal_sets");
    if (!sets.is_array()) throw InputError("maximal_sets must be an array");
    ExplicitFamily family;
    for (const auto& s : sets) family.maximal_sets.push_back(catalog.set(s));
    return FeasibilitySystem(u, family);
  }
  if (kind == "single_machine") return FeasibilitySystem(u, SingleMachine{jobs_from(catalog, doc)});
  if (kind == "identical_machines") {
    return FeasibilitySystem(u, IdenticalMachines{count_of(field(doc, "copies"), "copies"),
                                                  jobs_from(catalog, doc)});
  }
  if (kind == "unrelated_machines") {
    UnrelatedMachines d;
    const Json& machines = field(doc, "machines");
    if (!machines.is_array()) throw InputError("machines must be an array");
    for (const auto& m : machines) {
      d.machines.push_back(text_of(field(m, "name"), "machine name"));
      const Json& times = field(m, "processing");
      if (!times.is_object()) throw InputError("processing must be an object");
      std::map<ItemIndex, Rational> row;
      for (const auto& [id, p] : times.items()) row[catalog.at(Json(id))] = rational_of(p, "processing");
      d.processing.push_back(std::move(row));
    }
    const Json& jobs = field(doc, "jobs");
    if (!jobs.is_array()) throw InputError("jobs must be an array");
    for (const auto& entry : jobs) {
      const ItemIndex j = catalog.at(field(entry, "id"));
      TimeWindow w{rational_of(field(entry, "release"), "release"),
                   rational_of(field(entry, "deadline"), "deadline")};
      if (!d.jobs.emplace(j, w).second) throw InputError("duplicate job '" + catalog.items[j].id + "'");
    }
    return FeasibilitySystem(u, d);
  }
  if (kind == "shared_symmetric") {
    if (!base) throw InputError("shared_symmetric player without a symmetric_base section");
    return FeasibilitySystem(u, SharedSymmetric{base, count_of(field(doc, "copies"), "copies")});
  }
  throw InputError("unknown feasibility kind '" + kind + "'");
}

}  // namespace

std::string player_id(std::size_t index) { return std::to_string(index + 1); }

Json item_ids(const Instance& instance, const ItemSet& set) {
  Json out = Json::array();
  set.for_each([&](ItemIndex j) { out.push_back(instance.items()[j].id); });
  return out;
}

ItemSet items_from_json(const Instance& instance, const Json& ids) {
  if (!ids.is_array()) throw InputError("item list must be an array");
  ItemSet s = instance.empty_set();
  for (const auto& id : ids) s.insert(index_for(instance, id));
  return s;
}

Json instance_to_json(const Instance& instance, const Json& meta) {
  Json doc;
  Json items = Json::array();
  for (const auto& item : instance.items()) {
    items.push_back(Json{{"id", item.id}, {"weight", to_string(item.weight)}});
  }
  doc["items"] = items;
  doc["symmetric"] = instance.symmetric();

  const FeasibilitySystem* base = nullptr;
  for (const auto& p : instance.players()) {
    if (const auto* shared = std::get_if<SharedSymmetric>(&p.descriptor())) {
      if (base && !(*base == *shared->base)) {
        throw InputError("documents hold a single symmetric_base; players use different bases");
      }
      base = shared->base.get();
    }
  }
  if (base) doc["symmetric_base"] = system_json(instance, *base);

  Json players = Json::array();
  for (std::size_t i = 0; i < instance.num_players(); ++i) {
    Json p;
    p["id"] = player_id(i);
    const Json system = system_json(instance, instance.player(i));
    for (const auto& [k, v] : system.items()) p[k] = v;
    players.push_back(p);
  }
  doc["players"] = players;
  doc["meta"] = meta;
  return doc;
}

Instance instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw InputError("instance document must be an object");
  const Json& items = field(doc, "items");
  if (!items.is_array()) throw InputError("items must be an array");
  Catalog catalog;
  for (const auto& entry : items) {
    catalog.items.push_back({text_of(field(entry, "id"), "item id"),
                             rational_of(field(entry, "weight"), "weight")});
  }
  std::sort(catalog.items.begin(), catalog.items.end(),
            [](const Item& a, const Item& b) { return a.id < b.id; });
  for (std::size_t j = 1; j < catalog.items.size(); ++j) {
    if (catalog.items[j].id == catalog.items[j - 1].id) {
      throw InputError("duplicate item '" + catalog.items[j].id + "'");
    }
  }

  std::shared_ptr<const FeasibilitySystem> base;
  if (doc.contains("symmetric_base")) {
    base = std::make_shared<const FeasibilitySystem>(system_from(catalog, doc.at("symmetric_base"), nullptr));
  }
  const Json& players = field(doc, "players");
  if (!players.is_array()) throw InputError("players must be an array");
  std::vector<FeasibilitySystem> systems;
  for (const auto& p : players) {
    if (p.contains("id") && text_of(p.at("id"), "player id") != player_id(systems.size())) {
      throw InputError("player ids must run 1..n in order");
    }
    systems.push_back(system_from(catalog, p, base));
  }
  bool symmetric = false;
  if (doc.contains("symmetric")) {
    if (!doc.at("symmetric").is_boolean()) throw InputError("symmetric must be a boolean");
    symmetric = doc.at("symmetric").get<bool>();
  }
  return Instance(std::move(catalog.items), std::move(systems), symmetric);
}

Json profile_to_json(const Instance& instance, const Profile& profile) {
  Json doc = Json::object();
  for (std::size_t i = 0; i < profile.sets.size(); ++i) {
    doc[player_id(i)] = item_ids(instance, profile.sets[i]);
  }
  return doc;
}

Profile profile_from_json(const Instance& instance, const Json& doc) {
  if (!doc.is_object()) throw InputError("profile document must be an object");
  Profile profile = Profile::empty(instance);
  for (const auto& [key, ids] : doc.items()) {
    std::size_t i = 0;
    for (; i < instance.num_players(); ++i) {
      if (player_id(i) == key) break;
    }
    if (i == instance.num_players()) throw InputError("unknown player '" + key + "'");
    profile.sets[i] = items_from_json(instance, ids);
  }
  return profile;
}

Json report_to_json(const Instance& instance, const EquilibriumReport& report) {
  Json doc;
  doc["concept"] = to_string(report.notion);
  if (report.notion == Concept::collusion) doc["k"] = report.k;
  doc["alpha"] = to_string(report.alpha);
  doc["verdict"] = report.verdict;
  doc["welfare"] = to_string(report.welfare);
  if (report.witness) {
    const auto& w = *report.witness;
    Json players = Json::array();
    Json proposed = Json::object();
    for (std::size_t t = 0; t < w.players.size(); ++t) {
      players.push_back(player_id(w.players[t]));
      proposed[player_id(w.players[t])] = item_ids(instance, w.proposed[t]);
    }
    doc["witness"] = Json{{"players", players},
                          {"proposed", proposed},
                          {"old_value", to_string(w.old_value)},
                          {"new_value", to_string(w.new_value)}};
  } else {
    doc["witness"] = nullptr;
  }
  return doc;
}

Json poa_to_json(const Instance& instance, const PoAResult& r) {
  Json doc;
  doc["concept"] = r.notion;
  doc["alpha"] = to_string(r.alpha);
  if (r.notion == "collusion") doc["k"] = r.k;
  doc["opt_welfare"] = to_string(r.opt_welfare);
  doc["worst_welfare"] = to_string(r.worst_welfare);
  if (r.ratio) {
    doc["ratio"] = to_string(*r.ratio);
    doc["ratio_decimal"] = to_decimal(*r.ratio);
  } else {
    doc["ratio"] = "inf";
    doc["ratio_decimal"] = "inf";
  }
  if (r.bound) {
    doc["bound_formula"] = r.bound_formula;
    if (r.bound->lo == r.bound->hi) {
      doc["bound"] = to_string(r.bound->lo);
    } else {
      doc["bound"] = Json{{"lo", to_string(r.bound->lo)}, {"hi", to_string(r.bound->hi)}};
    }
    doc["bound_decimal"] = to_decimal(r.bound->hi);
  } else {
    doc["bound"] = nullptr;
  }
  doc["bound_satisfied"] = r.bound_satisfied;
  doc["equilibria_examined"] = r.equilibria_examined;
  if (r.orders_examined) doc["orders_examined"] = *r.orders_examined;
  if (r.worst_order) {
    Json order = Json::array();
    for (auto i : *r.worst_order) order.push_back(player_id(i));
    doc["worst_order"] = order;
  }
  doc["opt_profile"] = profile_to_json(instance, r.opt_profile);
  doc["worst_profile"] = profile_to_json(instance, r.worst_profile);
  return doc;
}

Json spec_to_json(const GeneratorSpec& spec) {
  Json doc;
  doc["family"] = to_string(spec.family);
  switch (spec.family) {
    case Family::ex_trivial:
      break;
    case Family::ex_asym:
      doc["p"] = spec.p;
      doc["q"] = spec.q;
      break;
    case Family::ex_sym:
      doc["p"] = spec.p;
      doc["q"] = spec.q;
      doc["n"] = spec.n;
      break;
    case Family::ex_seq:
      doc["n"] = spec.n;
      break;
    case Family::ex_collusion:
      doc["n"] = spec.n;
      doc["k"] = spec.k;
      doc["alpha"] = to_string(spec.alpha);
      break;
    case Family::random_explicit:
      doc["n"] = spec.n;
      doc["items"] = spec.items;
      doc["max_weight"] = spec.max_weight;
      doc["seed"] = spec.seed;
      break;
    case Family::random_symmetric:
      doc["n"] = spec.n;
      doc["copies"] = spec.copies;
      doc["items"] = spec.items;
      doc["max_weight"] = spec.max_weight;
      doc["seed"] = spec.seed;
      break;
  }
  return doc;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str());
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace spg
