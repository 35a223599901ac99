#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spg/bounds.hpp"
#include "spg/error.hpp"
#include "spg/factory.hpp"
#include "spg/io.hpp"
#include "spg/metrics.hpp"
#include "spg/report.hpp"

using namespace spg;

namespace {

enum Exit { kVerified = 0, kRefuted = 1, kInput = 2, kBudget = 3 };

struct Options {
  std::string instance_path;
  std::string profile_path;
  std::string notion = "nash";
  std::string alpha = "1";
  std::size_t k = 0;
  std::string order;
  std::uint64_t budget = 0;
  std::string out;
  std::string suite = "paper";
  std::string family;
  GeneratorSpec spec;
  std::string spec_alpha = "1";
};

Budget make_budget(const Options& o) { return o.budget ? Budget(o.budget) : Budget(); }

PlayerOrder parse_order(const Instance& inst, const std::string& text) {
  if (text.empty()) return identity_order(inst.num_players());
  PlayerOrder order;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    std::size_t i = 0;
    while (i < inst.num_players() && player_id(i) != part) ++i;
    if (i == inst.num_players()) throw InputError("unknown player '" + part + "' in --order");
    order.push_back(i);
  }
  PlayerOrder sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_order(inst.num_players())) {
    throw InputError("--order must list every player exactly once");
  }
  return order;
}

Rational parse_alpha(const std::string& text) {
  Rational a = parse_rational(text);
  if (a < 1) throw InputError("alpha must be at least 1");
  return a;
}

Json profiles_json(const Instance& inst, const std::vector<Profile>& profiles, Budget& budget) {
  Json list = Json::array();
  for (const auto& p : profiles) {
    list.push_back(Json{{"welfare", to_string(welfare(inst, p, budget))},
                        {"profile", profile_to_json(inst, p)}});
  }
  return list;
}

int cmd_generate(const Options& o) {
  GeneratorSpec spec = o.spec;
  spec.family = parse_family(o.family);
  spec.alpha = parse_alpha(o.spec_alpha);
  const Instance inst = generate(spec);
  const std::string doc = dump(instance_to_json(inst, Json{{"generator", spec_to_json(spec)}}));
  const bool reference = spec.family != Family::random_explicit && spec.family != Family::random_symmetric;
  if (o.out.empty()) {
    std::cout << doc;
    return kVerified;
  }
  write_text_file(o.out, doc);
  if (reference) {
    const ReferenceProfiles ref = reference_profiles(spec);
    std::filesystem::path base(o.out);
    const auto stem = (base.parent_path() / base.stem()).string();
    write_text_file(stem + ".opt.json", dump(profile_to_json(inst, ref.opt)));
    write_text_file(stem + ".bad.json", dump(profile_to_json(inst, ref.bad)));
  }
  return kVerified;
}

int cmd_verify(const Options& o) {
  const Instance inst = instance_from_json(read_json_file(o.instance_path));
  const Profile profile = profile_from_json(inst, read_json_file(o.profile_path));
  const Rational alpha = parse_alpha(o.alpha);
  Budget budget = make_budget(o);
  EquilibriumReport report;
  if (o.notion == "nash") {
    report = verify_nash(inst, profile, alpha, budget);
  } else if (o.notion == "spe") {
    if (o.order.empty()) throw InputError("--order is required for spe");
    report = verify_spe_outcome(inst, profile, parse_order(inst, o.order), alpha, budget);
  } else if (o.notion == "collusion") {
    if (o.k == 0) throw InputError("--k is required for collusion");
    report = verify_collusion(inst, profile, o.k, alpha, budget);
  } else {
    throw InputError("unknown concept '" + o.notion + "'");
  }
  std::cout << dump(report_to_json(inst, report));
  return report.verdict ? kVerified : kRefuted;
}

int cmd_opt(const Options& o) {
  const Instance inst = instance_from_json(read_json_file(o.instance_path));
  Budget budget = make_budget(o);
  const Optimum opt = compute_opt(inst, budget);
  std::cout << dump(Json{{"welfare", to_string(opt.welfare)}, {"profile", profile_to_json(inst, opt.profile)}});
  return kVerified;
}

int cmd_nash(const Options& o) {
  const Instance inst = instance_from_json(read_json_file(o.instance_path));
  const Rational alpha = parse_alpha(o.alpha);
  Budget budget = make_budget(o);
  const auto list = enumerate_nash(inst, alpha, budget);
  std::cout << dump(Json{{"concept", "nash"},
                         {"alpha", to_string(alpha)},
                         {"count", list.size()},
                         {"equilibria", profiles_json(inst, list, budget)}});
  return kVerified;
}

int cmd_spe(const Options& o) {
  const Instance inst = instance_from_json(read_json_file(o.instance_path));
  const Rational alpha = parse_alpha(o.alpha);
  const PlayerOrder order = parse_order(inst, o.order);
  Budget budget = make_budget(o);
  const auto list = enumerate_spe_outcomes(inst, order, alpha, budget);
  Json ids = Json::array();
  for (auto i : order) ids.push_back(player_id(i));
  std::cout << dump(Json{{"concept", "spe"},
                         {"alpha", to_string(alpha)},
                         {"order", ids},
                         {"count", list.size()},
                         {"outcomes", profiles_json(inst, list, budget)}});
  return kVerified;
}

int cmd_collusion(const Options& o) {
  const Instance inst = instance_from_json(read_json_file(o.instance_path));
  const Rational alpha = parse_alpha(o.alpha);
  if (o.k == 0 || o.k > inst.num_players()) throw InputError("--k must be in 1..n");
  Budget budget = make_budget(o);
  std::vector<Profile> list;
  for (const auto& p : enumerate_nash(inst, alpha, budget)) {
    if (verify_collusion(inst, p, o.k, alpha, budget).verdict) list.push_back(p);
  }
  std::cout << dump(Json{{"concept", "collusion"},
                         {"k", o.k},
                         {"alpha", to_string(alpha)},
                         {"count", list.size()},
                         {"equilibria", profiles_json(inst, list, budget)}});
  return kVerified;
}

int cmd_poa(const Options& o) {
  const Instance inst = instance_from_json(read_json_file(o.instance_path));
  const Rational alpha = parse_alpha(o.alpha);
  Budget budget = make_budget(o);
  PoAResult r;
  if (o.notion == "nash") {
    r = empirical_poa(inst, alpha, budget);
  } else if (o.notion == "spe") {
    r = empirical_sequential_poa(inst, alpha, budget);
  } else if (o.notion == "spe-greedy") {
    r = greedy_path_poa(inst, parse_order(inst, o.order), alpha, Selector::largest_deadline_greedy, budget);
  } else if (o.notion == "collusion") {
    if (o.k == 0 || o.k > inst.num_players()) throw InputError("--k must be in 1..n");
    r = empirical_collusion_poa(inst, o.k, alpha, budget);
  } else {
    throw InputError("unknown concept '" + o.notion + "'");
  }
  std::cout << dump(poa_to_json(inst, r));
  return r.bound_satisfied ? kVerified : kRefuted;
}

int cmd_report(const Options& o) {
  if (o.suite != "paper") throw InputError("unknown suite '" + o.suite + "'");
  const auto rows = run_paper_suite();
  const std::string tsv = rows_to_tsv(rows);
  if (o.out.empty()) {
    std::cout << tsv;
  } else {
    std::filesystem::create_directories(o.out);
    write_text_file((std::filesystem::path(o.out) / "paper.tsv").string(), tsv);
    write_text_file((std::filesystem::path(o.out) / "paper.json").string(), dump(rows_to_json(rows)));
  }
  bool ok = true;
  for (const auto& r : rows) {
    if (!r.satisfied) {
      ok = false;
      std::cerr << "row not satisfied: " << r.family << " " << r.params << " " << r.notion << "\n";
    }
  }
  return ok ? kVerified : kRefuted;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Set packing games: equilibria, optima and price of anarchy"};
  app.require_subcommand(1);
  Options o;

  auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", o.instance_path, "instance JSON")->required();
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", o.budget, "node budget (default SPG_BUDGET or 1e7)");
  };

  auto* gen = app.add_subcommand("generate", "write a generated instance");
  gen->add_option("family", o.family, "generator family")->required();
  gen->add_option("--p", o.spec.p);
  gen->add_option("--q", o.spec.q);
  gen->add_option("--n", o.spec.n);
  gen->add_option("--k", o.spec.k);
  gen->add_option("--alpha", o.spec_alpha);
  gen->add_option("--items", o.spec.items);
  gen->add_option("--max-weight", o.spec.max_weight);
  gen->add_option("--copies", o.spec.copies);
  gen->add_option("--seed", o.spec.seed);
  gen->add_option("--out", o.out, "instance path; reference profiles go next to it");

  auto* verify = app.add_subcommand("verify", "check an equilibrium condition");
  add_instance(verify);
  verify->add_option("--profile", o.profile_path)->required();
  verify->add_option("--concept", o.notion, "nash, spe or collusion");
  verify->add_option("--alpha", o.alpha);
  verify->add_option("--k", o.k);
  verify->add_option("--order", o.order, "comma separated player ids");
  add_budget(verify);

  auto* opt = app.add_subcommand("opt", "maximum welfare profile");
  add_instance(opt);
  add_budget(opt);

  auto* nash = app.add_subcommand("nash", "enumerate approximate Nash equilibria");
  add_instance(nash);
  nash->add_option("--alpha", o.alpha);
  add_budget(nash);

  auto* spe = app.add_subcommand("spe", "enumerate subgame perfect outcomes");
  add_instance(spe);
  spe->add_option("--alpha", o.alpha);
  spe->add_option("--order", o.order);
  add_budget(spe);

  auto* coll = app.add_subcommand("collusion", "enumerate k-collusion equilibria");
  add_instance(coll);
  coll->add_option("--alpha", o.alpha);
  coll->add_option("--k", o.k)->required();
  add_budget(coll);

  auto* poa = app.add_subcommand("poa", "empirical price of anarchy");
  add_instance(poa);
  poa->add_option("--concept", o.notion, "nash, spe, spe-greedy or collusion");
  poa->add_option("--alpha", o.alpha);
  poa->add_option("--k", o.k);
  poa->add_option("--order", o.order);
  add_budget(poa);

  auto* report = app.add_subcommand("report", "bound reproduction tables");
  report->add_option("--suite", o.suite);
  report->add_option("--out", o.out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInput;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*verify) return cmd_verify(o);
    if (*opt) return cmd_opt(o);
    if (*nash) return cmd_nash(o);
    if (*spe) return cmd_spe(o);
    if (*coll) return cmd_collusion(o);
    if (*poa) return cmd_poa(o);
    if (*report) return cmd_report(o);
  } catch (const BudgetExceeded& e) {
    std::cout << dump(Json{{"error", "budget exceeded"}, {"limit", e.limit()}, {"where", e.where()}});
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
  return kInput;
}
