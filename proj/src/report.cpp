#include "spg/report.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "spg/bounds.hpp"
#include "spg/equilibria.hpp"
#include "spg/error.hpp"
#include "spg/metrics.hpp"

namespace spg {

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

ReportRow from_result(std::string family, std::string params, const PoAResult& r) {
  ReportRow row;
  row.family = std::move(family);
  row.params = std::move(params);
  row.notion = r.notion;
  row.alpha = r.alpha;
  row.k = r.k;
  row.measured = r.ratio;
  row.bound_formula = r.bound_formula;
  row.bound = r.bound;
  row.satisfied = r.bound_satisfied;
  return row;
}

void expect(ReportRow& row, const Rational& value) {
  row.expected = value;
  row.satisfied = row.satisfied && row.measured && *row.measured == value;
}

std::string params_of(const GeneratorSpec& spec) {
  std::ostringstream out;
  bool first = true;
  const Json doc = spec_to_json(spec);
  for (const auto& [key, value] : doc.items()) {
    if (key == "family") continue;
    out << (first ? "" : ",") << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
    first = false;
  }
  return out.str();
}

/// Ratio of the optimum to a stated equilibrium profile.
ReportRow reference_row(const GeneratorSpec& spec, Concept notion, std::size_t k,
                        const Rational& alpha, const std::string& formula, const Rational& bound) {
  Budget budget;
  const Instance inst = generate(spec);
  const ReferenceProfiles ref = reference_profiles(spec);
  const Optimum opt = compute_opt(inst, budget);
  const EquilibriumReport check = notion == Concept::collusion
                                      ? verify_collusion(inst, ref.bad, k, alpha, budget)
                                      : verify_nash(inst, ref.bad, alpha, budget);
  const Rational bad = welfare(inst, ref.bad, budget);
  ReportRow row;
  row.family = to_string(spec.family);
  row.params = params_of(spec);
  row.notion = to_string(notion);
  row.alpha = alpha;
  row.k = k;
  if (bad != 0) row.measured = Rational(opt.welfare / bad);
  row.bound_formula = formula;
  row.bound = Interval{bound, bound};
  row.satisfied = check.verdict && row.measured && *row.measured <= bound &&
                  opt.welfare == welfare(inst, ref.opt, budget);
  row.note = check.verdict ? "reference equilibrium verified" : "reference equilibrium refuted";
  return row;
}

void add_trivial(std::vector<ReportRow>& rows) {
  GeneratorSpec spec;
  spec.family = Family::ex_trivial;
  const Instance inst = generate(spec);
  {
    Budget budget;
    rows.push_back(from_result("ex_trivial", "", empirical_poa(inst, 1, budget)));
    expect(rows.back(), 2);
  }
  {
    Budget budget;
    rows.push_back(from_result("ex_trivial", "", empirical_sequential_poa(inst, 1, budget)));
    expect(rows.back(), 2);
    rows.back().note = "all player orders";
  }
  {
    Budget budget;
    rows.push_back(from_result("ex_trivial", "", empirical_collusion_poa(inst, 2, 1, budget)));
    expect(rows.back(), 1);
  }
}

void add_asym(std::vector<ReportRow>& rows) {
  for (auto [p, qq] : std::vector<std::pair<unsigned, unsigned>>{{1, 1}, {3, 2}, {2, 1}, {3, 1}}) {
    GeneratorSpec spec;
    spec.family = Family::ex_asym;
    spec.p = p;
    spec.q = qq;
    Budget budget;
    const Rational alpha = family_alpha(spec);
    rows.push_back(from_result("ex_asym", params_of(spec), empirical_poa(generate(spec), alpha, budget)));
    expect(rows.back(), alpha + 1);
  }
}

void add_sym(std::vector<ReportRow>& rows) {
  for (auto [p, qq, n] : std::vector<std::tuple<unsigned, unsigned, unsigned>>{{3, 2, 3}, {2, 1, 4}}) {
    GeneratorSpec spec;
    spec.family = Family::ex_sym;
    spec.p = p;
    spec.q = qq;
    spec.n = n;
    const Rational alpha = family_alpha(spec);
    rows.push_back(reference_row(spec, Concept::nash, 1, alpha, "alpha+1", bound_nash(alpha)));
    expect(rows.back(), q(p + qq, qq) - q(1, n));
    Budget budget;
    rows.push_back(from_result("ex_sym", params_of(spec), empirical_poa(generate(spec), alpha, budget)));
    expect(rows.back(), q(p + qq, qq) - q(1, n));
    rows.back().note = "worst over all equilibria";
  }
}

void add_seq(std::vector<ReportRow>& rows) {
  std::optional<Rational> previous;
  for (unsigned n : {3U, 5U, 10U, 20U, 40U}) {
    GeneratorSpec spec;
    spec.family = Family::ex_seq;
    spec.n = n;
    Budget budget;
    const Instance inst = generate(spec);
    const auto opt = saturating_optimum(inst, reference_profiles(spec).opt, budget);
    if (!opt) throw std::logic_error("ex_seq optimum does not pack every job");
    rows.push_back(from_result("ex_seq", params_of(spec),
                               greedy_path_poa(inst, identity_order(n), 1,
                                               Selector::largest_deadline_greedy, *opt, budget)));
    ReportRow& row = rows.back();
    if (n == 3) expect(row, q(9, 7));
    if (n == 5) expect(row, q(25, 18));
    if (previous) {
      row.satisfied = row.satisfied && row.measured && *previous <= *row.measured;
      row.note = "nondecreasing in n";
    }
    previous = row.measured;
  }
}

void add_collusion(std::vector<ReportRow>& rows) {
  struct Case {
    unsigned n, k;
    Rational alpha;
  };
  for (const Case& c : std::vector<Case>{{3, 2, 1}, {4, 2, 1}, {4, 3, 1}, {3, 2, q(3, 2)}}) {
    GeneratorSpec spec;
    spec.family = Family::ex_collusion;
    spec.n = c.n;
    spec.k = c.k;
    spec.alpha = c.alpha;
    const Rational bound = bound_collusion(c.alpha, c.n, c.k);
    rows.push_back(reference_row(spec, Concept::collusion, c.k, c.alpha, "alpha+(n-k)/(n-1)", bound));
    expect(rows.back(), bound);
  }
  GeneratorSpec spec;
  spec.family = Family::ex_collusion;
  spec.n = 3;
  spec.k = 2;
  Budget budget;
  rows.push_back(from_result("ex_collusion", params_of(spec),
                             empirical_collusion_poa(generate(spec), 2, 1, budget)));
  expect(rows.back(), q(3, 2));
  rows.back().note = "worst over all collusion equilibria";
}

void add_bound_rows(std::vector<ReportRow>& rows) {
  for (const Rational& alpha : {q(1), q(3, 2), q(2)}) {
    ReportRow row;
    row.family = "series";
    row.params = "x=1..100";
    row.notion = "b_x";
    row.alpha = alpha;
    row.bound_formula = "e^(1/alpha)/(e^(1/alpha)-1)";
    row.bound = bound_sequential_symmetric(alpha);
    bool ok = true;
    Rational prev = bound_series_b(alpha, 1);
    for (std::size_t x = 2; x <= 100 && ok; ++x) {
      Rational b = bound_series_b(alpha, x);
      ok = prev < b;
      prev = b;
    }
    row.measured = prev;
    row.satisfied = ok && at_most_sequential_bound(prev, alpha);
    row.note = "increasing and below the limit";
    rows.push_back(row);
  }
  for (const Rational& alpha : {q(1), q(3, 2), q(2), q(3)}) {
    ReportRow row;
    row.family = "sandwich";
    row.notion = "bound";
    row.alpha = alpha;
    row.bound_formula = "e^(1/alpha)/(e^(1/alpha)-1)";
    const Interval b = bound_sequential_symmetric(alpha);
    row.bound = b;
    // alpha + 1/(e-1) uses the enclosure at alpha = 1.
    const Interval e1 = bound_sequential_symmetric(1);
    const Rational upper_hi = alpha + e1.hi - 1;
    const Rational upper_lo = alpha + e1.lo - 1;
    const bool lower = alpha + q(1, 2) <= b.lo;
    const bool upper = alpha == 1 ? (b.hi == upper_hi && b.lo == upper_lo) : b.hi < upper_lo;
    row.satisfied = lower && upper;
    row.note = "alpha+1/2 <= bound <= alpha+1/(e-1)";
    rows.push_back(row);
  }
  {
    ReportRow row;
    row.family = "series";
    row.notion = "share inequalities";
    row.params = "gamma=x*alpha, x<=30";
    bool ok = true;
    for (const Rational& alpha : {q(1), q(3, 2), q(2), q(7, 3)}) {
      for (std::size_t x = 1; x <= 30; ++x) {
        const Rational gamma = Rational(static_cast<long>(x)) * alpha;
        for (std::size_t x1 = 1; x1 <= x; ++x1) {
          ok = ok && share_base_inequality(gamma, x1);
          for (std::size_t prev = 1; prev + x1 <= x; ++prev) ok = ok && share_step_inequality(gamma, x1, prev);
        }
      }
    }
    row.satisfied = ok;
    rows.push_back(row);
  }
}

void add_corpus_rows(std::vector<ReportRow>& rows) {
  const auto corpus = random_corpus(500, 3, 6, 2024);
  for (const Rational& alpha : {q(1), q(3, 2)}) {
    std::size_t spe_checked = 0, spe_bad = 0, nash_bad = 0, coll_bad = 0, pos_bad = 0;
    for (const auto& spec : corpus) {
      Budget budget;
      const Instance inst = generate(spec);
      PlayerOrder order = identity_order(inst.num_players());
      do {
        for (const auto& outcome : enumerate_spe_outcomes(inst, order, alpha, budget)) {
          ++spe_checked;
          if (!verify_nash(inst, outcome, alpha, budget).verdict) ++spe_bad;
        }
      } while (std::next_permutation(order.begin(), order.end()));
      if (!empirical_poa(inst, alpha, budget).bound_satisfied) ++nash_bad;
      for (std::size_t k = 1; k <= inst.num_players(); ++k) {
        const PoAResult r = empirical_collusion_poa(inst, k, alpha, budget);
        if (!r.bound_satisfied) ++coll_bad;
      }
      if (alpha == 1 && !verify_nash(inst, compute_opt(inst, budget).profile, 1, budget).verdict) ++pos_bad;
    }
    auto push = [&](std::string notion, std::size_t bad, std::string note) {
      ReportRow row;
      row.family = "random_explicit";
      row.params = "500 instances, n<=3, items<=6";
      row.notion = std::move(notion);
      row.alpha = alpha;
      row.measured = Rational(static_cast<long>(bad));
      row.expected = Rational(0);
      row.satisfied = bad == 0;
      row.note = std::move(note);
      rows.push_back(row);
    };
    push("spe-is-nash", spe_bad, std::to_string(spe_checked) + " outcomes, all orders; violations");
    push("nash", nash_bad, "instances above alpha+1");
    push("collusion", coll_bad, "instance-k pairs above alpha+(n-k)/(n-1)");
    if (alpha == 1) push("stability", pos_bad, "instances whose optimum is not a Nash equilibrium");
  }
}

std::string cell(const std::optional<Rational>& r) { return r ? to_string(*r) : ""; }

std::string bound_cell(const std::optional<Interval>& b) {
  if (!b) return "";
  if (b->lo == b->hi) return to_string(b->lo);
  return "[" + to_decimal(b->lo, 15) + "," + to_decimal(b->hi, 15) + "]";
}

}  // namespace

std::vector<GeneratorSpec> random_corpus(std::size_t count, unsigned max_players,
                                         unsigned max_items, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GeneratorSpec> out;
  for (std::size_t t = 0; t < count; ++t) {
    GeneratorSpec spec;
    spec.family = Family::random_explicit;
    spec.n = 1 + static_cast<unsigned>(rng() % max_players);
    spec.items = 1 + static_cast<unsigned>(rng() % max_items);
    spec.max_weight = 8;
    spec.seed = rng();
    out.push_back(spec);
  }
  return out;
}

std::vector<ReportRow> run_paper_suite() {
  using Section = void (*)(std::vector<ReportRow>&);
  std::vector<ReportRow> rows;
  for (Section section : {add_trivial, add_asym, add_sym, add_seq, add_collusion, add_bound_rows,
                          add_corpus_rows}) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t first = rows.size();
    section(rows);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (std::size_t i = first; i < rows.size(); ++i) rows[i].seconds = elapsed / double(rows.size() - first);
  }
  return rows;
}

std::string rows_to_tsv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "family\tparams\tconcept\talpha\tk\tmeasured\tmeasured_decimal\tbound_formula\tbound\t"
         "expected\tsatisfied\tseconds\tnote\n";
  for (const auto& r : rows) {
    out << r.family << '\t' << r.params << '\t' << r.notion << '\t' << to_string(r.alpha) << '\t'
        << r.k << '\t' << cell(r.measured) << '\t' << (r.measured ? to_decimal(*r.measured) : "")
        << '\t' << r.bound_formula << '\t' << bound_cell(r.bound) << '\t' << cell(r.expected) << '\t'
        << (r.satisfied ? "yes" : "no") << '\t' << r.seconds << '\t' << r.note << '\n';
  }
  return out.str();
}

Json rows_to_json(const std::vector<ReportRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["family"] = r.family;
    row["params"] = r.params;
    row["concept"] = r.notion;
    row["alpha"] = to_string(r.alpha);
    row["k"] = r.k;
    row["measured"] = r.measured ? Json(to_string(*r.measured)) : Json(nullptr);
    row["bound_formula"] = r.bound_formula;
    if (r.bound) {
      row["bound"] = Json{{"lo", to_string(r.bound->lo)}, {"hi", to_string(r.bound->hi)}};
    } else {
      row["bound"] = nullptr;
    }
    row["expected"] = r.expected ? Json(to_string(*r.expected)) : Json(nullptr);
    row["satisfied"] = r.satisfied;
    row["seconds"] = r.seconds;
    row["note"] = r.note;
    out.push_back(row);
  }
  return out;
}

}  // namespace spg
