// Command-line workbench for 2-Selmer bilinear-space models, unit-signature
// heuristics and the Pell-curve families of cyclic cubic fields.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include "oddab/acceptance.hpp"
#include "oddab/datastore.hpp"
#include "oddab/heuristics.hpp"
#include "oddab/montecarlo.hpp"
#include "oddab/pell.hpp"
#include "oddab/sampler.hpp"
#include "oddab/selmer.hpp"

namespace {

using namespace oddab;

unsigned env_jobs(unsigned flag_value) {
  if (flag_value != 0) return flag_value;
  if (const char* e = std::getenv("ODDAB_JOBS")) {
    int v = std::atoi(e);
    if (v > 0) return unsigned(v);
  }
  return 1;
}

std::vector<std::uint64_t> parse_group(const std::string& text) {
  std::vector<std::uint64_t> factors;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) factors.push_back(std::stoull(item));
  return factors;
}

pell::Rat parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return pell::Rat(mpz_class(text));
  pell::Rat r(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
  r.canonicalize();
  return r;
}

int cmd_characters(const std::string& group_text) {
  OddAbelianGroup g(parse_group(group_text));
  std::cout << "group " << g.to_string() << " (order " << g.order() << ")\n";
  std::cout << "id\torder\tdegree\tself-dual\tdual\n";
  for (const CharacterClass& chi : character_classes(g)) {
    std::cout << chi.id() << '\t' << chi.order() << '\t' << chi.degree() << '\t'
              << (chi.is_self_dual() ? "yes" : "no") << '\t' << chi.dual().id() << '\n';
  }
  std::cout << "all self-dual: " << (all_self_dual(g) ? "yes" : "no") << '\n';
  return 0;
}

int cmd_enumerate(const std::string& group_text) {
  OddAbelianGroup g(parse_group(group_text));
  BilinearGSpace v = build_V(g);
  std::cout << "V = GF(2)[" << g.to_string() << "]^2, dim " << v.dimension() << "\n";
  std::cout << "component\tq\tsubspaces\tcases\n";
  for (const CharacterClass& chi : character_classes(g)) {
    if (!chi.is_self_dual() && chi.dual() < chi) continue;
    ComponentSpace comp = restrict_component(v, chi);
    auto subs = enumerate_invariant_max_isotropic(comp);
    std::map<std::string, unsigned> cases;
    for (const InvariantSubspace& s : subs) ++cases[to_string(classify_case(comp, s))];
    std::cout << chi.id() << (chi.is_self_dual() ? "" : ",+dual") << '\t'
              << (1ull << chi.degree()) << '\t' << subs.size() << '\t';
    bool first = true;
    for (auto& [name, count] : cases) {
      std::cout << (first ? "" : " ") << name << ":" << count;
      first = false;
    }
    std::cout << '\n';
  }
  return 0;
}

int cmd_predict(unsigned long ell, const std::string& format, unsigned truncation) {
  auto tables = heuristics::prediction_tables(ell, truncation);
  if (format == "csv") {
    std::cout << "family,property,value,is_theorem\n";
    for (const auto& t : tables)
      for (const auto& row : t.rows)
        std::cout << t.family << ',' << row.property << ',' << row.value << ','
                  << (row.is_theorem ? 1 : 0) << '\n';
    return 0;
  }
  for (const auto& t : tables) {
    std::cout << "# " << t.family << '\n';
    for (const auto& row : t.rows)
      std::cout << "  " << row.property << " = " << (row.is_theorem ? "[forced] " : "")
                << row.value << '\n';
  }
  return 0;
}

int cmd_simulate(const std::string& model, unsigned long q, unsigned rho, unsigned long ell,
                 std::uint64_t samples, std::uint64_t seed, bool exhaustive, unsigned jobs) {
  montecarlo::SimulationReport rep;
  if (model == "h1") rep = montecarlo::simulate_H1(q, samples, seed, exhaustive, jobs);
  else if (model == "h2prime")
    rep = montecarlo::simulate_H2prime(q, rho, samples, seed, exhaustive, jobs);
  else if (model == "sgnrk")
    rep = montecarlo::simulate_sgnrk_distribution(ell, samples, seed, jobs);
  else {
    std::cerr << "unknown model: " << model << " (h1 | h2prime | sgnrk)\n";
    return 2;
  }
  std::cout << rep.to_string() << '\n';
  if (!rep.histogram.empty()) {
    for (std::size_t i = 0; i < rep.histogram.size(); ++i) {
      std::cout << "  sgnrk=" << rep.histogram[i].first << " empirical=" << rep.histogram[i].second
                << " target=" << rep.targets[i].second.get_num() << "/"
                << rep.targets[i].second.get_den() << '\n';
    }
  }
  return 0;
}

int cmd_pell_family(const std::string& m_text, const std::string& seed_a, std::size_t count,
                    const std::string& emit, bool all_points_mode, unsigned jobs) {
  pell::Rat m = parse_rational(m_text);
  pell::Int a0(seed_a);
  auto status = pell::check_prop_conditions(m, a0);
  if (status != pell::ConditionStatus::Pass) {
    std::cerr << "family conditions not met: " << to_string(status) << '\n';
    return 2;
  }
  auto points = all_points_mode ? pell::all_points(m, a0, count)
                                : pell::orbit_stream(m, a0, count);
  // certificates for distinct points are independent work items
  std::vector<pell::CubicFieldWitness> certs(points.size());
  if (jobs <= 1 || points.size() < 2) {
    for (std::size_t i = 0; i < points.size(); ++i)
      certs[i] = pell::certify_sgnrk1(points[i].a, points[i].b);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(jobs, points.size()); ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= points.size()) return;
          certs[i] = pell::certify_sgnrk1(points[i].a, points[i].b);
        }
      });
    for (auto& th : pool) th.join();
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const pell::FamilyPoint& pt = points[i];
    const pell::CubicFieldWitness& w = certs[i];
    if (emit == "jsonl") {
      nlohmann::json j;
      j["a"] = pt.a.get_str();
      j["b"] = pt.b.get_str();
      j["c"] = pt.c.get_str();
      j["z"] = pt.z.get_str();
      j["flags"] = {{"irreducible", w.irreducible},
                    {"disc_square", w.disc_square},
                    {"totally_positive", w.totally_positive},
                    {"eta_nonsquare", w.eta_nonsquare}};
      if (w.sgnrk) j["sgnrk"] = *w.sgnrk;
      else j["sgnrk"] = nullptr;
      std::cout << j.dump() << '\n';
    } else {
      std::cout << "a=" << pt.a << " b=" << pt.b << " z=" << pt.z << " c=" << pt.c
                << (w.certified() ? " sgnrk=1" : " uncertified") << '\n';
    }
  }
  return 0;
}

int cmd_sample_fields(unsigned long ell, std::uint64_t bound, std::size_t count,
                      std::uint64_t seed, const std::string& emit) {
  montecarlo::Xoshiro rng(seed);
  std::ostream& os = std::cout;
  if (emit == "csv") os << "conductor,character_index,polynomial\n";
  for (std::size_t i = 0; i < count; ++i) {
    auto fld = sampler::random_field(bound, ell, rng);
    std::string poly;
    if (ell == 3) {
      auto cubic = sampler::period_polynomial(fld.conductor, fld.character_index);
      std::ostringstream ps;
      ps << cubic.c0 << ' ' << cubic.c1 << ' ' << cubic.c2 << " 1";
      poly = ps.str();
    }
    if (emit == "csv") os << fld.conductor << ',' << fld.character_index << ',' << poly << '\n';
    else os << "f=" << fld.conductor << " chi=" << fld.character_index
            << (poly.empty() ? "" : " poly=" + poly) << '\n';
  }
  return 0;
}

int cmd_stats(const std::string& input, const std::string& family, const std::string& report) {
  auto format = input.size() > 6 && input.substr(input.size() - 6) == ".jsonl"
                    ? datastore::Format::Jsonl
                    : datastore::Format::Csv;
  auto records = datastore::load(input, format);
  auto violations = datastore::validate(records);
  for (const auto& v : violations)
    std::cerr << "violation: " << v.label << ": " << v.violation.rule
              << (v.violation.character.empty() ? "" : " at chi=" + v.violation.character)
              << " (" << v.violation.detail << ")\n";
  auto rep = datastore::aggregate(records, datastore::FamilyFilter::parse(family));
  std::cout << (report == "csv" ? rep.to_csv() : rep.to_markdown());
  return violations.empty() ? 0 : 1;
}

int cmd_verify(unsigned jobs) {
  auto results = acceptance::run_all(jobs);
  std::cout << acceptance::format_results(results);
  bool ok = acceptance::all_passed(results);
  std::cout << (ok ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED") << '\n';
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"workbench for unit signatures and narrow class groups of odd abelian fields"};
  app.require_subcommand(1);

  std::string group_text = "7";
  auto* characters = app.add_subcommand("characters", "character classes of an odd abelian group");
  characters->add_option("--group", group_text, "invariant factors, e.g. 3 or 3,9")->required();

  std::string egroup = "7";
  auto* enumerate = app.add_subcommand("enumerate-isotropic",
                                       "invariant maximal isotropic subspaces per component");
  enumerate->add_option("--group", egroup, "invariant factors")->required();

  unsigned long pell_ell = 3;
  std::string predict_format = "text";
  unsigned truncation = 64;
  auto* predict = app.add_subcommand("predict", "closed-form prediction tables");
  predict->add_option("--ell", pell_ell, "odd prime degree")->required();
  predict->add_option("--format", predict_format, "text | csv");
  predict->add_option("--truncation", truncation, "series truncation index");

  std::string model = "h1";
  unsigned long sim_q = 8;
  unsigned sim_rho = 1;
  unsigned long sim_ell = 7;
  std::uint64_t samples = 1000000, seed = 0;
  bool exhaustive = false;
  unsigned jobs = 0;
  auto* simulate = app.add_subcommand("simulate", "random-model simulators");
  simulate->add_option("--model", model, "h1 | h2prime | sgnrk")->required();
  simulate->add_option("--q", sim_q, "field size 2^f");
  simulate->add_option("--rho", sim_rho, "conditioned chi-rank");
  simulate->add_option("--ell", sim_ell, "degree for the sgnrk model");
  simulate->add_option("--samples", samples, "trial count");
  auto* seed_opt = simulate->add_option("--seed", seed, "PRNG seed (required unless exhaustive)");
  simulate->add_flag("--exhaustive", exhaustive, "exact enumeration instead of sampling");
  simulate->add_option("--jobs", jobs, "worker threads (or ODDAB_JOBS)");

  std::string m_text, seed_a = "0", emit = "text";
  std::size_t count = 4;
  bool all_mode = false;
  auto* family = app.add_subcommand("pell-family", "stream certified cubic-field points");
  family->add_option("--m", m_text, "parabola parameter P/Q")->required();
  family->add_option("--seed-a", seed_a, "a-coordinate of a known curve point")->required();
  family->add_option("--count", count, "points to emit");
  family->add_option("--emit", emit, "text | jsonl");
  family->add_flag("--all-points", all_mode,
                   "complete integral-point enumeration instead of the seed orbit");
  unsigned family_jobs = 0;
  family->add_option("--jobs", family_jobs, "certification worker threads (or ODDAB_JOBS)");

  unsigned long sf_ell = 3;
  std::uint64_t sf_bound = 10000, sf_seed = 0;
  std::size_t sf_count = 10;
  std::string sf_emit = "csv";
  auto* sample = app.add_subcommand("sample-fields", "uniform cyclic fields by conductor");
  sample->add_option("--ell", sf_ell, "odd prime degree")->required();
  sample->add_option("--bound", sf_bound, "conductor bound X")->required();
  sample->add_option("--count", sf_count, "number of fields");
  auto* sf_seed_opt = sample->add_option("--seed", sf_seed, "PRNG seed")->required();
  sample->add_option("--emit", sf_emit, "csv | text");

  std::string stats_input, stats_family = "", stats_report = "md";
  auto* stats = app.add_subcommand("stats", "aggregate an ingested dataset");
  stats->add_option("--input", stats_input, "csv or jsonl file")->required();
  stats->add_option("--family", stats_family, "filter, e.g. ell=7,rho=0");
  stats->add_option("--report", stats_report, "md | csv");

  unsigned verify_jobs = 0;
  auto* verify = app.add_subcommand("verify-paper", "run the full reference-value suite");
  verify->add_option("--jobs", verify_jobs, "worker threads (or ODDAB_JOBS)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*characters) return cmd_characters(group_text);
    if (*enumerate) return cmd_enumerate(egroup);
    if (*predict) return cmd_predict(pell_ell, predict_format, truncation);
    if (*simulate) {
      if (!exhaustive && samples > 0 && seed_opt->count() == 0) {
        std::cerr << "--seed is required for stochastic runs (no wall-clock seeding)\n";
        return 2;
      }
      return cmd_simulate(model, sim_q, sim_rho, sim_ell, samples, seed, exhaustive,
                          env_jobs(jobs));
    }
    if (*family) return cmd_pell_family(m_text, seed_a, count, emit, all_mode, env_jobs(family_jobs));
    if (*sample) {
      (void)sf_seed_opt;
      return cmd_sample_fields(sf_ell, sf_bound, sf_count, sf_seed, sf_emit);
    }
    if (*stats) return cmd_stats(stats_input, stats_family, stats_report);
    if (*verify) return cmd_verify(env_jobs(verify_jobs));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
