#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "eiscomb/arch_gamma.hpp"
#include "eiscomb/critical_engine.hpp"
#include "eiscomb/io.hpp"
#include "eiscomb/models.hpp"
#include "eiscomb/signature_engine.hpp"
#include "eiscomb/sweep.hpp"

using namespace eiscomb;
using io::json;

namespace {

enum Exit { kOk = 0, kValidation = 2, kCounterexample = 3, kBudget = 4 };

struct Config {
  std::string model_path;
  std::string mu_path;
  std::string mup_path;
  std::string rep_path;
  std::string m = "";
  double tolerance = 1e-6;
  double budget = kDefaultBudget;
  int jobs = 1;
  std::string format = "json";
  std::uint64_t seed = 1;
  bool timing = false;
  int gl2_m = 0;
  // sweep box
  int lo = -5;
  int hi = 5;
  int n_max = 2;
  int sampled_rank = 0;
  std::size_t samples = 0;
  bool mutant = false;
  bool base_change = false;
  int bc_n_max = 2;
  int bc_lo = -3;
  int bc_hi = 3;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const json& report, const Config& cfg) {
  if (cfg.format == "table")
    flatten(report, "", std::cout);
  else
    std::cout << report.dump(2) << "\n";
}

struct Inputs {
  io::ModelFile mf;
  std::optional<Weight> mu;
  std::optional<Weight> mup;
  std::string digest_source;
};

Inputs load(const Config& cfg, bool need_weights) {
  Inputs in;
  if (cfg.model_path.empty()) throw ValidationError("--model is required");
  const std::string text = io::read_file(cfg.model_path);
  in.mf = io::parse_model(text, cfg.model_path);
  in.digest_source = text;
  const auto v = validate(in.mf.model);
  if (!v.ok()) throw ValidationError(cfg.model_path + ": " + v.first_failure()->name + ": " + v.first_failure()->detail);
  if (need_weights) {
    if (cfg.mu_path.empty() || cfg.mup_path.empty()) throw ValidationError("--mu and --mu-prime are required");
    const std::string a = io::read_file(cfg.mu_path), b = io::read_file(cfg.mup_path);
    in.mu = io::parse_weight(a, in.mf.model, cfg.mu_path);
    in.mup = io::parse_weight(b, in.mf.model, cfg.mup_path);
    in.digest_source += '\0' + a + '\0' + b;
  }
  return in;
}

json header(const std::string& cmd, const Inputs& in, const Config& cfg) {
  json j;
  j["schema"] = "eiscomb/1";
  j["command"] = cmd;
  json echo;
  echo["model"] = cfg.model_path;
  if (!cfg.mu_path.empty()) echo["mu"] = cfg.mu_path;
  if (!cfg.mup_path.empty()) echo["mu_prime"] = cfg.mup_path;
  if (!cfg.m.empty()) echo["m"] = cfg.m;
  j["config"] = echo;
  j["inputs_digest"] = io::fnv1a_hex(in.digest_source);
  return j;
}

WidthData checked_widths(const Inputs& in) {
  try {
    return widths(*in.mu, *in.mup, in.mf.model);
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
}

int cmd_validate(const Config& cfg, json& out) {
  Inputs in;
  in.mf = io::parse_model(io::read_file(cfg.model_path), cfg.model_path);
  in.digest_source = io::read_file(cfg.model_path);
  out = header("validate", in, cfg);
  const auto v = validate(in.mf.model);
  json checks = json::array();
  for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  json r;
  r["ok"] = v.ok();
  r["checks"] = checks;
  if (in.mf.model.layer) r["case"] = to_string(classify(in.mf.model));
  r["places"] = places(in.mf.model).size();
  out["results"] = r;
  return v.ok() ? kOk : kValidation;
}

int cmd_critset(const Config& cfg, json& out) {
  auto in = load(cfg, true);
  out = header("critset", in, cfg);
  const auto wd = checked_widths(in);
  json r = io::to_json(wd);
  r["critical_set"] = io::to_json(critical_set(wd));
  r["condition_1"] = comb_condition_1(wd);
  r["condition_2"] = comb_condition_2(wd);
  out["results"] = r;
  return kOk;
}

int cmd_kostant(const Config& cfg, json& out) {
  auto in = load(cfg, true);
  out = header("kostant", in, cfg);
  const auto& m = in.mf.model;
  checked_widths(in);
  const auto w = find_balanced_kostant(*in.mu, *in.mup, m);
  const auto all = brute_force_balanced(*in.mu, *in.mup, m, cfg.budget);
  json r;
  if (w) {
    r["representative"] = io::to_json(*w, m);
    r["dot_acted"] = io::weight_to_json(dot_acted(*w, *in.mu, *in.mup), m)["components"];
  } else {
    r["representative"] = nullptr;
    r["message"] = "no balanced dominant representative";
  }
  r["brute_force_count"] = all.size();
  const bool agree = w ? std::find(all.begin(), all.end(), *w) != all.end() : all.empty();
  r["oracle_agreement"] = agree;
  out["results"] = r;
  return agree ? kOk : kCounterexample;
}

int cmd_gamma(const Config& cfg, json& out) {
  auto in = load(cfg, true);
  out = header("gamma", in, cfg);
  const auto wd = checked_widths(in);
  json r;
  r["critical_set"] = io::to_json(critical_set(wd));
  int code = kOk;
  if (!cfg.m.empty()) {
    Half x;
    try {
      x = Half::parse(cfg.m);
    } catch (const std::exception& e) {
      throw ValidationError(std::string("--m: ") + e.what());
    }
    try {
      const auto ratio = rankin_selberg_ratio(wd, x);
      r["ratio"] = io::to_json(ratio);
      const auto sched = schedule_ratio_product(*in.mu, *in.mup, in.mf.model, x);
      r["schedule_product_matches"] = sched == ratio;
      if (!(sched == ratio)) code = kCounterexample;
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
  }
  if (cfg.gl2_m > 0) {
    const int mm = cfg.gl2_m;
    const double R = gl2_r_max_for(mm, cfg.tolerance / 10);
    const double num = gl2_intertwining_numeric(mm, R);
    const double exact = gl2_exact(mm);
    const double rel = std::abs(num - exact) / exact;
    const auto sym = successive_ratio({Half(mm), Half(-mm)}, Half(0));
    json g;
    g["m"] = mm;
    g["r_max"] = R;
    g["tail_bound"] = gl2_tail_bound(mm, R);
    g["numeric"] = num;
    g["exact"] = exact;
    g["relative_error"] = rel;
    g["within_tolerance"] = rel < cfg.tolerance;
    g["symbolic_ratio"] = io::to_json(sym);
    g["numeric_over_symbolic"] = num / sym.to_double();
    r["gl2"] = g;
    if (rel >= cfg.tolerance) code = kCounterexample;
  }
  out["results"] = r;
  return code;
}

KostantRep load_rep(const std::string& path, const FieldModel& m) {
  const json j = json::parse(io::read_file(path));
  KostantRep w{j.at("n").get<int>(), j.at("n_prime").get<int>(), std::vector<Kappa>(m.degree())};
  std::vector<bool> seen(m.degree(), false);
  for (auto it = j.at("components").begin(); it != j.at("components").end(); ++it) {
    const int e = m.index_of(it.key());
    w.comp[e] = Kappa{w.n, w.np, it.value().get<std::vector<int>>()};
    if (!is_valid(w.comp[e])) throw ValidationError(path + ": $.components." + it.key() + ": not an increasing tuple in 1..N");
    seen[e] = true;
  }
  for (std::size_t e = 0; e < m.degree(); ++e)
    if (!seen[e]) throw ValidationError(path + ": $.components: no entry for embedding '" + m.embeddings[e] + "'");
  return w;
}

int cmd_sign(const Config& cfg, json& out) {
  const bool from_weights = cfg.rep_path.empty();
  auto in = load(cfg, from_weights);
  out = header("sign", in, cfg);
  const auto& m = in.mf.model;
  KostantRep w;
  if (from_weights) {
    checked_widths(in);
    auto found = find_balanced_kostant(*in.mu, *in.mup, m);
    if (!found) throw ValidationError("no balanced dominant representative for the given weights");
    w = *found;
  } else {
    w = load_rep(cfg.rep_path, m);
  }
  if (in.mf.galois.empty()) throw ValidationError(cfg.model_path + ": $.galois: no Galois elements supplied");
  json rows = json::array();
  std::size_t bad = 0, ones = 0;
  for (const auto& g : in.mf.galois) {
    SignatureReport rep;
    try {
      rep = product_identity(w, g, m);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(e.what());
    }
    if (!rep.formula_ok() || !rep.product_ok()) ++bad;
    if (rep.all_ones()) ++ones;
    rows.push_back(io::to_json(rep));
  }
  json r;
  r["representative"] = io::to_json(w, m);
  r["signatures"] = rows;
  r["counts"] = {{"elements", in.mf.galois.size()}, {"failures", bad}, {"all_ones", ones}};
  out["results"] = r;
  return bad ? kCounterexample : kOk;
}

int cmd_sweep(const Config& cfg, json& out) {
  auto in = load(cfg, false);
  out = header("sweep", in, cfg);
  SweepOptions opt;
  opt.lo = cfg.lo;
  opt.hi = cfg.hi;
  opt.n_max = cfg.n_max;
  opt.sampled_rank = cfg.sampled_rank;
  opt.samples = cfg.samples;
  opt.seed = cfg.seed;
  opt.jobs = cfg.jobs;
  opt.budget = cfg.budget;
  opt.mutant = cfg.mutant;
  auto res = run_sweep(in.mf.model, opt);
  if (cfg.base_change) base_change_sweep(in.mf.model, cfg.bc_n_max, cfg.bc_lo, cfg.bc_hi, res);
  json r;
  r["box"] = {{"lo", cfg.lo}, {"hi", cfg.hi}, {"n_max", cfg.n_max}, {"sampled_rank", cfg.sampled_rank}, {"samples", cfg.samples}, {"seed", cfg.seed}};
  r["counts"] = {{"instances", res.instances},
                 {"all_conditions_hold", res.satisfied},
                 {"empty_critical_set", res.empty_critical},
                 {"counterexamples", res.counterexamples},
                 {"base_change_checked", res.base_change_checked},
                 {"base_change_failures", res.base_change_failures}};
  r["mutant"] = cfg.mutant;
  r["examples"] = res.examples;
  out["results"] = r;
  return res.counterexamples || res.base_change_failures ? kCounterexample : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics and archimedean factors for Rankin-Selberg critical values"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* s, bool weights) {
    s->add_option("--model", cfg.model_path, "field model JSON")->required()->check(CLI::ExistingFile);
    if (weights) {
      s->add_option("--mu", cfg.mu_path, "weight JSON for GL_n")->check(CLI::ExistingFile);
      s->add_option("--mu-prime", cfg.mup_path, "weight JSON for GL_n'")->check(CLI::ExistingFile);
    }
    s->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "table"}));
    s->add_option("--budget", cfg.budget, "enumeration budget")->check(CLI::PositiveNumber);
    s->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);
    s->add_option("--seed", cfg.seed);
    s->add_option("--tolerance", cfg.tolerance)->check(CLI::PositiveNumber);
    s->add_option("--m", cfg.m, "evaluation point in (1/2)Z");
    s->add_flag("--timing", cfg.timing, "include wall time in the report");
  };
  auto* v = app.add_subcommand("validate", "check a field model");
  common(v, false);
  auto* c = app.add_subcommand("critset", "widths and critical set");
  common(c, true);
  auto* k = app.add_subcommand("kostant", "balanced Kostant representative with brute-force cross-check");
  common(k, true);
  auto* g = app.add_subcommand("gamma", "archimedean ratio at --m; optional GL2 quadrature check");
  common(g, true);
  g->add_option("--gl2-m", cfg.gl2_m, "check the GL2 intertwining integral for this m")->check(CLI::PositiveNumber);
  auto* s = app.add_subcommand("sign", "Galois signatures for the model's listed elements");
  common(s, true);
  s->add_option("--rep", cfg.rep_path, "explicit representative JSON")->check(CLI::ExistingFile);
  auto* w = app.add_subcommand("sweep", "combinatorial lemma equivalence over a weight box");
  common(w, false);
  w->add_option("--lo", cfg.lo);
  w->add_option("--hi", cfg.hi);
  w->add_option("--n-max", cfg.n_max)->check(CLI::PositiveNumber);
  w->add_option("--sampled-rank", cfg.sampled_rank);
  w->add_option("--samples", cfg.samples);
  w->add_flag("--mutant", cfg.mutant, "inject a fault into condition (2)");
  w->add_flag("--base-change", cfg.base_change, "also check strongly pure => base change");
  w->add_option("--bc-n-max", cfg.bc_n_max);
  w->add_option("--bc-lo", cfg.bc_lo);
  w->add_option("--bc-hi", cfg.bc_hi);

  CLI11_PARSE(app, argc, argv);

  json report;
  int code = kOk;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*v) code = cmd_validate(cfg, report);
    else if (*c) code = cmd_critset(cfg, report);
    else if (*k) code = cmd_kostant(cfg, report);
    else if (*g) code = cmd_gamma(cfg, report);
    else if (*s) code = cmd_sign(cfg, report);
    else if (*w) code = cmd_sweep(cfg, report);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const io::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kValidation;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
  if (cfg.timing)
    report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  report["exit_code"] = code;
  emit(report, cfg);
  return code;
}
