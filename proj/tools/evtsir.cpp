// Copyright 2026 The evtsir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// evtsir: exact and extreme-value statistics of the max-SIR over L links in
// kappa-mu shadowed fading, with Monte Carlo baselines.
//
// Subcommands: cdf | pdf | frechet | outage | rate | fas | kl | reproduce
// Exit codes: 0 success, 2 numeric failure, 64 usage error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "evtsir/errors.hpp"
#include "evtsir/evt.hpp"
#include "evtsir/metrics.hpp"
#include "evtsir/montecarlo.hpp"
#include "evtsir/presets.hpp"
#include "evtsir/scenario_json.hpp"
#include "evtsir/sirdist.hpp"
#include "evtsir/stats.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 2;
constexpr int kExitUsage = 64;

struct CommonOpts {
  std::string preset;
  std::string config_path;
  std::uint64_t seed = evtsir::mc::RandomStream::kDefaultSeed;
  int workers = 0;
  std::string out = "-";
  std::string format = "csv";
  double rel_tol = 1e-12;
  int max_order = 200;
  int max_outer = 500;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_scenario = true) {
  if (needs_scenario) {
    cmd->add_option("--preset", o.preset, "named scenario preset");
    cmd->add_option("--config", o.config_path, "scenario JSON file");
  }
  cmd->add_option("--seed", o.seed, "random seed (default 0xC0FFEE)");
  cmd->add_option("--workers", o.workers, "worker threads (0 = all cores)");
  cmd->add_option("--out", o.out, "output path ('-' = stdout)");
  cmd->add_option("--format", o.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--rel-tol", o.rel_tol, "series relative tolerance");
  cmd->add_option("--max-order", o.max_order, "series total-degree cap");
  cmd->add_option("--max-outer", o.max_outer, "outer p-sum cap");
}

evtsir::specfun::SeriesControl series_control(const CommonOpts& o) {
  evtsir::specfun::SeriesControl ctl;
  ctl.rel_tol = o.rel_tol;
  ctl.max_total_order = o.max_order;
  ctl.max_outer_p = o.max_outer;
  ctl.validate();
  return ctl;
}

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

evtsir::fading::Scenario resolve_scenario(const CommonOpts& o) {
  if (!o.preset.empty() && !o.config_path.empty())
    throw UsageError("give either --preset or --config, not both");
  if (!o.preset.empty()) {
    auto s = evtsir::presets::find(o.preset);
    if (!s) {
      std::ostringstream msg;
      msg << "unknown preset '" << o.preset << "'; known presets:";
      for (const auto& n : evtsir::presets::names()) msg << ' ' << n;
      throw UsageError(msg.str());
    }
    return *s;
  }
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw UsageError("cannot open config file: " + o.config_path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      return evtsir::fading::scenario_from_json(ss.str());
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad scenario config: ") + e.what());
    }
  }
  throw UsageError("a scenario is required: --preset NAME or --config FILE");
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Table {
  std::string command;
  nlohmann::json config; // full provenance: scenario, params, seed
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

void write_table(const Table& t, const CommonOpts& o) {
  std::ostringstream body;
  if (o.format == "csv") {
    body << "# evtsir " << t.command << "\n";
    body << "# config: " << t.config.dump() << "\n";
    for (size_t c = 0; c < t.columns.size(); ++c)
      body << (c ? "," : "") << t.columns[c];
    body << "\n";
    for (const auto& row : t.rows) {
      for (size_t c = 0; c < row.size(); ++c) body << (c ? "," : "") << fmt(row[c]);
      body << "\n";
    }
  } else {
    nlohmann::json j;
    j["command"] = t.command;
    j["config"] = t.config;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    body << j.dump(2) << "\n";
  }
  if (o.out == "-") {
    std::cout << body.str();
  } else {
    std::ofstream out(o.out, std::ios::binary);
    if (!out) throw UsageError("cannot open output path: " + o.out);
    out << body.str();
  }
}

nlohmann::json base_config(const CommonOpts& o, const evtsir::fading::Scenario* s) {
  nlohmann::json cfg;
  if (s) cfg["scenario"] = nlohmann::json::parse(evtsir::fading::scenario_to_json(*s));
  if (!o.preset.empty()) cfg["preset"] = o.preset;
  cfg["seed"] = o.seed;
  cfg["series"] = {{"rel_tol", o.rel_tol}, {"max_order", o.max_order}, {"max_outer", o.max_outer}};
  return cfg;
}

std::vector<double> make_z_grid(double zmin, double zmax, long zn, bool linear) {
  if (zn < 1 || !(zmin > 0.0) || !(zmax >= zmin) || (zn > 1 && !(zmax > zmin)))
    throw UsageError("z grid requires 0 < zmin <= zmax and zn >= 1");
  std::vector<double> z(static_cast<size_t>(zn));
  if (zn == 1) {
    z[0] = zmin;
    return z;
  }
  for (long i = 0; i < zn; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(zn - 1);
    z[static_cast<size_t>(i)] =
        linear ? zmin + t * (zmax - zmin) : zmin * std::pow(zmax / zmin, t);
  }
  return z;
}

// ---------------------------------------------------------------------------
// subcommand bodies

struct GridOpts {
  double zmin = 0.1;
  double zmax = 50.0;
  long zn = 100;
  bool linear = false;
  long L = 0; // 0: omit the asymptotic column
};

int run_curve(const CommonOpts& o, const GridOpts& g, bool density) {
  const auto scenario = resolve_scenario(o);
  const auto ctl = series_control(o);
  const auto z = make_z_grid(g.zmin, g.zmax, g.zn, g.linear);
  const evtsir::sirdist::SirDistribution dist(scenario, ctl);
  const auto gam = evtsir::fading::gamma_approx(scenario);

  std::optional<evtsir::evt::FrechetParams> fp;
  if (g.L > 0) {
    if (g.L < 2) throw UsageError("--L must be >= 2");
    fp = evtsir::evt::frechet_params(scenario, g.L, ctl);
  }

  Table t;
  t.command = density ? "pdf" : "cdf";
  t.config = base_config(o, &scenario);
  t.config["z_grid"] = {{"zmin", g.zmin}, {"zmax", g.zmax}, {"zn", g.zn}, {"linear", g.linear}};
  if (fp) t.config["L"] = g.L;
  t.columns = {"z", "exact"};
  if (fp) t.columns.push_back(density ? "asymptotic_max_L_pdf" : "asymptotic_max_L");
  t.columns.push_back("beta_prime_approx");
  t.columns.push_back("converged");

  bool all_converged = true;
  for (double zi : z) {
    const auto r = density ? dist.pdf(zi) : dist.cdf(zi);
    all_converged = all_converged && r.converged;
    std::vector<double> row = {zi, r.value};
    if (fp)
      row.push_back(density ? evtsir::evt::frechet_pdf(*fp, zi)
                            : evtsir::evt::frechet_cdf(*fp, zi));
    row.push_back(density ? evtsir::fading::beta_prime_sir_pdf(gam, zi)
                          : evtsir::fading::beta_prime_sir_cdf(gam, zi));
    row.push_back(r.converged ? 1.0 : 0.0);
    t.rows.push_back(std::move(row));
  }
  write_table(t, o);
  if (!all_converged) {
    std::cerr << "evtsir: series did not converge on some rows (see the converged column)\n";
    return kExitNumeric;
  }
  return kExitOk;
}

int run_frechet(const CommonOpts& o, long L) {
  if (L < 2) throw UsageError("--L must be >= 2");
  const auto scenario = resolve_scenario(o);
  const auto ctl = series_control(o);
  const auto fp = evtsir::evt::frechet_params(scenario, L, ctl);
  const auto bound = evtsir::evt::convergence_exponent(scenario);
  Table t;
  t.command = "frechet";
  t.config = base_config(o, &scenario);
  t.config["L"] = L;
  t.columns = {"a_L", "beta", "delta"};
  t.rows = {{fp.scale, fp.shape, bound.delta}};
  write_table(t, o);
  return kExitOk;
}

int run_outage(const CommonOpts& o, long L, double gamma_t, long reps) {
  if (L < 2) throw UsageError("--L must be >= 2");
  if (!(gamma_t > 0.0)) throw UsageError("--gamma-t must be > 0");
  const auto scenario = resolve_scenario(o);
  const auto ctl = series_control(o);
  const auto fp = evtsir::evt::frechet_params(scenario, L, ctl);
  const double asym = evtsir::metrics::outage_asymptotic(fp, gamma_t);

  Table t;
  t.command = "outage";
  t.config = base_config(o, &scenario);
  t.config["L"] = L;
  t.config["gamma_t"] = gamma_t;
  t.config["reps"] = reps;
  t.columns = {"gamma_t", "asymptotic", "mc_estimate", "mc_se"};
  if (reps > 0) {
    const auto est = evtsir::metrics::outage_exact_mc(scenario, L, gamma_t, reps, o.seed, o.workers);
    t.rows = {{gamma_t, asym, est.value, est.std_error}};
  } else {
    t.rows = {{gamma_t, asym, std::nan(""), std::nan("")}};
  }
  write_table(t, o);
  return kExitOk;
}

int run_rate(const CommonOpts& o, long L, long reps) {
  if (L < 2) throw UsageError("--L must be >= 2");
  const auto scenario = resolve_scenario(o);
  const auto ctl = series_control(o);
  const auto fp = evtsir::evt::frechet_params(scenario, L, ctl);
  const double asym = evtsir::metrics::ergodic_rate_asymptotic(fp);
  Table t;
  t.command = "rate";
  t.config = base_config(o, &scenario);
  t.config["L"] = L;
  t.config["reps"] = reps;
  t.columns = {"L", "asymptotic", "mc_estimate", "mc_se"};
  if (reps > 0) {
    const auto est = evtsir::metrics::ergodic_rate_mc(scenario, L, reps, o.seed, o.workers);
    t.rows = {{static_cast<double>(L), asym, est.value, est.std_error}};
  } else {
    t.rows = {{static_cast<double>(L), asym, std::nan(""), std::nan("")}};
  }
  write_table(t, o);
  return kExitOk;
}

int run_fas(const CommonOpts& o, long L, long Ls, long reps) {
  const auto scenario = resolve_scenario(o);
  evtsir::metrics::FasConfig cfg{L, Ls, reps};
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto ctl = series_control(o);
  const auto fp = evtsir::evt::frechet_params(scenario, L, ctl);
  const auto ub = evtsir::metrics::fas_rate_upper_bound(fp, cfg, o.seed, o.workers);
  const auto sim = evtsir::metrics::fas_simulated_rate(scenario, cfg, o.seed + 1, o.workers);
  Table t;
  t.command = "fas";
  t.config = base_config(o, &scenario);
  t.config["L"] = L;
  t.config["Ls"] = Ls;
  t.config["reps"] = reps;
  t.columns = {"L", "Ls", "upper_bound", "ub_se", "simulated", "sim_se"};
  t.rows = {{static_cast<double>(L), static_cast<double>(Ls), ub.value, ub.std_error, sim.value,
             sim.std_error}};
  write_table(t, o);
  return kExitOk;
}

// maxima samples vs Frechet reference samples, paper-style empirical KL
double kl_for(const evtsir::fading::Scenario& scenario, long L, long n, std::uint64_t seed,
              int workers, const evtsir::specfun::SeriesControl& ctl) {
  const auto fp = evtsir::evt::frechet_params(scenario, L, ctl);
  evtsir::mc::MaximaStudy study{scenario, L, n, seed};
  const auto maxima = evtsir::mc::run_maxima_study(study, workers);
  const auto frechet = evtsir::mc::generate_indexed(
      n, workers, seed ^ 0x46524543ull, [&fp](long, evtsir::mc::RandomStream& s) {
        return fp.scale * std::pow(s.exponential(), -1.0 / fp.shape);
      });
  return evtsir::stats::empirical_kl(maxima, frechet).value;
}

int run_kl(const CommonOpts& o, long L, long reps) {
  if (L < 2) throw UsageError("--L must be >= 2");
  if (reps < 100) throw UsageError("--reps must be >= 100 for the KL histogram");
  const auto scenario = resolve_scenario(o);
  const auto ctl = series_control(o);
  const double kl = kl_for(scenario, L, reps, o.seed, o.workers, ctl);
  Table t;
  t.command = "kl";
  t.config = base_config(o, &scenario);
  t.config["L"] = L;
  t.config["reps"] = reps;
  t.columns = {"L", "n", "kl"};
  t.rows = {{static_cast<double>(L), static_cast<double>(reps), kl}};
  write_table(t, o);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// reproduce targets: desk-scale analogues of the benchmark table and figures

struct ReproduceCtx {
  CommonOpts opts;
  long reps;
  evtsir::specfun::SeriesControl ctl;
};

const std::vector<std::string>& reproduce_targets() {
  static const std::vector<std::string> t = {"table1", "fig1", "fig2",  "fig3",  "fig4",
                                             "fig5",   "fig6", "fig7",  "fig8",  "fig9",
                                             "fig10",  "fig11", "fig12", "fig13"};
  return t;
}

Table reproduce_table1(const ReproduceCtx& c) {
  const char* presets_order[] = {"table1-rayleigh-n1", "table1-rayleigh-n2",
                                 "table1-rayleigh-n3", "table1-beta2",
                                 "table1-beta3",       "table1-beta4"};
  Table t;
  t.columns = {"L", "kl_rayleigh_n1", "kl_rayleigh_n2", "kl_rayleigh_n3",
               "kl_beta2", "kl_beta3", "kl_beta4"};
  for (long L : {20L, 40L, 60L, 80L, 100L}) {
    std::vector<double> row = {static_cast<double>(L)};
    for (const char* name : presets_order) {
      const auto s = *evtsir::presets::find(name);
      row.push_back(kl_for(s, L, c.reps, c.opts.seed, c.opts.workers, c.ctl));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table reproduce_cdf_fig(const ReproduceCtx& c, const std::vector<std::string>& names, long L) {
  Table t;
  t.columns = {"case", "z", "simulated_cdf", "frechet_cdf"};
  int case_id = 0;
  for (const auto& name : names) {
    ++case_id;
    const auto scenario = *evtsir::presets::find(name);
    const auto fp = evtsir::evt::frechet_params(scenario, L, c.ctl);
    evtsir::mc::MaximaStudy study{scenario, L, c.reps, c.opts.seed};
    auto maxima = evtsir::mc::run_maxima_study(study, c.opts.workers);
    std::sort(maxima.begin(), maxima.end());
    for (int i = 1; i <= 40; ++i) {
      const double q = static_cast<double>(i) / 41.0;
      const double z = evtsir::evt::frechet_quantile(fp, q);
      t.rows.push_back({static_cast<double>(case_id), z, evtsir::stats::ecdf(maxima, z),
                        evtsir::evt::frechet_cdf(fp, z)});
    }
  }
  return t;
}

// a_L against one varying source parameter, interferer (2, 3, 1)
Table reproduce_scale_probe(const ReproduceCtx& c, const std::string& param,
                            const std::vector<double>& values, double mu_fixed, double m_fixed) {
  Table t;
  t.columns = {param == "mu" ? "mu" : (param == "m" ? "m" : "kappa"), "a_L"};
  const evtsir::fading::FadingParams interferer{2, 3, 1, 1};
  for (double v : values) {
    evtsir::fading::FadingParams src{2, mu_fixed, m_fixed, 1};
    if (param == "mu")
      src.mu = v;
    else if (param == "m")
      src.m = v;
    else
      src.kappa = v;
    const evtsir::fading::Scenario s{src, {interferer}};
    t.rows.push_back({v, evtsir::evt::frechet_scale(s, 200, c.ctl)});
  }
  return t;
}

Table reproduce_moment(const ReproduceCtx& c) {
  const auto scenario = *evtsir::presets::find("fig-moment");
  Table t;
  t.columns = {"L", "sim_mean", "frechet_mean"};
  for (long L : {8L, 16L, 32L, 64L, 128L, 256L, 512L}) {
    const auto fp = evtsir::evt::frechet_params(scenario, L, c.ctl);
    evtsir::mc::MaximaStudy study{scenario, L, c.reps, c.opts.seed};
    const auto maxima = evtsir::mc::run_maxima_study(study, c.opts.workers);
    const auto est = evtsir::mc::estimate_with_se(maxima);
    t.rows.push_back({static_cast<double>(L), est.value, evtsir::evt::frechet_moment(fp, 1.0)});
  }
  return t;
}

Table reproduce_rate_fig(const ReproduceCtx& c, const std::vector<evtsir::fading::Scenario>& ss) {
  Table t;
  t.columns = {"case", "L", "sim_rate", "asym_rate"};
  int case_id = 0;
  for (const auto& scenario : ss) {
    ++case_id;
    for (long L : {4L, 16L, 64L, 256L}) {
      const auto fp = evtsir::evt::frechet_params(scenario, L, c.ctl);
      const auto mcr =
          evtsir::metrics::ergodic_rate_mc(scenario, L, c.reps, c.opts.seed, c.opts.workers);
      t.rows.push_back({static_cast<double>(case_id), static_cast<double>(L), mcr.value,
                        evtsir::metrics::ergodic_rate_asymptotic(fp)});
    }
  }
  return t;
}

Table reproduce_fas_fig(const ReproduceCtx& c, const evtsir::fading::Scenario& scenario) {
  Table t;
  t.columns = {"L", "Ls", "upper_bound", "ub_se", "simulated", "sim_se"};
  for (long L : {64L, 128L})
    for (long Ls : {4L, 8L}) {
      const auto fp = evtsir::evt::frechet_params(scenario, L, c.ctl);
      evtsir::metrics::FasConfig cfg{L, Ls, c.reps};
      const auto ub = evtsir::metrics::fas_rate_upper_bound(fp, cfg, c.opts.seed, c.opts.workers);
      const auto sim =
          evtsir::metrics::fas_simulated_rate(scenario, cfg, c.opts.seed + 1, c.opts.workers);
      t.rows.push_back({static_cast<double>(L), static_cast<double>(Ls), ub.value, ub.std_error,
                        sim.value, sim.std_error});
    }
  return t;
}

int run_reproduce(const CommonOpts& o, const std::string& target, long reps) {
  ReproduceCtx c{o, reps, series_control(o)};
  using evtsir::fading::Scenario;
  auto preset = [](const char* n) { return *evtsir::presets::find(n); };

  Table t;
  if (target == "table1") {
    if (reps < 100) throw UsageError("table1 needs --reps >= 100");
    t = reproduce_table1(c);
  } else if (target == "fig1") {
    t = reproduce_cdf_fig(c, {"table1-beta3", "table1-beta2"}, 64);
  } else if (target == "fig2") {
    t = reproduce_cdf_fig(c, {"table1-rayleigh-n1", "table1-rayleigh-n2", "table1-rayleigh-n3"},
                          32);
  } else if (target == "fig3") {
    t = reproduce_scale_probe(c, "mu", {1, 1.5, 2, 2.5, 3}, 0, 2);
  } else if (target == "fig4") {
    t = reproduce_scale_probe(c, "m", {1, 2, 3}, 2, 0);
  } else if (target == "fig5") {
    t = reproduce_scale_probe(c, "kappa", {0.5, 1, 2, 4}, 1, 3); // m > mu
  } else if (target == "fig6") {
    t = reproduce_scale_probe(c, "kappa", {0.5, 1, 2, 4}, 3, 1); // mu > m
  } else if (target == "fig7") {
    t = reproduce_moment(c);
  } else if (target == "fig8") {
    t = reproduce_rate_fig(c, {preset("fig-moment"), preset("table1-beta4")});
  } else if (target == "fig9") {
    // interferer variation at fixed source
    Scenario a{{2, 1, 1, 1}, {{2, 1, 1, 1}}};
    Scenario b{{2, 1, 1, 1}, {{2, 2, 3, 1}}};
    t = reproduce_rate_fig(c, {a, b});
  } else if (target == "fig10") {
    // source variation at fixed interferer (2, 2, 3)
    Scenario a{{2, 1, 1, 1}, {{2, 2, 3, 1}}};
    Scenario b{{2, 3, 2, 1}, {{2, 2, 3, 1}}};
    t = reproduce_rate_fig(c, {a, b});
  } else if (target == "fig11") {
    t = reproduce_fas_fig(c, preset("table1-rayleigh-n1"));
  } else if (target == "fig12") {
    t = reproduce_fas_fig(c, preset("fig-fas-n1"));
  } else if (target == "fig13") {
    t = reproduce_fas_fig(c, preset("fig-fas-n2"));
  } else {
    std::ostringstream msg;
    msg << "unknown target '" << target << "'; targets:";
    for (const auto& n : reproduce_targets()) msg << ' ' << n;
    throw UsageError(msg.str());
  }
  t.command = "reproduce " + target;
  t.config = base_config(o, nullptr);
  t.config["target"] = target;
  t.config["reps"] = reps;
  write_table(t, o);
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and extreme-value statistics of the maximum SIR in "
               "kappa-mu shadowed fading"};
  app.require_subcommand(1);

  CommonOpts o_cdf, o_pdf, o_frechet, o_outage, o_rate, o_fas, o_kl, o_rep;
  GridOpts g_cdf, g_pdf;
  long L_frechet = 0, L_outage = 0, L_rate = 0, L_fas = 0, L_kl = 0;
  long Ls_fas = 1;
  long reps_outage = 0, reps_rate = 0, reps_fas = 100000, reps_kl = 1000000, reps_rep = 100000;
  double gamma_t = 1.0;
  std::string target;

  auto* cdf = app.add_subcommand("cdf", "exact SIR CDF over a z grid");
  add_common(cdf, o_cdf);
  cdf->add_option("--zmin", g_cdf.zmin);
  cdf->add_option("--zmax", g_cdf.zmax);
  cdf->add_option("--zn", g_cdf.zn, "grid points");
  cdf->add_flag("--linear", g_cdf.linear, "linear grid (default log-spaced)");
  cdf->add_option("--L", g_cdf.L, "add the max-over-L asymptotic column");

  auto* pdf = app.add_subcommand("pdf", "exact SIR PDF over a z grid");
  add_common(pdf, o_pdf);
  pdf->add_option("--zmin", g_pdf.zmin);
  pdf->add_option("--zmax", g_pdf.zmax);
  pdf->add_option("--zn", g_pdf.zn, "grid points");
  pdf->add_flag("--linear", g_pdf.linear, "linear grid (default log-spaced)");
  pdf->add_option("--L", g_pdf.L, "add the max-over-L asymptotic column");

  auto* fre = app.add_subcommand("frechet", "Frechet scale/shape and convergence exponent");
  add_common(fre, o_frechet);
  fre->add_option("--L", L_frechet, "maxima length")->required();

  auto* out = app.add_subcommand("outage", "asymptotic and simulated outage probability");
  add_common(out, o_outage);
  out->add_option("--L", L_outage)->required();
  out->add_option("--gamma-t", gamma_t, "SIR threshold")->required();
  out->add_option("--reps", reps_outage, "MC replications (0 = analytic only)");

  auto* rate = app.add_subcommand("rate", "asymptotic and simulated ergodic rate");
  add_common(rate, o_rate);
  rate->add_option("--L", L_rate)->required();
  rate->add_option("--reps", reps_rate, "MC replications (0 = analytic only)");

  auto* fas = app.add_subcommand("fas", "FAS rate upper bound vs simulation");
  add_common(fas, o_fas);
  fas->add_option("--L", L_fas)->required();
  fas->add_option("--Ls", Ls_fas, "selected antennas")->required();
  fas->add_option("--reps", reps_fas, "MC replications");

  auto* kl = app.add_subcommand("kl", "empirical KL of maxima vs the Frechet limit");
  add_common(kl, o_kl);
  kl->add_option("--L", L_kl)->required();
  kl->add_option("--reps", reps_kl, "sample count n");

  auto* rep = app.add_subcommand("reproduce", "desk-scale benchmark tables and figures");
  add_common(rep, o_rep, false);
  rep->add_option("--target", target, "table1 | fig1..fig13")->required();
  rep->add_option("--reps", reps_rep, "MC replications per point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cdf->parsed()) return run_curve(o_cdf, g_cdf, false);
    if (pdf->parsed()) return run_curve(o_pdf, g_pdf, true);
    if (fre->parsed()) return run_frechet(o_frechet, L_frechet);
    if (out->parsed()) return run_outage(o_outage, L_outage, gamma_t, reps_outage);
    if (rate->parsed()) return run_rate(o_rate, L_rate, reps_rate);
    if (fas->parsed()) return run_fas(o_fas, L_fas, Ls_fas, reps_fas);
    if (kl->parsed()) return run_kl(o_kl, L_kl, reps_kl);
    if (rep->parsed()) return run_reproduce(o_rep, target, reps_rep);
  } catch (const UsageError& e) {
    std::cerr << "evtsir: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "evtsir: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "evtsir: " << e.what() << "\n";
    return kExitUsage;
  } catch (const evtsir::NumericError& e) {
    std::cerr << "evtsir: numeric failure: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "evtsir: " << e.what() << "\n";
    return kExitNumeric;
  }
  return kExitOk;
}
