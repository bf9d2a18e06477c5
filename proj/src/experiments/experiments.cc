// Copyright 2026 The Minimax Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "minimax/experiments/experiments.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include <fmt/format.h>

#include "minimax/errors.h"
#include "minimax/experiments/svg.h"
#include "minimax/fgan_divergences.h"
#include "minimax/fictitious_play.h"
#include "minimax/gan_discrete.h"
#include "minimax/game_core.h"
#include "minimax/gradient_dynamics.h"
#include "minimax/neural/fictitious_gan.h"
#include "minimax/neural/gauss8.h"
#include "minimax/neural/grad_check.h"

namespace minimax::experiments {
namespace {

using nlohmann::json;
namespace nn = ::minimax::neural;

constexpr std::int64_t kMaxIters = 100'000'000;
constexpr std::int64_t kMaxSeed = std::numeric_limits<std::int64_t>::max();

// Typed access to the override object. Every key read is recorded with its
// resolved value; keys never read are rejected by Finish().
class Params {
 public:
  Params(std::string experiment, const json& overrides)
      : experiment_(std::move(experiment)), overrides_(overrides) {
    if (!overrides_.is_object()) throw ConfigError("experiment parameters must be a JSON object");
  }

  std::int64_t Int(const std::string& key, std::int64_t def, std::int64_t lo, std::int64_t hi) {
    std::int64_t v = def;
    if (const json* j = Take(key)) {
      if (!j->is_number_integer()) throw ConfigError(key + " must be an integer");
      if (j->is_number_unsigned() &&
          j->get<std::uint64_t>() > static_cast<std::uint64_t>(kMaxSeed)) {
        throw ConfigError(key + " is out of range");
      }
      v = j->get<std::int64_t>();
    }
    if (v < lo || v > hi) {
      throw ConfigError(fmt::format("{} = {} is outside [{}, {}]", key, v, lo, hi));
    }
    resolved_[key] = v;
    return v;
  }

  // Open interval (lo, hi) when `open` is set, closed otherwise.
  double Real(const std::string& key, double def, double lo, double hi, bool open = false) {
    double v = def;
    if (const json* j = Take(key)) {
      if (!j->is_number()) throw ConfigError(key + " must be a number");
      v = j->get<double>();
    }
    const bool ok = std::isfinite(v) && (open ? (v > lo && v < hi) : (v >= lo && v <= hi));
    if (!ok) {
      throw ConfigError(fmt::format("{} = {} is outside {}{}, {}{}", key, v, open ? "(" : "[", lo,
                                    hi, open ? ")" : "]"));
    }
    resolved_[key] = v;
    return v;
  }

  bool Bool(const std::string& key, bool def) {
    bool v = def;
    if (const json* j = Take(key)) {
      if (!j->is_boolean()) throw ConfigError(key + " must be true or false");
      v = j->get<bool>();
    }
    resolved_[key] = v;
    return v;
  }

  // Nonnegative finite weights; absent keys yield nullopt.
  std::optional<std::vector<double>> Weights(const std::string& key) {
    const json* j = Take(key);
    if (j == nullptr) return std::nullopt;
    if (!j->is_array() || j->empty()) throw ConfigError(key + " must be a nonempty array");
    std::vector<double> v;
    for (const json& e : *j) {
      if (!e.is_number()) throw ConfigError(key + " entries must be numbers");
      v.push_back(e.get<double>());
    }
    resolved_[key] = v;
    return v;
  }

  std::vector<std::int64_t> IntList(const std::string& key, std::vector<std::int64_t> def,
                                    std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> v = std::move(def);
    if (const json* j = Take(key)) {
      if (!j->is_array() || j->empty()) throw ConfigError(key + " must be a nonempty array");
      v.clear();
      for (const json& e : *j) {
        if (!e.is_number_integer()) throw ConfigError(key + " entries must be integers");
        v.push_back(e.get<std::int64_t>());
      }
    }
    for (std::int64_t x : v) {
      if (x < lo || x > hi) {
        throw ConfigError(fmt::format("{} entry {} is outside [{}, {}]", key, x, lo, hi));
      }
    }
    resolved_[key] = v;
    return v;
  }

  // The command-line seed wins over the parameter block.
  std::uint64_t Seed(std::optional<std::uint64_t> cli, std::int64_t def) {
    std::uint64_t v = static_cast<std::uint64_t>(Int("seed", def, 0, kMaxSeed));
    if (cli) v = *cli;
    resolved_["seed"] = v;
    return v;
  }

  // Called once every parameter has been read, before any work starts.
  void Finish() const {
    for (const auto& [key, value] : overrides_.items()) {
      if (!resolved_.contains(key)) {
        throw ConfigError(fmt::format("unknown parameter '{}' for {}", key, experiment_));
      }
    }
  }

  const json& resolved() const { return resolved_; }

 private:
  const json* Take(const std::string& key) const {
    auto it = overrides_.find(key);
    return it == overrides_.end() ? nullptr : &*it;
  }

  std::string experiment_;
  json overrides_;
  json resolved_ = json::object();
};

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string Num(double v) { return fmt::format("{}", v); }

template <typename T>
double Median(std::vector<T> v) {
  if (v.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? static_cast<double>(v[m])
                           : 0.5 * (static_cast<double>(v[m - 1]) + static_cast<double>(v[m]));
}

template <typename Writer>
std::string Capture(Writer&& write) {
  std::ostringstream out;
  write(out);
  return out.str();
}

// Keeps at most `limit` evenly spaced points.
Series Thin(std::string label, const std::vector<double>& x, const std::vector<double>& y,
            std::size_t limit = 2000) {
  Series s{std::move(label), {}, {}};
  const std::size_t n = std::min(x.size(), y.size());
  const std::size_t stride = std::max<std::size_t>(1, n / limit);
  for (std::size_t i = 0; i < n; i += stride) {
    s.x.push_back(x[i]);
    s.y.push_back(y[i]);
  }
  return s;
}

CategoricalDist BernoulliParam(Params& p, const std::string& key, double def) {
  return CategoricalDist::Bernoulli(p.Real(key, def, 0.0, 1.0));
}

// ---------------------------------------------------------------------------

ExperimentResult RunExample1Br(Params& p, std::optional<std::uint64_t>) {
  const CategoricalDist p_d = BernoulliParam(p, "p_d", 0.25);
  const CategoricalDist init = BernoulliParam(p, "init_pg", 0.1);
  const std::int64_t iters = p.Int("iters", 100, 1, kMaxIters);
  p.Finish();

  Stopwatch clock;
  // The trace length counts the initial generator.
  const BestResponseTrace trace = RunBestResponseGan(p_d, init, iters + 1);
  const double runtime = clock.Seconds();

  // Iteration k should put all mass on label 1 for odd k and on 0 for even k.
  int mismatches = 0;
  for (std::int64_t k = 1; k <= iters; ++k) {
    const std::size_t want = k % 2 == 1 ? 1 : 0;
    if (trace.generators[static_cast<std::size_t>(k)][want] != 1.0) ++mismatches;
  }

  ExperimentResult r;
  r.checks = {Check("br_oscillation_mismatches", mismatches), Check("br_runtime_s", runtime)};
  std::string csv = "k,pg_0,pg_1,D_0,D_1\n";
  std::vector<double> ks, pg1, d1;
  for (std::size_t k = 0; k < trace.generators.size(); ++k) {
    const CategoricalDist& g = trace.generators[k];
    const std::vector<double> d = OptimalDiscriminatorValues(p_d, g);
    csv += fmt::format("{},{},{},{},{}\n", k, Num(g[0]), Num(g[1]), Num(d[0]), Num(d[1]));
    ks.push_back(static_cast<double>(k));
    pg1.push_back(g[1]);
    d1.push_back(d[1]);
  }
  r.files.push_back({"br_trace.csv", std::move(csv)});
  r.plots.push_back({"br_trace.svg",
                     RenderSvg({"Best-response training", "iteration", "value"},
                               {Thin("p_g(1)", ks, pg1), Thin("D*(1)", ks, d1)})});
  r.notes.push_back(fmt::format("{} of {} iterations off the alternation", mismatches, iters));
  return r;
}

ExperimentResult RunExample1Fp(Params& p, std::optional<std::uint64_t>) {
  const CategoricalDist p_d = BernoulliParam(p, "p_d", 0.25);
  const CategoricalDist init = BernoulliParam(p, "init_pg", 0.1);
  const std::int64_t iters = p.Int("iters", 2000, 1, kMaxIters);
  // D(x) = x on {0, 1}; the table clamps the endpoints.
  const std::vector<double> identity{0.0, 1.0};
  const DiscriminatorTable init_d(p_d.support(), identity);
  p.Finish();

  Stopwatch clock;
  const FictitiousGanTrace trace = RunFictitiousGanDiscrete(p_d, init, init_d, iters);
  const double runtime = clock.Seconds();

  const FictitiousGanRecord& last = trace.back();
  double l1 = 0.0;
  for (std::size_t i = 0; i < p_d.size(); ++i) l1 += std::abs(last.pbar[i] - p_d[i]);
  double farthest = 0.5;
  for (std::size_t i = 0; i < p_d.size(); ++i) {
    if (p_d[i] > 0.0 && std::abs(last.d[i] - 0.5) > std::abs(farthest - 0.5)) {
      farthest = last.d[i];
    }
  }

  ExperimentResult r;
  r.checks = {Check("fp_pbar_l1", l1), Check("d_gap", farthest),
              Check("fp_discrete_runtime_s", runtime)};
  r.files.push_back(
      {"fp_discrete_trace.csv", Capture([&](std::ostream& o) { WriteFictitiousGanCsv(o, trace); })});
  std::vector<double> ns, pbar1, d0, d1;
  for (const FictitiousGanRecord& rec : trace.records) {
    ns.push_back(static_cast<double>(rec.n));
    pbar1.push_back(rec.pbar[1]);
    d0.push_back(rec.d[0]);
    d1.push_back(rec.d[1]);
  }
  r.plots.push_back({"fp_discrete_trace.svg",
                     RenderSvg({"Fictitious play, Bernoulli data", "iteration", "value"},
                               {Thin("mean p_g(1)", ns, pbar1), Thin("D_n(0)", ns, d0),
                                Thin("D_n(1)", ns, d1)})});
  r.notes.push_back(fmt::format("final mean generator ({}, {}), D_n ({}, {})", last.pbar[0],
                                last.pbar[1], last.d[0], last.d[1]));
  return r;
}

ExperimentResult RunExample2Gda(Params& p, std::optional<std::uint64_t>) {
  const double x0 = p.Real("x0", 0.1, -1e6, 1e6);
  const double y0 = p.Real("y0", 0.1, -1e6, 1e6);
  const double step = p.Real("step", 0.01, 0.0, 1.0, /*open=*/true);
  const std::int64_t iters = p.Int("iters", 50000, 1, kMaxIters);
  const std::int64_t cf_iters = p.Int("closed_form_iters", 10000, 0, kMaxIters);
  if (x0 == 0.0 && y0 == 0.0) throw ConfigError("the origin is a fixed point; pick x0 or y0 != 0");
  p.Finish();

  Stopwatch clock;
  const GdaTrace trace = RunGda(x0, y0, step, iters);
  const double runtime = clock.Seconds();

  const double c = std::sqrt(1.0 + step * step);
  double ratio_residual = 0.0;
  for (std::size_t n = 0; n + 1 < trace.records.size(); ++n) {
    const double ratio = trace.records[n + 1].norm / trace.records[n].norm;
    ratio_residual = std::max(ratio_residual, std::abs(ratio / c - 1.0));
  }
  double cf_residual = 0.0;
  const std::int64_t cf_last = std::min(cf_iters, iters);
  for (std::int64_t n = 0; n <= cf_last; ++n) {
    const GdaRecord& rec = trace.records[static_cast<std::size_t>(n)];
    const Point2 z = ClosedFormTrajectory(x0, y0, step, n);
    cf_residual =
        std::max(cf_residual, std::hypot(rec.x - z.x, rec.y - z.y) / std::hypot(z.x, z.y));
  }

  ExperimentResult r;
  r.checks = {Check("norm_ratio_residual", ratio_residual),
              Check("closed_form_residual", cf_residual),
              Check("divergence_flag", trace.diverged ? 1.0 : 0.0),
              Check("gda_runtime_s", runtime)};
  r.files.push_back({"gda_trace.csv", Capture([&](std::ostream& o) { WriteGdaCsv(o, trace); })});
  std::vector<double> xs, ys;
  for (const GdaRecord& rec : trace.records) {
    xs.push_back(rec.x);
    ys.push_back(rec.y);
  }
  r.plots.push_back({"gda_trajectory.svg",
                     RenderSvg({"Gradient descent-ascent on xy", "x", "y", false, true},
                               {Thin("(x_n, y_n)", xs, ys, 5000)})});
  r.notes.push_back(fmt::format("predicted divergence iteration {}; observed {}",
                                PredictedDivergenceIter(step),
                                trace.divergence_iter ? std::to_string(*trace.divergence_iter)
                                                      : std::string("none")));
  r.notes.push_back(fmt::format("final norm {} from initial {}", trace.records.back().norm,
                                trace.records.front().norm));
  return r;
}

ExperimentResult RunExample2Fp(Params& p, std::optional<std::uint64_t>) {
  const double lo = p.Real("lo", -10.0, -1e6, 0.0, /*open=*/true);
  const double hi = p.Real("hi", 10.0, 0.0, 1e6, /*open=*/true);
  const double x0 = p.Real("x0", 0.1, lo, hi);
  const double y0 = p.Real("y0", 0.1, lo, hi);
  const std::int64_t iters = p.Int("iters", 10000, 1, kMaxIters);
  const BilinearIntervalGame game(lo, hi, lo, hi);
  p.Finish();

  Stopwatch clock;
  const FpTrace trace = RunFp(game, iters, BilinearActions{x0, y0});
  const double runtime = clock.Seconds();
  const FpRecord& last = trace.records.back();

  // Two-point game on the interval endpoints, mixing the endpoint shares.
  const FiniteZeroSumGame endpoints({{lo * lo, lo * hi}, {hi * lo, hi * hi}});
  auto endpoint_mix = [](const std::vector<double>& freq) {
    const double total = freq[0] + freq[1];
    if (!(total > 0.0)) throw InvalidStateError("no endpoint actions in the history");
    return MixedStrategy({freq[0] / total, 1.0 - freq[0] / total});
  };
  const double eps = FindCriterion("fp_eps_nash_gain").tolerance;
  const NashCheck nash =
      EpsilonNashCheck(endpoints, endpoint_mix(last.emp1), endpoint_mix(last.emp2), eps);

  ExperimentResult r;
  r.checks = {Check("fp_freq_p1_high", last.emp1[1]), Check("fp_freq_p2_high", last.emp2[1]),
              Check("fp_avg_utility", last.avg_utility),
              Check("fp_eps_nash_gain", nash.max_gain),
              Check("fp_bilinear_runtime_s", runtime)};
  r.files.push_back(
      {"fp_bilinear_trace.csv", Capture([&](std::ostream& o) { WriteFpCsv(o, trace, true); })});
  std::vector<double> ns, f1, f2;
  for (const FpRecord& rec : trace.records) {
    ns.push_back(static_cast<double>(rec.n));
    f1.push_back(rec.emp1[1]);
    f2.push_back(rec.emp2[1]);
  }
  r.plots.push_back({"fp_bilinear_freq.svg",
                     RenderSvg({"Fictitious play on xy", "iteration", "share of upper endpoint"},
                               {Thin("player 1", ns, f1), Thin("player 2", ns, f2)})});
  r.notes.push_back(fmt::format("realized path average utility {}", last.realized_avg_utility));
  r.notes.push_back(fmt::format("value bracket [{}, {}]", last.bounds.lower, last.bounds.upper));
  return r;
}

ExperimentResult RunGanDiscrete(Params& p, std::optional<std::uint64_t> cli_seed) {
  const std::uint64_t seed = p.Seed(cli_seed, 0);
  const std::optional<std::vector<double>> fixed_pd = p.Weights("p_d");
  const std::optional<std::vector<double>> fixed_init = p.Weights("init_pg");
  const std::int64_t iters = p.Int("iters", 10000, 1, kMaxIters);
  const std::int64_t trials = fixed_pd ? 1 : p.Int("trials", 20, 1, 100000);
  const std::int64_t support = fixed_pd ? static_cast<std::int64_t>(fixed_pd->size())
                                        : p.Int("support", 16, 2, 100000);
  const std::int64_t value_trials = p.Int("value_trials", 100, 1, 1000000);
  const std::int64_t value_min = p.Int("value_min_support", 2, 1, 100000);
  const std::int64_t value_max = p.Int("value_max_support", 16, value_min, 100000);
  p.Finish();

  auto make = [](const std::vector<double>& w, const char* what) {
    try {
      return CategoricalDist(w);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(fmt::format("{}: {}", what, e.what()));
    }
  };
  std::optional<CategoricalDist> init_pg;
  if (fixed_init) {
    if (static_cast<std::int64_t>(fixed_init->size()) != support) {
      throw ConfigError("init_pg and p_d must have the same length");
    }
    init_pg = make(*fixed_init, "init_pg");
  }

  // Value at the equilibrium over random data distributions.
  std::seed_seq value_seq{seed, std::uint64_t{0x5eed}};
  std::mt19937_64 value_rng(value_seq);
  std::uniform_int_distribution<std::int64_t> size_dist(value_min, value_max);
  double value_residual = 0.0;
  for (std::int64_t t = 0; t < value_trials; ++t) {
    const CategoricalDist pd =
        CategoricalDist::RandomSimplex(static_cast<std::size_t>(size_dist(value_rng)), value_rng);
    value_residual = std::max(
        value_residual,
        std::abs(GanValue(pd, pd, DiscriminatorTable::Constant(pd, 0.5)) + std::log(4.0)));
  }

  Stopwatch clock;
  double jsd_final = 0.0, identity_residual = 0.0;
  std::string trials_csv = "trial,jsd_final,identity_residual\n";
  std::optional<FictitiousGanTrace> first;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::seed_seq seq{seed, static_cast<std::uint64_t>(t)};
    std::mt19937_64 rng(seq);
    const CategoricalDist pd =
        fixed_pd ? make(*fixed_pd, "p_d")
                 : CategoricalDist::RandomSimplex(static_cast<std::size_t>(support), rng);
    const CategoricalDist init =
        init_pg ? *init_pg : CategoricalDist::Delta(static_cast<std::size_t>(support), 0);
    FictitiousGanTrace trace =
        RunFictitiousGanDiscrete(pd, init, DiscriminatorTable::Constant(pd, 0.5), iters);
    double residual = 0.0;
    for (const FictitiousGanRecord& rec : trace.records) {
      residual = std::max(residual, std::abs(rec.value - (2.0 * rec.jsd - std::log(4.0))));
    }
    jsd_final = std::max(jsd_final, trace.back().jsd);
    identity_residual = std::max(identity_residual, residual);
    trials_csv += fmt::format("{},{},{}\n", t, Num(trace.back().jsd), Num(residual));
    if (t == 0) first = std::move(trace);
  }
  const double runtime = clock.Seconds();

  ExperimentResult r;
  r.checks = {Check("equilibrium_value_residual", value_residual), Check("jsd_final", jsd_final),
              Check("jsd_identity_residual", identity_residual),
              Check("gan_discrete_runtime_s", runtime)};
  r.files.push_back({"gan_discrete_trials.csv", std::move(trials_csv)});
  r.files.push_back({"gan_discrete_trace.csv",
                     Capture([&](std::ostream& o) { WriteFictitiousGanCsv(o, *first); })});
  std::vector<double> ns, jsd;
  for (const FictitiousGanRecord& rec : first->records) {
    ns.push_back(static_cast<double>(rec.n));
    jsd.push_back(rec.jsd);
  }
  r.plots.push_back({"gan_discrete_jsd.svg",
                     RenderSvg({"Discrete fictitious GAN, trial 0", "iteration", "JSD (nats)"},
                               {Thin("JSD(mean p_g || p_d)", ns, jsd)})});
  r.notes.push_back(fmt::format("{} trials over {} labels, {} iterations each", trials, support,
                                iters));
  return r;
}

ExperimentResult RunFganTable(Params& p, std::optional<std::uint64_t> cli_seed) {
  const std::uint64_t seed = p.Seed(cli_seed, 7);
  const std::int64_t support = p.Int("support", 8, 1, 100000);
  p.Finish();

  Stopwatch clock;
  std::vector<FixedPointReport> reports;
  for (const DivergenceSpec& spec : Registry()) {
    reports.push_back(CheckFixedPoint(spec, seed, static_cast<std::size_t>(support)));
  }
  const double runtime = clock.Seconds();

  double d_residual = 0.0, v_residual = 0.0;
  std::string csv = "divergence,d_star,game_value,computed_value,max_d_residual,value_residual\n";
  ExperimentResult r;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const DivergenceSpec& spec = Registry()[i];
    const FixedPointReport& rep = reports[i];
    d_residual = std::max(d_residual, rep.max_d_residual);
    v_residual = std::max(v_residual, rep.value_residual);
    csv += fmt::format("{},{},{},{},{},{}\n", spec.name, Num(spec.d_star), Num(spec.game_value),
                       Num(rep.computed_value), Num(rep.max_d_residual), Num(rep.value_residual));
    r.notes.push_back(fmt::format("{:<18} D* {:<10.6g} value {:<10.6g} residuals {:.2e} {:.2e}",
                                  spec.name, spec.d_star, spec.game_value, rep.max_d_residual,
                                  rep.value_residual));
  }
  r.checks = {Check("fgan_d_star_residual", d_residual), Check("fgan_value_residual", v_residual),
              Check("fgan_runtime_s", runtime)};
  r.files.push_back({"fgan_table.csv", std::move(csv)});
  return r;
}

// Shared training parameters of the neural experiments.
nn::FictitiousGanConfig ReadTrainConfig(Params& p, std::int64_t default_iters, bool dumps) {
  const bool full = p.Bool("full_scale", false);
  nn::FictitiousGanConfig c = full ? nn::FictitiousGanConfig::FullScale()
                                    : nn::FictitiousGanConfig{};
  const int noise = static_cast<int>(p.Int("noise_dim", c.gauss8.noise_dim, 1, 65536));
  c.gauss8.noise_dim = noise;
  c.g_spec = nn::MlpSpec::Generator(noise);
  c.outer_iters = p.Int("iters", full ? c.outer_iters : default_iters, 1, kMaxIters);
  c.k0 = static_cast<int>(p.Int("k0", c.k0, 1, 10000));
  c.minibatch = static_cast<int>(p.Int("minibatch", c.minibatch, 1, 1 << 20));
  const double inf = std::numeric_limits<double>::infinity();
  c.d_lr = p.Real("d_lr", c.d_lr, 0.0, inf, /*open=*/true);
  c.g_lr = p.Real("g_lr", c.g_lr, 0.0, inf, /*open=*/true);
  c.sample_every = dumps ? p.Int("sample_every", c.sample_every, 0, kMaxIters) : 0;
  c.eval_samples = static_cast<int>(p.Int("eval_samples", c.eval_samples, 1, 10'000'000));
  return c;
}

nn::FictitiousGanConfig WithSeed(nn::FictitiousGanConfig c, std::uint64_t seed) {
  c.seed = seed;
  c.gauss8.seed = seed;
  return c;
}

bool CoveragePasses(const nn::Coverage& cov) {
  return Passes(FindCriterion("gauss8_covered_modes"), cov.covered_modes) &&
         Passes(FindCriterion("gauss8_hq_fraction"), cov.high_quality_fraction);
}

ExperimentResult RunGauss8(Params& p, std::optional<std::uint64_t> cli_seed) {
  const std::uint64_t seed = p.Seed(cli_seed, 0);
  nn::FictitiousGanConfig base = ReadTrainConfig(p, 5000, /*dumps=*/true);
  base.queue_capacity = static_cast<std::size_t>(p.Int("capacity", 5, 1, 10000));
  const int seeds = static_cast<int>(p.Int("seeds", 5, 1, 1000));
  const bool checks = p.Bool("checks", true);
  const int probes = static_cast<int>(p.Int("grad_probes", 20, 1, 100000));
  const std::int64_t degeneracy_iters = p.Int("degeneracy_iters", 200, 1, kMaxIters);
  p.Finish();
  base.Validate();

  ExperimentResult r;
  if (checks) {
    Stopwatch clock;
    const nn::GradientChecks g = nn::RunGradientChecks(seed, probes, 3, base.gauss8.noise_dim);
    const double runtime = clock.Seconds();
    r.checks.push_back(Check("grad_mlp_rel_error", g.mlp.max_rel_error));
    r.checks.push_back(Check("grad_mixture_d_rel_error", g.mixture_d.max_rel_error));
    r.checks.push_back(Check("grad_mixture_g_rel_error", g.mixture_g.max_rel_error));
    r.checks.push_back(Check("grad_runtime_s", runtime));

    nn::FictitiousGanConfig c = WithSeed(base, seed);
    c.queue_capacity = 1;
    c.outer_iters = degeneracy_iters;
    c.sample_every = 0;
    const nn::TrainResult fict = nn::TrainFictitiousGan(c);
    const nn::TrainResult standard = nn::TrainStandardGan(c);
    std::int64_t mismatches = 0;
    for (std::size_t i = 0; i < fict.d_params.size(); ++i) {
      mismatches += fict.d_params[i] != standard.d_params[i];
    }
    for (std::size_t i = 0; i < fict.g_params.size(); ++i) {
      mismatches += fict.g_params[i] != standard.g_params[i];
    }
    for (std::size_t i = 0; i < fict.trace.size(); ++i) {
      mismatches += fict.trace[i].d_loss != standard.trace[i].d_loss;
      mismatches += fict.trace[i].g_loss != standard.trace[i].g_loss;
    }
    r.checks.push_back(Check("degeneracy_mismatches", static_cast<double>(mismatches)));
  }

  std::vector<nn::TrainResult> runs(static_cast<std::size_t>(seeds));
  ParallelFor(seeds, [&](int i) {
    runs[static_cast<std::size_t>(i)] = nn::TrainFictitiousGan(WithSeed(base, seed + i));
  });

  std::vector<int> covered;
  std::vector<double> hq;
  int passes = 0;
  std::string seeds_csv = "seed,covered_modes,hq_fraction,pass\n";
  std::vector<Series> coverage_series;
  for (int i = 0; i < seeds; ++i) {
    const nn::TrainResult& run = runs[static_cast<std::size_t>(i)];
    const std::uint64_t s = seed + i;
    const nn::Coverage& cov = run.final_coverage;
    const bool ok = CoveragePasses(cov);
    passes += ok;
    covered.push_back(cov.covered_modes);
    hq.push_back(cov.high_quality_fraction);
    seeds_csv += fmt::format("{},{},{},{}\n", s, cov.covered_modes,
                             Num(cov.high_quality_fraction), ok ? 1 : 0);
    r.files.push_back({fmt::format("trace_seed{}.csv", s),
                       Capture([&](std::ostream& o) { nn::WriteTrainCsv(o, run.trace); })});
    Series series{fmt::format("seed {}", s), {}, {}};
    for (const nn::SampleDump& dump : run.dumps) {
      r.files.push_back({fmt::format("samples_seed{}_{}.csv", s, dump.iter),
                         Capture([&](std::ostream& o) { nn::WriteSamplesCsv(o, dump.samples); })});
      series.x.push_back(static_cast<double>(dump.iter));
      series.y.push_back(dump.coverage.covered_modes);
    }
    coverage_series.push_back(std::move(series));
    r.notes.push_back(fmt::format("seed {}: {} modes covered, high-quality fraction {:.4f}", s,
                                  cov.covered_modes, cov.high_quality_fraction));
  }
  r.checks.push_back(Check("gauss8_covered_modes", Median(covered)));
  r.checks.push_back(Check("gauss8_hq_fraction", Median(hq)));
  r.checks.push_back(Check("gauss8_seed_passes", passes));
  r.files.push_back({"seeds.csv", std::move(seeds_csv)});

  const nn::SampleDump& final_dump = runs.front().dumps.back();
  std::vector<double> sx(final_dump.samples.col(0).begin(), final_dump.samples.col(0).end());
  std::vector<double> sy(final_dump.samples.col(1).begin(), final_dump.samples.col(1).end());
  const nn::Matrix centers = nn::ModeCenters(base.gauss8);
  std::vector<double> cx(centers.col(0).begin(), centers.col(0).end());
  std::vector<double> cy(centers.col(1).begin(), centers.col(1).end());
  r.plots.push_back(
      {"samples_final.svg",
       RenderSvg({fmt::format("Generated samples, seed {}, iteration {}", seed, final_dump.iter),
                  "x", "y", true, true},
                 {Thin("generated", sx, sy), Thin("mode centers", cx, cy)})});
  r.plots.push_back({"coverage.svg", RenderSvg({"Mode coverage during training", "iteration",
                                                "covered modes"},
                                               coverage_series)});
  r.notes.insert(r.notes.begin(),
                 fmt::format("{} seeds from {}, {} outer iterations, capacity {}, k0 {}, noise {}",
                             seeds, seed, base.outer_iters, base.queue_capacity, base.k0,
                             base.gauss8.noise_dim));
  return r;
}

ExperimentResult RunQueueSweep(Params& p, std::optional<std::uint64_t> cli_seed) {
  const std::uint64_t seed = p.Seed(cli_seed, 0);
  nn::FictitiousGanConfig base = ReadTrainConfig(p, 1000, /*dumps=*/false);
  const std::vector<std::int64_t> capacities = p.IntList("capacities", {1, 2, 3, 4, 5}, 1, 10000);
  const int seeds = static_cast<int>(p.Int("seeds", 5, 1, 1000));
  p.Finish();
  base.Validate();

  const int jobs = static_cast<int>(capacities.size()) * seeds;
  std::vector<nn::Coverage> cov(static_cast<std::size_t>(jobs));
  ParallelFor(jobs, [&](int j) {
    nn::FictitiousGanConfig c = WithSeed(base, seed + j % seeds);
    c.queue_capacity = static_cast<std::size_t>(capacities[static_cast<std::size_t>(j / seeds)]);
    cov[static_cast<std::size_t>(j)] = nn::TrainFictitiousGan(c).final_coverage;
  });

  ExperimentResult r;
  std::string runs_csv = "capacity,seed,covered_modes,hq_fraction\n";
  std::string median_csv = "capacity,median_covered_modes,median_hq_fraction\n";
  std::vector<double> caps, medians;
  bool nondecreasing = true;
  for (std::size_t k = 0; k < capacities.size(); ++k) {
    std::vector<int> covered;
    std::vector<double> hq;
    for (int s = 0; s < seeds; ++s) {
      const nn::Coverage& c = cov[k * static_cast<std::size_t>(seeds) + s];
      covered.push_back(c.covered_modes);
      hq.push_back(c.high_quality_fraction);
      runs_csv += fmt::format("{},{},{},{}\n", capacities[k], seed + s, c.covered_modes,
                              Num(c.high_quality_fraction));
    }
    const double m = Median(covered);
    if (!medians.empty() && m < medians.back()) nondecreasing = false;
    caps.push_back(static_cast<double>(capacities[k]));
    medians.push_back(m);
    median_csv += fmt::format("{},{},{}\n", capacities[k], Num(m), Num(Median(hq)));
    r.notes.push_back(fmt::format("capacity {}: median {} modes covered", capacities[k], m));
  }
  r.checks = {Check("queue_sweep_median_nondecreasing", nondecreasing ? 1.0 : 0.0)};
  r.files.push_back({"queue_sweep.csv", std::move(runs_csv)});
  r.files.push_back({"queue_sweep_median.csv", std::move(median_csv)});
  r.plots.push_back({"queue_sweep.svg", RenderSvg({"Coverage by queue capacity", "capacity",
                                                   "median covered modes"},
                                                  {Series{"median", caps, medians}})});
  r.notes.insert(r.notes.begin(), fmt::format("{} seeds from {}, {} outer iterations per run",
                                              seeds, seed, base.outer_iters));
  return r;
}

using Runner = ExperimentResult (*)(Params&, std::optional<std::uint64_t>);

struct Entry {
  std::string name;
  std::string description;
  Runner run;
};

const std::vector<Entry>& Entries() {
  static const std::vector<Entry> kEntries = {
      {"example1-br", "best-response training on Bernoulli data oscillates", RunExample1Br},
      {"example1-fp", "fictitious play on Bernoulli data converges", RunExample1Fp},
      {"example2-gda", "gradient descent-ascent on xy spirals outward", RunExample2Gda},
      {"example2-fp", "fictitious play on xy over [-10, 10]^2", RunExample2Fp},
      {"gan-discrete", "discrete fictitious GAN over random data distributions", RunGanDiscrete},
      {"fgan-table", "f-GAN fixed points at p_g = p_d", RunFganTable},
      {"gauss8", "neural fictitious GAN on the 8-mode ring", RunGauss8},
      {"gauss8-queue-sweep", "mode coverage across queue capacities", RunQueueSweep},
  };
  return kEntries;
}

const Entry& FindEntry(std::string_view name) {
  for (const Entry& e : Entries()) {
    if (e.name == name) return e;
  }
  throw ConfigError(fmt::format("unknown experiment '{}'", name));
}

std::string Observed(const CheckResult& c) {
  if (c.boolean) return c.observed != 0.0 ? "true" : "false";
  return fmt::format("{:.6g}", c.observed);
}

std::string Threshold(const CheckResult& c) {
  const std::string e = c.boolean ? (c.expected != 0.0 ? "true" : "false")
                                  : fmt::format("{:.6g}", c.expected);
  switch (c.comparison) {
    case Comparison::kWithin:
      return fmt::format("{} +/- {:.3g}", e, c.tolerance);
    case Comparison::kAtMost:
      return fmt::format("<= {:.6g}", c.expected + c.tolerance);
    case Comparison::kBelow:
      return fmt::format("< {:.6g}", c.expected + c.tolerance);
    case Comparison::kAtLeast:
      return fmt::format(">= {:.6g}", c.expected - c.tolerance);
    case Comparison::kEquals:
      return fmt::format("== {}", e);
    case Comparison::kRecorded:
      return fmt::format("recorded (expect {})", e);
  }
  return e;
}

}  // namespace

bool ExperimentResult::AllPass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const std::vector<std::string>& ExperimentNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const Entry& e : Entries()) names.push_back(e.name);
    return names;
  }();
  return kNames;
}

std::string_view ExperimentDescription(std::string_view name) {
  return FindEntry(name).description;
}

bool IsExperiment(std::string_view name) {
  return std::any_of(Entries().begin(), Entries().end(),
                     [&](const Entry& e) { return e.name == name; });
}

ConfigFile LoadConfigFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read config '{}'", path));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("malformed config '{}': {}", path, e.what()));
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ConfigFile cfg;
  if (!j.contains("params")) {
    cfg.params = std::move(j);
    return cfg;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "params") {
      if (!value.is_object()) throw ConfigError("params must be a JSON object");
      cfg.params = value;
    } else if (key == "experiment") {
      if (!value.is_string()) throw ConfigError("experiment must be a string");
      cfg.experiment = value.get<std::string>();
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw ConfigError("seed must be a nonnegative integer");
      cfg.seed = value.get<std::uint64_t>();
    } else if (key == "out") {
      if (!value.is_string()) throw ConfigError("out must be a string");
      cfg.out_dir = value.get<std::string>();
    } else {
      throw ConfigError(fmt::format("unknown config key '{}'", key));
    }
  }
  return cfg;
}

ExperimentResult RunExperiment(const ExperimentConfig& config) {
  const Entry& entry = FindEntry(config.name);
  Params params(entry.name, config.params);
  ExperimentResult result;
  try {
    result = entry.run(params, config.seed);
  } catch (const ConfigError&) {
    throw;
  } catch (const NumericalError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    // Library argument checks reject values the parameter reader let through.
    throw ConfigError(fmt::format("{}: {}", config.name, e.what()));
  }
  result.name = entry.name;
  result.params = params.resolved();
  return result;
}

json SummaryJson(const std::vector<CheckResult>& checks) {
  json s = json::object();
  for (const CheckResult& c : checks) {
    json e;
    e["expected"] = c.boolean ? json(c.expected != 0.0) : json(c.expected);
    if (c.boolean) {
      e["observed"] = c.observed != 0.0;
    } else if (std::isfinite(c.observed)) {
      e["observed"] = c.observed;
    } else {
      e["observed"] = nullptr;
    }
    e["tolerance"] = c.tolerance;
    e["comparison"] = std::string(ComparisonName(c.comparison));
    e["pass"] = c.pass;
    s[c.id] = std::move(e);
  }
  return s;
}

std::string RenderReport(const ExperimentResult& result) {
  std::string out = fmt::format("experiment: {}\nparameters: {}\n\nchecks:\n", result.name,
                                result.params.dump());
  std::size_t failed = 0;
  for (const CheckResult& c : result.checks) {
    failed += !c.pass;
    out += fmt::format("  {}  {:<34} observed {:<14} required {}\n", c.pass ? "PASS" : "FAIL",
                       c.id, Observed(c), Threshold(c));
  }
  if (!result.notes.empty()) {
    out += "\nnotes:\n";
    for (const std::string& n : result.notes) out += "  " + n + "\n";
  }
  out += failed == 0 ? "\nresult: all checks passed\n"
                     : fmt::format("\nresult: {} of {} checks failed\n", failed,
                                   result.checks.size());
  return out;
}

void WriteArtifacts(const ExperimentResult& result, const std::string& out_dir, bool svg) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw IoError(fmt::format("cannot create '{}': {}", out_dir, ec.message()));
  auto write = [&](const std::string& name, const std::string& content) {
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    out.close();
    if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  };
  for (const Artifact& a : result.files) write(a.filename, a.content);
  if (svg) {
    for (const Artifact& a : result.plots) write(a.filename, a.content);
  }
  write("report.txt", RenderReport(result));
  write("summary.json", SummaryJson(result.checks).dump(2) + "\n");
}

std::vector<CheckResult> VerifySummary(const std::string& out_dir) {
  const std::filesystem::path path = std::filesystem::path(out_dir) / "summary.json";
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read '{}'", path.string()));
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("malformed summary: {}", e.what()));
  }
  if (!j.is_object()) throw ConfigError("summary must be a JSON object");
  std::vector<CheckResult> out;
  for (const auto& [id, entry] : j.items()) {
    if (!entry.is_object() || !entry.contains("observed")) {
      throw ConfigError(fmt::format("summary entry '{}' has no observation", id));
    }
    const json& obs = entry["observed"];
    double value;
    if (obs.is_boolean()) {
      value = obs.get<bool>() ? 1.0 : 0.0;
    } else if (obs.is_number()) {
      value = obs.get<double>();
    } else if (obs.is_null()) {
      value = std::numeric_limits<double>::quiet_NaN();
    } else {
      throw ConfigError(fmt::format("summary entry '{}' has a malformed observation", id));
    }
    try {
      out.push_back(Check(id, value));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  return out;
}

int WorkerCount(int jobs) {
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("MINIMAX_LAB_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) {
      throw ConfigError(fmt::format("MINIMAX_LAB_THREADS must be a positive integer, got '{}'",
                                    env));
    }
    workers = static_cast<int>(std::min<long>(v, 1024));
  }
  return std::max(1, std::min(workers, jobs));
}

void ParallelFor(int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 0) return;
  const int workers = WorkerCount(jobs);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex mu;
  auto work = [&] {
    for (int j = next++; j < jobs; j = next++) {
      {
        std::lock_guard<std::mutex> lock(mu);
        if (error) return;
      }
      try {
        fn(j);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace minimax::experiments
