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

#include "minimax/gan_discrete.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include <fmt/ostream.h>

namespace minimax {
namespace {

std::vector<std::int64_t> DefaultSupport(std::size_t size) {
  std::vector<std::int64_t> support(size);
  std::iota(support.begin(), support.end(), 0);
  return support;
}

void RequireSameSupport(const CategoricalDist& a, const CategoricalDist& b) {
  if (!a.SameSupport(b)) throw std::invalid_argument("distributions differ in support");
}

double ClampD(double v) {
  return std::clamp(v, kDiscriminatorClamp, 1.0 - kDiscriminatorClamp);
}

// p log(p / m) with the 0 log 0 = 0 convention.
double KlTerm(double p, double m) { return p > 0.0 ? p * std::log(p / m) : 0.0; }

}  // namespace

CategoricalDist::CategoricalDist(std::vector<double> pmf)
    : CategoricalDist(DefaultSupport(pmf.size()), pmf) {}

CategoricalDist::CategoricalDist(std::vector<std::int64_t> support,
                                 std::vector<double> pmf)
    : support_(std::move(support)), pmf_(std::move(pmf)) {
  if (pmf_.empty()) throw std::invalid_argument("empty distribution");
  if (support_.size() != pmf_.size()) {
    throw std::invalid_argument("support and pmf sizes differ");
  }
  std::vector<std::int64_t> sorted = support_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("support labels must be distinct");
  }
  double sum = 0.0;
  for (double p : pmf_) {
    if (!std::isfinite(p) || p < 0.0) throw std::invalid_argument("pmf weight must be >= 0");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw std::invalid_argument("pmf sums to " + std::to_string(sum));
  }
}

CategoricalDist CategoricalDist::Delta(std::size_t size, std::size_t index) {
  if (index >= size) throw std::invalid_argument("delta index out of range");
  std::vector<double> pmf(size, 0.0);
  pmf[index] = 1.0;
  return CategoricalDist(std::move(pmf));
}

CategoricalDist CategoricalDist::Bernoulli(double p_one) {
  return CategoricalDist({1.0 - p_one, p_one});
}

CategoricalDist CategoricalDist::Uniform(std::size_t size) {
  return CategoricalDist(std::vector<double>(size, 1.0 / static_cast<double>(size)));
}

CategoricalDist CategoricalDist::RandomSimplex(std::size_t size, std::mt19937_64& rng) {
  std::exponential_distribution<double> gamma1(1.0);
  std::vector<double> w(size);
  for (double& v : w) v = gamma1(rng);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= total;
  return CategoricalDist(std::move(w));
}

DiscriminatorTable::DiscriminatorTable(std::vector<std::int64_t> support,
                                       std::span<const double> values)
    : support_(std::move(support)), values_(values.begin(), values.end()) {
  if (support_.size() != values_.size()) {
    throw std::invalid_argument("support and discriminator sizes differ");
  }
  for (double& v : values_) {
    if (std::isnan(v)) throw std::invalid_argument("NaN discriminator value");
    v = ClampD(v);
  }
}

DiscriminatorTable DiscriminatorTable::Constant(const CategoricalDist& like,
                                                double value) {
  const std::vector<double> values(like.size(), value);
  return DiscriminatorTable(like.support(), values);
}

double GanValue(const CategoricalDist& p_d, const CategoricalDist& p_g,
                const DiscriminatorTable& d) {
  RequireSameSupport(p_d, p_g);
  if (d.support() != p_d.support()) {
    throw std::invalid_argument("discriminator support differs");
  }
  double value = 0.0;
  for (std::size_t i = 0; i < p_d.size(); ++i) {
    value += p_d[i] * std::log(d[i]) + p_g[i] * std::log1p(-d[i]);
  }
  return value;
}

std::vector<double> OptimalDiscriminatorValues(const CategoricalDist& p_d,
                                               const CategoricalDist& p_g) {
  RequireSameSupport(p_d, p_g);
  std::vector<double> d(p_d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double denom = p_d[i] + p_g[i];
    d[i] = denom > 0.0 ? p_d[i] / denom : 0.5;
  }
  return d;
}

DiscriminatorTable OptimalDiscriminator(const CategoricalDist& p_d,
                                        const CategoricalDist& p_g) {
  return DiscriminatorTable(p_d.support(), OptimalDiscriminatorValues(p_d, p_g));
}

double GanValueAtOptimum(const CategoricalDist& p_d, const CategoricalDist& p_g) {
  const std::vector<double> d = OptimalDiscriminatorValues(p_d, p_g);
  double value = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (p_d[i] > 0.0) value += p_d[i] * std::log(d[i]);
    if (p_g[i] > 0.0) value += p_g[i] * std::log1p(-d[i]);
  }
  return value;
}

CategoricalDist GeneratorBestResponse(const DiscriminatorTable& d) {
  const auto values = d.values();
  const auto best = std::max_element(values.begin(), values.end());
  std::vector<double> pmf(values.size(), 0.0);
  pmf[static_cast<std::size_t>(best - values.begin())] = 1.0;
  return CategoricalDist(d.support(), std::move(pmf));
}

double Jsd(const CategoricalDist& p, const CategoricalDist& q) {
  RequireSameSupport(p, q);
  double total = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    total += 0.5 * KlTerm(p[i], m) + 0.5 * KlTerm(q[i], m);
  }
  return std::max(total, 0.0);
}

BestResponseTrace RunBestResponseGan(const CategoricalDist& p_d,
                                     const CategoricalDist& init_pg,
                                     std::int64_t n_iters) {
  if (n_iters < 2) throw std::invalid_argument("n_iters must be >= 2");
  RequireSameSupport(p_d, init_pg);
  BestResponseTrace trace;
  trace.generators.push_back(init_pg);
  for (std::int64_t k = 1; k < n_iters; ++k) {
    trace.discriminators.push_back(OptimalDiscriminator(p_d, trace.generators.back()));
    trace.generators.push_back(GeneratorBestResponse(trace.discriminators.back()));
  }
  return trace;
}

FictitiousGanTrace RunFictitiousGanDiscrete(const CategoricalDist& p_d,
                                            const CategoricalDist& init_pg,
                                            const DiscriminatorTable& init_d,
                                            std::int64_t n_iters) {
  if (n_iters < 1) throw std::invalid_argument("n_iters must be >= 1");
  RequireSameSupport(p_d, init_pg);
  if (init_d.support() != p_d.support()) {
    throw std::invalid_argument("initial discriminator support differs");
  }
  const std::size_t k = p_d.size();
  std::vector<double> pg_sum(init_pg.pmf().begin(), init_pg.pmf().end());
  // sum_w log(1 - D_w(x)); the generator minimizes it.
  std::vector<double> log1m_sum(k);
  for (std::size_t i = 0; i < k; ++i) log1m_sum[i] = std::log1p(-init_d[i]);

  FictitiousGanTrace trace;
  trace.records.reserve(static_cast<std::size_t>(n_iters));
  for (std::int64_t n = 1; n <= n_iters; ++n) {
    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<double> pbar(k);
    for (std::size_t i = 0; i < k; ++i) pbar[i] = pg_sum[i] * inv_n;
    // Rounding can push the mean a few ulps off the simplex; renormalize.
    const double mass = std::accumulate(pbar.begin(), pbar.end(), 0.0);
    for (double& v : pbar) v /= mass;
    const CategoricalDist pbar_dist(p_d.support(), pbar);
    const DiscriminatorTable d_n = OptimalDiscriminator(p_d, pbar_dist);

    const auto best = std::min_element(log1m_sum.begin(), log1m_sum.end());
    const auto x = static_cast<std::size_t>(best - log1m_sum.begin());

    FictitiousGanRecord rec;
    rec.n = n;
    rec.pg.assign(k, 0.0);
    rec.pg[x] = 1.0;
    rec.pbar = pbar;
    rec.d.assign(d_n.values().begin(), d_n.values().end());
    rec.value = GanValueAtOptimum(p_d, pbar_dist);
    rec.jsd = Jsd(pbar_dist, p_d);
    trace.records.push_back(std::move(rec));

    pg_sum[x] += 1.0;
    for (std::size_t i = 0; i < k; ++i) log1m_sum[i] += std::log1p(-d_n[i]);
  }
  return trace;
}

void WriteFictitiousGanCsv(std::ostream& out, const FictitiousGanTrace& trace) {
  const std::size_t k = trace.records.empty() ? 0 : trace.records.front().pbar.size();
  out << "n";
  for (std::size_t i = 0; i < k; ++i) fmt::print(out, ",pbar_g_{}", i);
  for (std::size_t i = 0; i < k; ++i) fmt::print(out, ",D_{}", i);
  out << ",V,JSD\n";
  for (const FictitiousGanRecord& r : trace.records) {
    out << r.n;
    for (double v : r.pbar) fmt::print(out, ",{}", v);
    for (double v : r.d) fmt::print(out, ",{}", v);
    fmt::print(out, ",{},{}\n", r.value, r.jsd);
  }
}

}  // namespace minimax
