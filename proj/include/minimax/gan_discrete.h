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

#ifndef MINIMAX_GAN_DISCRETE_H_
#define MINIMAX_GAN_DISCRETE_H_

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <random>
#include <span>
#include <vector>

namespace minimax {

// Clamp applied to discriminator outputs before any log is taken.
inline constexpr double kDiscriminatorClamp = 1e-7;

// Probability mass function over a finite support of integer labels.
class CategoricalDist {
 public:
  static constexpr double kSumTolerance = 1e-12;

  // Labels default to 0 .. pmf.size() - 1.
  explicit CategoricalDist(std::vector<double> pmf);
  CategoricalDist(std::vector<std::int64_t> support, std::vector<double> pmf);

  static CategoricalDist Delta(std::size_t size, std::size_t index);
  static CategoricalDist Bernoulli(double p_one);
  static CategoricalDist Uniform(std::size_t size);
  // Dirichlet(1, ..., 1) draw.
  static CategoricalDist RandomSimplex(std::size_t size, std::mt19937_64& rng);

  std::size_t size() const { return pmf_.size(); }
  double operator[](std::size_t i) const { return pmf_[i]; }
  std::span<const double> pmf() const { return pmf_; }
  const std::vector<std::int64_t>& support() const { return support_; }

  bool SameSupport(const CategoricalDist& other) const {
    return support_ == other.support_;
  }

 private:
  std::vector<std::int64_t> support_;
  std::vector<double> pmf_;
};

// D(x) per support label, clamped into [kDiscriminatorClamp,
// 1 - kDiscriminatorClamp] on construction.
class DiscriminatorTable {
 public:
  DiscriminatorTable(std::vector<std::int64_t> support, std::span<const double> values);
  static DiscriminatorTable Constant(const CategoricalDist& like, double value);

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  const std::vector<std::int64_t>& support() const { return support_; }

 private:
  std::vector<std::int64_t> support_;
  std::vector<double> values_;
};

// sum_x p_d(x) log D(x) + sum_x p_g(x) log(1 - D(x)), D post-clamp.
double GanValue(const CategoricalDist& p_d, const CategoricalDist& p_g,
                const DiscriminatorTable& d);

// p_d / (p_d + p_g) without clamping; 1/2 where both masses vanish.
std::vector<double> OptimalDiscriminatorValues(const CategoricalDist& p_d,
                                               const CategoricalDist& p_g);
DiscriminatorTable OptimalDiscriminator(const CategoricalDist& p_d,
                                        const CategoricalDist& p_g);

// V(p_g, D*) at the unclamped optimal discriminator, with 0 log 0 = 0.
double GanValueAtOptimum(const CategoricalDist& p_d, const CategoricalDist& p_g);

// Delta at the label where log(1 - D) is smallest, i.e. where D is largest.
// Ties go to the lowest index.
CategoricalDist GeneratorBestResponse(const DiscriminatorTable& d);

// Jensen-Shannon divergence in nats.
double Jsd(const CategoricalDist& p, const CategoricalDist& q);

struct BestResponseTrace {
  // generators[0] is the initial distribution; generators[k] answers
  // discriminators[k - 1] = D*(p_d, generators[k - 1]).
  std::vector<CategoricalDist> generators;
  std::vector<DiscriminatorTable> discriminators;
};

BestResponseTrace RunBestResponseGan(const CategoricalDist& p_d,
                                     const CategoricalDist& init_pg,
                                     std::int64_t n_iters);

struct FictitiousGanRecord {
  std::int64_t n = 0;
  std::vector<double> pg;    // p_{g,n}
  std::vector<double> pbar;  // mean of p_{g,0} .. p_{g,n-1}
  std::vector<double> d;     // D_n, post-clamp
  double value = 0.0;        // V(pbar, D_n), unclamped D_n, 0 log 0 = 0
  double jsd = 0.0;          // JSD(pbar || p_d)
};

struct FictitiousGanTrace {
  std::vector<FictitiousGanRecord> records;  // n = 1 .. n_iters

  const FictitiousGanRecord& back() const { return records.back(); }
};

// Discrete fictitious GAN with exact best responses. At round n the
// discriminator answers the running mean of all earlier generators and the
// generator answers the average of log(1 - D_w) over all earlier
// discriminators (init_d included as D_0).
FictitiousGanTrace RunFictitiousGanDiscrete(const CategoricalDist& p_d,
                                            const CategoricalDist& init_pg,
                                            const DiscriminatorTable& init_d,
                                            std::int64_t n_iters);

// n, pbar_g_*, D_*, V, JSD
void WriteFictitiousGanCsv(std::ostream& out, const FictitiousGanTrace& trace);

}  // namespace minimax

#endif  // MINIMAX_GAN_DISCRETE_H_
