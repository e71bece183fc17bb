#include "cdquench/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "json.hpp"

namespace cdq {

int count_kinks(const std::string& bits, const LatticeGraph& graph) {
  if (static_cast<int>(bits.size()) != graph.n_sites)
    throw std::invalid_argument("count_kinks: bitstring length mismatch");
  int kinks = 0;
  for (const auto& [i, j] : graph.edges) kinks += bits[i] != bits[j];
  return kinks;
}

namespace {

struct Moments {
  double kappa1, kappa2, kappa3;
};

// Biased central moments of the defect density, scaled per the cumulant
// definitions (kappa2 by N_e, kappa3 by N_e^2).
Moments moments_of(const std::vector<int>& kink_counts, int n_e) {
  const double n = static_cast<double>(kink_counts.size());
  double mean = 0.0;
  for (int k : kink_counts) mean += k;
  mean /= n * n_e;
  double m2 = 0.0, m3 = 0.0;
  for (int k : kink_counts) {
    const double d = static_cast<double>(k) / n_e - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  return {mean, n_e * m2, static_cast<double>(n_e) * n_e * m3};
}

}  // namespace

std::vector<std::pair<double, std::int64_t>> histogram(
    const std::vector<std::string>& bitstrings, const LatticeGraph& graph) {
  if (bitstrings.empty()) throw std::invalid_argument("histogram: empty sample list");
  const int n_e = graph.n_edges();
  std::vector<std::int64_t> counts(n_e + 1, 0);
  for (const auto& bits : bitstrings) ++counts[count_kinks(bits, graph)];
  std::vector<std::pair<double, std::int64_t>> bins;
  bins.reserve(n_e + 1);
  for (int k = 0; k <= n_e; ++k)
    bins.emplace_back(static_cast<double>(k) / n_e, counts[k]);
  return bins;
}

DefectStats cumulants_from_samples(const std::vector<std::string>& bitstrings,
                                   const LatticeGraph& graph,
                                   std::uint64_t bootstrap_seed) {
  if (bitstrings.empty())
    throw std::invalid_argument("cumulants_from_samples: empty sample list");
  const int n_e = graph.n_edges();
  std::vector<int> kinks;
  kinks.reserve(bitstrings.size());
  for (const auto& bits : bitstrings) kinks.push_back(count_kinks(bits, graph));

  const Moments m = moments_of(kinks, n_e);

  constexpr int kResamples = 200;
  std::mt19937_64 rng(bootstrap_seed);
  double s1 = 0, s2 = 0, s3 = 0, q1 = 0, q2 = 0, q3 = 0;
  std::vector<int> resample(kinks.size());
  for (int r = 0; r < kResamples; ++r) {
    for (auto& k : resample) k = kinks[rng() % kinks.size()];
    const Moments mr = moments_of(resample, n_e);
    s1 += mr.kappa1;
    s2 += mr.kappa2;
    s3 += mr.kappa3;
    q1 += mr.kappa1 * mr.kappa1;
    q2 += mr.kappa2 * mr.kappa2;
    q3 += mr.kappa3 * mr.kappa3;
  }
  auto se = [&](double s, double q) {
    const double var = q / kResamples - (s / kResamples) * (s / kResamples);
    return std::sqrt(std::max(0.0, var));
  };

  DefectStats stats;
  stats.kappa1 = m.kappa1;
  stats.kappa2 = m.kappa2;
  stats.kappa3 = m.kappa3;
  stats.se1 = se(s1, q1);
  stats.se2 = se(s2, q2);
  stats.se3 = se(s3, q3);
  stats.histogram = histogram(bitstrings, graph);
  stats.n_e = n_e;
  stats.shots = static_cast<std::int64_t>(bitstrings.size());
  return stats;
}

DefectStats cumulants_from_pmf(const std::vector<double>& pmf, int n_e) {
  if (pmf.empty() || n_e < 1) throw std::invalid_argument("cumulants_from_pmf: bad input");
  double mean = 0.0;
  for (size_t k = 0; k < pmf.size(); ++k) mean += static_cast<double>(k) / n_e * pmf[k];
  double m2 = 0.0, m3 = 0.0;
  for (size_t k = 0; k < pmf.size(); ++k) {
    const double d = static_cast<double>(k) / n_e - mean;
    m2 += d * d * pmf[k];
    m3 += d * d * d * pmf[k];
  }
  DefectStats stats;
  stats.kappa1 = mean;
  stats.kappa2 = n_e * m2;
  stats.kappa3 = static_cast<double>(n_e) * n_e * m3;
  stats.n_e = n_e;
  return stats;
}

double NormalReference::operator()(double density) const {
  const double d = density - mean;
  return std::exp(-d * d / (2.0 * variance)) / std::sqrt(2.0 * std::numbers::pi * variance);
}

NormalReference normal_reference(int n_e) {
  if (n_e < 1) throw std::invalid_argument("normal_reference: n_e must be positive");
  return {0.5, 1.0 / (4.0 * n_e)};
}

std::string stats_to_json(const DefectStats& stats) {
  nlohmann::json doc;
  doc["kappa1"] = stats.kappa1;
  doc["kappa2"] = stats.kappa2;
  doc["kappa3"] = stats.kappa3;
  doc["se1"] = stats.se1;
  doc["se2"] = stats.se2;
  doc["se3"] = stats.se3;
  doc["n_e"] = stats.n_e;
  doc["shots"] = stats.shots;
  doc["histogram"] = nlohmann::json::array();
  for (const auto& [center, count] : stats.histogram)
    doc["histogram"].push_back({center, count});
  return doc.dump();
}

}  // namespace cdq
