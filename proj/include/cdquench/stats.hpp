#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cdquench/lattice.hpp"

namespace cdq {

/// Defect-density statistics in the paper's convention:
/// kappa1 = <n>, kappa2 = N_e Var(n), kappa3 = N_e^2 <(n - <n>)^3>
/// with n = (kink count) / N_e per sample. Biased (plain) central moments.
struct DefectStats {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double kappa3 = 0.0;
  double se1 = 0.0, se2 = 0.0, se3 = 0.0;  // bootstrap standard errors
  std::vector<std::pair<double, std::int64_t>> histogram;  // (bin center in density, count)
  int n_e = 0;
  std::int64_t shots = 0;
};

int count_kinks(const std::string& bits, const LatticeGraph& graph);

/// Bootstrap uses 200 seeded resamples.
DefectStats cumulants_from_samples(const std::vector<std::string>& bitstrings,
                                   const LatticeGraph& graph,
                                   std::uint64_t bootstrap_seed = 12345);

/// Bins of width 1/N_e centered on the attainable densities k/N_e, k = 0..N_e.
std::vector<std::pair<double, std::int64_t>> histogram(
    const std::vector<std::string>& bitstrings, const LatticeGraph& graph);

/// Cumulants from an exact PMF over kink counts (index = kink count).
/// Standard errors are zero; histogram is omitted.
DefectStats cumulants_from_pmf(const std::vector<double>& pmf, int n_e);

/// Initial-state infinite-size reference: Gaussian in defect density with
/// mean 1/2 and variance 1/(4 N_e).
struct NormalReference {
  double mean;
  double variance;

  double operator()(double density) const;  // probability density
};

NormalReference normal_reference(int n_e);

std::string stats_to_json(const DefectStats& stats);

}  // namespace cdq
