#pragma once

#include <complex>
#include <vector>

#include "cdquench/quench.hpp"

namespace cdq {

/// Momenta of the even-fermion-parity sector of the periodic 1D chain:
/// k = (2m-1) pi / N for m = 1..N/2, all in (0, pi), spacing 2 pi / N.
struct ModeGrid {
  int n_sites = 0;
  std::vector<double> momenta;
};

ModeGrid make_mode_grid(int n);  // n even, >= 4

/// Two-level mode state (phi1, phi2); |phi1|^2 + |phi2|^2 = 1.
struct ModeState {
  std::complex<double> phi1{0.0, 0.0};
  std::complex<double> phi2{1.0, 0.0};

  double norm2() const;
};

/// Integrates i d/dt psi = (H_k + [cd] h_k Y) psi from (0,1) at t=0 to t=T
/// with lambda(t) = t/T, by fixed-step RK4 with
/// n >= max(2000, ceil(40 T J)) substeps.
/// H_k = 2[(1-lambda) g - lambda J cos k] Z + 2 lambda J sin k X,
/// h_k = lambda_dot g J sin k / (2 [lambda^2 J^2 + (1-lambda)^2 g^2]).
/// Throws std::invalid_argument for T <= 0 (use the sudden_pk_* formulas).
ModeState evolve_mode(double k, const QuenchConfig& cfg, bool with_cd);

/// p_k = |sin(k/2) phi1(T) + cos(k/2) phi2(T)|^2.
double excitation_probability(double k, const ModeState& state);

/// Sudden-quench limits: without CD the state freezes, p_k = cos^2(k/2).
double sudden_pk_nocd(double k);

/// With CD (valid for g = J): using integral of h_k dt = (pi/4) sin k,
/// p_k = cos^2(k/2) cos^2((pi/4) sin k) + sin^2(k/2) sin^2((pi/4) sin k)
///       - (1/2) sin k sin((pi/2) sin k).
/// Throws std::invalid_argument when g != J.
double sudden_pk_cd(double k, double g = 1.0, double J = 1.0);

struct ExcitationProfile {
  ModeGrid grid;
  std::vector<double> probabilities;
};

/// Full mode sweep. T below 1e-3/J routes to the analytic sudden formulas.
ExcitationProfile quench_profile(int n, const QuenchConfig& cfg, bool with_cd);

/// Each excited (k,-k) pair carries two kinks, so per-mode contributions are
/// (2p, 4p(1-p), 8p(1-p)(1-2p)). The literal single-kink-per-mode convention
/// is kept behind a flag for comparison; it does not reproduce the
/// initial-state plateau kappa2 = N/4.
enum class CumulantConvention { pair, literal };

struct Cumulants {
  double kappa1 = 0.0;  // kink-number units
  double kappa2 = 0.0;
  double kappa3 = 0.0;
};

Cumulants cumulants_from_profile(const ExcitationProfile& profile,
                                 CumulantConvention convention = CumulantConvention::pair);

/// Density convention: all three divided by N (N_e = N for periodic
/// boundaries, and the N_e / N_e^2 rescalings of kappa2 / kappa3 reduce to 1/N).
Cumulants density_cumulants(const Cumulants& raw, int n_sites);

/// Exact kink-number PMF of the pair model: independent modes, each
/// contributing 2 kinks with probability p_k. Support = even counts in [0, N].
std::vector<double> kink_distribution(const ExcitationProfile& profile);

Cumulants cumulants_from_pmf(const std::vector<double>& pmf);

}  // namespace cdq
