#include "cdquench/exact1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cdq {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSuddenThreshold = 1e-3;  // T below this (in 1/J) is analytic

}  // namespace

ModeGrid make_mode_grid(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("mode grid: n must be even and >= 4");
  ModeGrid grid;
  grid.n_sites = n;
  grid.momenta.reserve(n / 2);
  for (int m = 1; m <= n / 2; ++m) grid.momenta.push_back((2.0 * m - 1.0) * kPi / n);
  return grid;
}

double ModeState::norm2() const { return std::norm(phi1) + std::norm(phi2); }

namespace {

// Right-hand side of i d/dt psi = (H_k + cd h_k Y) psi, i.e. dpsi/dt = -i M psi.
// H_k = 2[(1-l)g - lJ cos k] Z + 2 l J sin k X, h_k Y with
// h_k = lambda_dot g J sin k / (2 [l^2 J^2 + (1-l)^2 g^2]).
struct ModeRhs {
  double g, J, T, k;
  bool cd;
  double cos_k, sin_k;

  ModeRhs(double g_, double J_, double T_, double k_, bool cd_)
      : g(g_), J(J_), T(T_), k(k_), cd(cd_), cos_k(std::cos(k_)), sin_k(std::sin(k_)) {}

  ModeState operator()(double t, const ModeState& s) const {
    const double l = t / T;
    const double hz = 2.0 * ((1.0 - l) * g - l * J * cos_k);
    const double hx = 2.0 * l * J * sin_k;
    double hy = 0.0;
    if (cd) {
      const double denom = l * l * J * J + (1.0 - l) * (1.0 - l) * g * g;
      hy = (1.0 / T) * g * J * sin_k / (2.0 * denom);
    }
    // M = hz Z + hx X + hy Y; dpsi/dt = -i M psi.
    const std::complex<double> m11(hz, 0), m12(hx, -hy), m21(hx, hy), m22(-hz, 0);
    const std::complex<double> minus_i(0, -1);
    ModeState d;
    d.phi1 = minus_i * (m11 * s.phi1 + m12 * s.phi2);
    d.phi2 = minus_i * (m21 * s.phi1 + m22 * s.phi2);
    return d;
  }
};

ModeState axpy(const ModeState& a, double c, const ModeState& b) {
  return {a.phi1 + c * b.phi1, a.phi2 + c * b.phi2};
}

}  // namespace

ModeState evolve_mode(double k, const QuenchConfig& cfg, bool with_cd) {
  if (k <= 0.0 || k >= kPi) throw std::invalid_argument("evolve_mode: k must be in (0, pi)");
  if (cfg.T <= 0.0)
    throw std::invalid_argument("evolve_mode: T must be positive; use sudden_pk_* for T = 0");
  const ModeRhs rhs(cfg.g, cfg.J, cfg.T, k, with_cd);
  const int n_int = std::max(2000, static_cast<int>(std::ceil(40.0 * cfg.T * cfg.J)));
  const double h = cfg.T / n_int;
  ModeState s;  // (0, 1)
  for (int i = 0; i < n_int; ++i) {
    const double t = i * h;
    const ModeState k1 = rhs(t, s);
    const ModeState k2 = rhs(t + 0.5 * h, axpy(s, 0.5 * h, k1));
    const ModeState k3 = rhs(t + 0.5 * h, axpy(s, 0.5 * h, k2));
    const ModeState k4 = rhs(t + h, axpy(s, h, k3));
    s.phi1 += (h / 6.0) * (k1.phi1 + 2.0 * k2.phi1 + 2.0 * k3.phi1 + k4.phi1);
    s.phi2 += (h / 6.0) * (k1.phi2 + 2.0 * k2.phi2 + 2.0 * k3.phi2 + k4.phi2);
  }
  return s;
}

double excitation_probability(double k, const ModeState& state) {
  const double p = std::norm(std::sin(k / 2.0) * state.phi1 + std::cos(k / 2.0) * state.phi2);
  return std::clamp(p, 0.0, 1.0);
}

double sudden_pk_nocd(double k) {
  const double c = std::cos(k / 2.0);
  return c * c;
}

double sudden_pk_cd(double k, double g, double J) {
  if (std::abs(g - J) > 1e-12)
    throw std::invalid_argument("sudden_pk_cd: closed form requires g = J");
  const double theta = (kPi / 4.0) * std::sin(k);
  const double c2 = std::cos(k / 2.0) * std::cos(k / 2.0);
  const double s2 = std::sin(k / 2.0) * std::sin(k / 2.0);
  const double p = c2 * std::cos(theta) * std::cos(theta) +
                   s2 * std::sin(theta) * std::sin(theta) -
                   0.5 * std::sin(k) * std::sin(2.0 * theta);
  return std::clamp(p, 0.0, 1.0);
}

ExcitationProfile quench_profile(int n, const QuenchConfig& cfg, bool with_cd) {
  ExcitationProfile profile;
  profile.grid = make_mode_grid(n);
  profile.probabilities.reserve(profile.grid.momenta.size());
  const bool sudden = cfg.T < kSuddenThreshold / cfg.J;
  for (double k : profile.grid.momenta) {
    double p;
    if (sudden) {
      p = with_cd ? sudden_pk_cd(k, cfg.g, cfg.J) : sudden_pk_nocd(k);
    } else {
      p = excitation_probability(k, evolve_mode(k, cfg, with_cd));
    }
    profile.probabilities.push_back(p);
  }
  return profile;
}

Cumulants cumulants_from_profile(const ExcitationProfile& profile,
                                 CumulantConvention convention) {
  const double w = convention == CumulantConvention::pair ? 2.0 : 1.0;
  Cumulants c;
  // Fixed ascending-k summation order for bit-reproducibility.
  for (double p : profile.probabilities) {
    c.kappa1 += w * p;
    c.kappa2 += w * w * p * (1.0 - p);
    c.kappa3 += w * w * w * p * (1.0 - p) * (1.0 - 2.0 * p);
  }
  return c;
}

Cumulants density_cumulants(const Cumulants& raw, int n_sites) {
  const double n = n_sites;
  return {raw.kappa1 / n, raw.kappa2 / n, raw.kappa3 / n};
}

std::vector<double> kink_distribution(const ExcitationProfile& profile) {
  const int n = profile.grid.n_sites;
  std::vector<double> pmf(n + 1, 0.0);
  pmf[0] = 1.0;
  int reach = 0;
  for (double p : profile.probabilities) {
    for (int c = reach; c >= 0; --c) {
      const double mass = pmf[c];
      pmf[c] = mass * (1.0 - p);
      pmf[c + 2] += mass * p;
    }
    reach += 2;
  }
  return pmf;
}

Cumulants cumulants_from_pmf(const std::vector<double>& pmf) {
  double mean = 0.0;
  for (size_t c = 0; c < pmf.size(); ++c) mean += static_cast<double>(c) * pmf[c];
  double m2 = 0.0, m3 = 0.0;
  for (size_t c = 0; c < pmf.size(); ++c) {
    const double d = static_cast<double>(c) - mean;
    m2 += d * d * pmf[c];
    m3 += d * d * d * pmf[c];
  }
  return {mean, m2, m3};
}

}  // namespace cdq
