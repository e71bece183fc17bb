#include "doctest.h"

#include <stdexcept>

#include <cmath>
#include <numbers>

#include "cdquench/exact1d.hpp"

using namespace cdq;

namespace {

constexpr double kPi = std::numbers::pi;

QuenchConfig cfg_for(double T) {
  QuenchConfig cfg;
  cfg.g = cfg.J = 1.0;
  cfg.T = T;
  cfg.steps = 1;
  cfg.dt = T;
  return cfg;
}

}  // namespace

TEST_CASE("mode grid") {
  const auto grid = make_mode_grid(8);
  REQUIRE(grid.momenta.size() == 4);
  CHECK(grid.momenta.front() == doctest::Approx(kPi / 8));
  CHECK(grid.momenta.back() == doctest::Approx(kPi - kPi / 8));
  for (size_t i = 0; i < grid.momenta.size(); ++i) {
    CHECK(grid.momenta[i] > 0.0);
    CHECK(grid.momenta[i] < kPi);
    if (i > 0)
      CHECK(grid.momenta[i] - grid.momenta[i - 1] == doctest::Approx(2 * kPi / 8));
  }
  CHECK_THROWS_AS(make_mode_grid(7), std::invalid_argument);
  CHECK_THROWS_AS(make_mode_grid(2), std::invalid_argument);
}

TEST_CASE("excitation probability fixed points") {
  ModeState ground;  // (0, 1)
  CHECK(excitation_probability(kPi, ground) == doctest::Approx(0.0));
  for (double k : {0.3, 1.1, 2.7})
    CHECK(excitation_probability(k, ground) ==
          doctest::Approx(std::cos(k / 2) * std::cos(k / 2)));
  ModeState excited{{1, 0}, {0, 0}};
  CHECK(excitation_probability(kPi, excited) == doctest::Approx(1.0));
}

TEST_CASE("mode evolution conserves the norm") {
  for (double T : {0.05, 0.5, 2.0})
    for (double k : {0.2, kPi / 2, 3.0})
      for (bool cd : {false, true}) {
        const auto s = evolve_mode(k, cfg_for(T), cd);
        CHECK(s.norm2() == doctest::Approx(1.0).epsilon(1e-10));
      }
  CHECK_THROWS_AS(evolve_mode(kPi / 2, cfg_for(-1.0), false), std::invalid_argument);
  CHECK_THROWS_AS(evolve_mode(-0.1, cfg_for(1.0), false), std::invalid_argument);
}

TEST_CASE("adiabatic and sudden limits without CD") {
  // near-adiabatic: excitations suppressed
  for (double k : {kPi / 4, kPi / 2, 3 * kPi / 4}) {
    const auto s = evolve_mode(k, cfg_for(100.0), false);
    CHECK(excitation_probability(k, s) < 1e-2);
  }
  // near-sudden: p_k -> cos^2(k/2)
  const auto s = evolve_mode(kPi / 2, cfg_for(0.01), false);
  CHECK(excitation_probability(kPi / 2, s) == doctest::Approx(0.5).epsilon(2e-3));
}

TEST_CASE("monotone adiabaticity without CD") {
  for (double k : {kPi / 3, kPi / 2, 2 * kPi / 3}) {
    double prev = 2.0;
    for (double T : {0.1, 1.0, 10.0}) {
      const double p = excitation_probability(k, evolve_mode(k, cfg_for(T), false));
      CHECK(p < prev);
      prev = p;
    }
  }
}

TEST_CASE("sudden CD closed form") {
  CHECK(sudden_pk_cd(kPi / 2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(sudden_pk_cd(1e-6) == doctest::Approx(1.0).epsilon(1e-5));
  CHECK_THROWS_AS(sudden_pk_cd(kPi / 2, 1.0, 2.0), std::invalid_argument);

  // numerical-limit cross-check against the integrated CD dynamics
  const auto grid = make_mode_grid(32);
  for (double k : grid.momenta) {
    const double integrated =
        excitation_probability(k, evolve_mode(k, cfg_for(1e-3), true));
    CHECK(std::abs(integrated - sudden_pk_cd(k)) <= 1e-2);
  }
}

TEST_CASE("cumulants of the frozen no-CD profile") {
  const int n = 1000;
  ExcitationProfile profile;
  profile.grid = make_mode_grid(n);
  for (double k : profile.grid.momenta) profile.probabilities.push_back(sudden_pk_nocd(k));
  const auto c = density_cumulants(cumulants_from_profile(profile), n);
  CHECK(c.kappa1 == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(c.kappa2 == doctest::Approx(0.25).epsilon(1e-6));
  CHECK(std::abs(c.kappa3) < 1e-6);
}

TEST_CASE("cumulants of the sudden CD profile") {
  const int n = 1000;
  ExcitationProfile profile;
  profile.grid = make_mode_grid(n);
  for (double k : profile.grid.momenta) profile.probabilities.push_back(sudden_pk_cd(k));
  const auto c = density_cumulants(cumulants_from_profile(profile), n);
  CHECK(c.kappa1 == doctest::Approx(0.22).epsilon(0.05));
  CHECK(c.kappa3 == doctest::Approx(0.04).epsilon(0.25));
  CHECK(c.kappa2 > 0.12);
  CHECK(c.kappa2 < 0.15);
}

TEST_CASE("all-zero profile gives zero cumulants and a point mass") {
  ExcitationProfile profile;
  profile.grid = make_mode_grid(8);
  profile.probabilities.assign(4, 0.0);
  const auto c = cumulants_from_profile(profile);
  CHECK(c.kappa1 == 0.0);
  CHECK(c.kappa2 == 0.0);
  CHECK(c.kappa3 == 0.0);
  const auto pmf = kink_distribution(profile);
  CHECK(pmf[0] == doctest::Approx(1.0));
}

TEST_CASE("pair-model PMF for two modes matches enumeration") {
  ExcitationProfile profile;
  profile.grid = make_mode_grid(4);
  const double p1 = 0.3, p2 = 0.8;
  profile.probabilities = {p1, p2};
  const auto pmf = kink_distribution(profile);
  CHECK(pmf[0] == doctest::Approx((1 - p1) * (1 - p2)));
  CHECK(pmf[2] == doctest::Approx(p1 * (1 - p2) + p2 * (1 - p1)));
  CHECK(pmf[4] == doctest::Approx(p1 * p2));
  CHECK(pmf[1] == 0.0);
  CHECK(pmf[3] == 0.0);
}

TEST_CASE("PMF moments reproduce the cumulants") {
  QuenchConfig cfg = cfg_for(0.35);
  for (bool cd : {false, true}) {
    const auto profile = quench_profile(64, cfg, cd);
    double total = 0.0;
    const auto pmf = kink_distribution(profile);
    for (double p : pmf) total += p;
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    const auto from_pmf = cumulants_from_pmf(pmf);
    const auto direct = cumulants_from_profile(profile);
    CHECK(std::abs(from_pmf.kappa1 - direct.kappa1) < 1e-10);
    CHECK(std::abs(from_pmf.kappa2 - direct.kappa2) < 1e-10);
    CHECK(std::abs(from_pmf.kappa3 - direct.kappa3) < 1e-10);
  }
}

TEST_CASE("CD discontinuity at T -> 0 and convergence at slow quench") {
  const int n = 100;
  QuenchConfig fast = cfg_for(1e-4);  // routed to the analytic sudden limit
  const auto cd_fast = density_cumulants(cumulants_from_profile(quench_profile(n, fast, true)), n);
  CHECK(std::abs(cd_fast.kappa1 - 0.5) > 0.2);  // differs from the initial state

  QuenchConfig slow = cfg_for(3.0);
  const auto with_cd = density_cumulants(cumulants_from_profile(quench_profile(n, slow, true)), n);
  const auto no_cd = density_cumulants(cumulants_from_profile(quench_profile(n, slow, false)), n);
  CHECK(std::abs(with_cd.kappa1 - no_cd.kappa1) <= 0.02);
}

TEST_CASE("literal convention differs by the pair degeneracy") {
  ExcitationProfile profile;
  profile.grid = make_mode_grid(1000);
  for (double k : profile.grid.momenta) profile.probabilities.push_back(sudden_pk_nocd(k));
  const auto lit = cumulants_from_profile(profile, CumulantConvention::literal);
  const auto pair = cumulants_from_profile(profile, CumulantConvention::pair);
  // one kink per mode instead of two: kappa1 halves, kappa2 quarters, so the
  // frozen-limit plateau becomes N/16 instead of the initial-state N/4
  CHECK(lit.kappa1 == doctest::Approx(pair.kappa1 / 2).epsilon(1e-12));
  CHECK(lit.kappa2 / 1000 == doctest::Approx(1.0 / 16).epsilon(1e-6));
}
