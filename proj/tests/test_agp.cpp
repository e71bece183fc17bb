#include "doctest.h"

#include <stdexcept>

#include <cmath>

#include "cdquench/agp.hpp"
#include "dense_oracle.hpp"

using namespace cdq;
namespace dt = cdq::testing;

TEST_CASE("chain closed form fixed points") {
  CHECK(alpha1_chain_obc(5, 2.0, 1.5, 0.0).alpha1 == doctest::Approx(-1.0 / (16 * 4.0)));
  CHECK(alpha1_chain_obc(2, 1, 1, 1.0).alpha1 == doctest::Approx(-0.25));
  CHECK(alpha1_chain_obc(2, 1, 1, 0.5).alpha1 == doctest::Approx(-0.2));
  CHECK_THROWS_AS(alpha1_chain_obc(1, 1, 1, 0.5), std::invalid_argument);
}

TEST_CASE("periodic continuum fixed points") {
  CHECK(alpha1_periodic_continuum(1, 1, 0.5).alpha1 == doctest::Approx(-0.125));
  CHECK(alpha1_periodic_continuum(1, 1, 0.0).alpha1 == doctest::Approx(-1.0 / 16));
  // N -> infinity limit of the open-chain form
  const double big = alpha1_chain_obc(1000000, 1, 1, 0.3).alpha1;
  CHECK(big == doctest::Approx(alpha1_periodic_continuum(1, 1, 0.3).alpha1).epsilon(1e-5));
}

TEST_CASE("lambda domain check") {
  CHECK_THROWS_AS(alpha1_chain_obc(5, 1, 1, 1.1), std::invalid_argument);
  CHECK_THROWS_AS(alpha1_periodic_continuum(1, 1, -0.5), std::invalid_argument);
  // within tolerance is clamped, not rejected
  CHECK(alpha1_periodic_continuum(1, 1, 1.0 + 5e-13).lambda == 1.0);
}

TEST_CASE("variational trace engine equals the chain closed form") {
  for (int n = 2; n <= 10; ++n) {
    const auto graph = make_chain(n);
    const VariationalAlpha1 eval(graph, 1.0, 1.0);
    for (int i = 0; i <= 10; ++i) {
      const double lambda = i / 10.0;
      const double expected = alpha1_chain_obc(n, 1.0, 1.0, lambda).alpha1;
      CAPTURE(n);
      CAPTURE(lambda);
      CHECK(std::abs(eval(lambda) - expected) <= 1e-10 * std::abs(expected));
    }
  }
  // non-unit couplings
  const VariationalAlpha1 eval(make_chain(6), 0.7, 1.3);
  for (int i = 0; i <= 10; ++i) {
    const double lambda = i / 10.0;
    const double expected = alpha1_chain_obc(6, 0.7, 1.3, lambda).alpha1;
    CHECK(std::abs(eval(lambda) - expected) <= 1e-10 * std::abs(expected));
  }
}

TEST_CASE("variational value minimizes the dense action on a 2x2 square") {
  // Independent route: scan S1(a) = Tr(G^dag G)/2^N with G = O0 + a O2 built
  // from explicit dense matrices. S1 is quadratic in a, so three samples give
  // the exact parabola vertex.
  const auto graph = make_square(2, 2);
  const double g = 1.0, J = 1.0, lambda = 0.5;
  const PauliSum hx = transverse_term(graph, g);
  const PauliSum hz = ising_term(graph, J);
  const PauliSum h = hamiltonian(graph, g, J, lambda);
  const PauliSum o0 = cplx(-1.0) * hx + hz;
  const PauliSum o1 = commutator(h, o0);
  const PauliSum o2 = commutator(h, o1);
  const auto d0 = dt::to_dense(o0);
  const auto d2 = dt::to_dense(o2);

  auto action = [&](double a) {
    auto gmat = d0;
    for (std::size_t r = 0; r < gmat.size(); ++r)
      for (std::size_t c = 0; c < gmat.size(); ++c) gmat[r][c] += a * d2[r][c];
    return dt::dense_hs_inner(gmat, gmat).real();
  };
  const double s_m = action(-0.1), s_0 = action(0.0), s_p = action(0.1);
  const double curvature = (s_p - 2.0 * s_0 + s_m) / (0.1 * 0.1);
  const double slope = (s_p - s_m) / 0.2;
  const double a_min = -slope / curvature;

  const double variational = alpha1_variational(graph, g, J, lambda).alpha1;
  CHECK(std::abs(variational - a_min) <= 1e-6 * std::abs(a_min));
  CHECK(variational < 0.0);
}

TEST_CASE("coupling rescaling: alpha1(c g, c J) = alpha1(g, J) / c^2") {
  const double c = 2.5;
  CHECK(alpha1_chain_obc(8, c * 1.0, c * 1.0, 0.4).alpha1 ==
        doctest::Approx(alpha1_chain_obc(8, 1, 1, 0.4).alpha1 / (c * c)));
  CHECK(alpha1_periodic_continuum(c * 0.8, c * 1.2, 0.7).alpha1 ==
        doctest::Approx(alpha1_periodic_continuum(0.8, 1.2, 0.7).alpha1 / (c * c)));
  const auto graph = make_square(2, 3);
  CHECK(alpha1_variational(graph, c * 1.0, c * 1.0, 0.6).alpha1 ==
        doctest::Approx(alpha1_variational(graph, 1, 1, 0.6).alpha1 / (c * c)));
}

TEST_CASE("CD coefficient magnitude peaks at the critical point") {
  // |lambda_dot alpha1| with lambda_dot = 1/T and g = J, periodic continuum.
  double best = 0.0;
  int best_i = -1;
  for (int i = 0; i <= 1000; ++i) {
    const double lambda = i / 1000.0;
    const double mag = std::abs(alpha1_periodic_continuum(1, 1, lambda).alpha1);
    if (mag > best) {
      best = mag;
      best_i = i;
    }
  }
  CHECK(std::abs(best_i / 1000.0 - 0.5) <= 1e-3 + 1e-12);
}

TEST_CASE("first-order commutator structure of the TFIM") {
  // [H, dH/dlambda] on a 2-site chain is -2i g J (Y0 Z1 + Z0 Y1).
  const auto graph = make_chain(2);
  const double g = 1.0, J = 1.0;
  const PauliSum o0 = cplx(-1.0) * transverse_term(graph, g) + ising_term(graph, J);
  const PauliSum o1 = commutator(hamiltonian(graph, g, J, 0.37), o0);
  REQUIRE(o1.terms.size() == 2);
  CHECK(std::abs(o1.terms.at(two(2, 0, PauliOp::Y, 1, PauliOp::Z)) - cplx(0, -2)) < 1e-12);
  CHECK(std::abs(o1.terms.at(two(2, 0, PauliOp::Z, 1, PauliOp::Y)) - cplx(0, -2)) < 1e-12);
}
