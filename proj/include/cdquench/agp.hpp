#pragma once

#include "cdquench/lattice.hpp"
#include "cdquench/pauli.hpp"

namespace cdq {

enum class AgpMethod { variational_trace, chain_obc_closed_form, periodic_continuum };

struct AgpCoefficient {
  double lambda = 0.0;
  double alpha1 = 0.0;  // units 1/energy^2, negative for g, J > 0
  AgpMethod method = AgpMethod::variational_trace;
};

/// H(lambda) = -(1-lambda) g sum_i X_i - lambda J sum_<ij> Z_i Z_j.
PauliSum hamiltonian(const LatticeGraph& graph, double g, double J, double lambda);
PauliSum transverse_term(const LatticeGraph& graph, double g);   // -g sum X_i
PauliSum ising_term(const LatticeGraph& graph, double J);        // -J sum Z_i Z_j

/// sum_<ij> (Y_i Z_j + Z_i Y_j), the operator content of the first-order AGP.
/// The full AGP is 2 g J alpha1(lambda) times this.
PauliSum cd_pauli_base(const LatticeGraph& graph);

/// First-order variational coefficient with the lambda-independent traces
/// precomputed, so alpha1(lambda) evaluations are O(1). Writing
/// H = (1-lambda) Hx + lambda Hz gives O2 = (1-lambda)[Hx,O1] + lambda[Hz,O1],
/// so Tr(O2^dag O2) is a quadratic form in (1-lambda) and lambda.
class VariationalAlpha1 {
 public:
  VariationalAlpha1(const LatticeGraph& graph, double g, double J);

  double operator()(double lambda) const;

 private:
  double o1_norm_;   // Tr(O1^dag O1) / 2^N
  double pp_, pq_, qq_;  // quadratic-form coefficients of Tr(O2^dag O2) / 2^N
};

AgpCoefficient alpha1_variational(const LatticeGraph& graph, double g, double J,
                                  double lambda);

/// Closed form for an open-boundary chain of n sites:
/// alpha1 = -(n-1) / (16 g^2 (n-1)(lambda-1)^2 + 4 J^2 [4(n-1)-3] lambda^2).
AgpCoefficient alpha1_chain_obc(int n, double g, double J, double lambda);

/// Periodic 1D continuum limit: alpha1 = -1 / (16 [lambda^2 J^2 + (1-lambda)^2 g^2]).
AgpCoefficient alpha1_periodic_continuum(double g, double J, double lambda);

/// Throws std::invalid_argument if lambda is outside [0,1] beyond 1e-12;
/// returns lambda clamped to the interval otherwise.
double check_lambda(double lambda);

}  // namespace cdq
