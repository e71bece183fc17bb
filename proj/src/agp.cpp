#include "cdquench/agp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cdq {

PauliSum transverse_term(const LatticeGraph& graph, double g) {
  PauliSum sum(graph.n_sites);
  for (int i = 0; i < graph.n_sites; ++i)
    sum.add_term(single(graph.n_sites, i, PauliOp::X), -g);
  return sum;
}

PauliSum ising_term(const LatticeGraph& graph, double J) {
  PauliSum sum(graph.n_sites);
  for (const auto& [i, j] : graph.edges)
    sum.add_term(two(graph.n_sites, i, PauliOp::Z, j, PauliOp::Z), -J);
  return sum;
}

PauliSum hamiltonian(const LatticeGraph& graph, double g, double J, double lambda) {
  return (1.0 - lambda) * transverse_term(graph, g) + cplx(lambda) * ising_term(graph, J);
}

PauliSum cd_pauli_base(const LatticeGraph& graph) {
  PauliSum sum(graph.n_sites);
  for (const auto& [i, j] : graph.edges) {
    sum.add_term(two(graph.n_sites, i, PauliOp::Y, j, PauliOp::Z), 1.0);
    sum.add_term(two(graph.n_sites, i, PauliOp::Z, j, PauliOp::Y), 1.0);
  }
  return sum;
}

double check_lambda(double lambda) {
  if (lambda < -1e-12 || lambda > 1.0 + 1e-12)
    throw std::invalid_argument("lambda outside [0,1]: " + std::to_string(lambda));
  return std::clamp(lambda, 0.0, 1.0);
}

VariationalAlpha1::VariationalAlpha1(const LatticeGraph& graph, double g, double J) {
  if (g <= 0 || J <= 0) throw std::invalid_argument("alpha1: g, J must be positive");
  const PauliSum hx = transverse_term(graph, g);
  const PauliSum hz = ising_term(graph, J);
  // O0 = d/dlambda H = -Hx + Hz, O1 = [H, O0] = [Hx, Hz] (lambda-independent).
  const PauliSum o1 = commutator(hx, hz);
  const PauliSum p = commutator(hx, o1);
  const PauliSum q = commutator(hz, o1);
  o1_norm_ = hs_inner(o1, o1).real();
  pp_ = hs_inner(p, p).real();
  pq_ = hs_inner(p, q).real();
  qq_ = hs_inner(q, q).real();
}

double VariationalAlpha1::operator()(double lambda) const {
  const double l = check_lambda(lambda);
  const double u = 1.0 - l;
  const double denom = u * u * pp_ + 2.0 * u * l * pq_ + l * l * qq_;
  if (denom < 1e-30)
    throw std::runtime_error("alpha1 variational: singular denominator");
  return -o1_norm_ / denom;
}

AgpCoefficient alpha1_variational(const LatticeGraph& graph, double g, double J,
                                  double lambda) {
  const VariationalAlpha1 eval(graph, g, J);
  return {check_lambda(lambda), eval(lambda), AgpMethod::variational_trace};
}

AgpCoefficient alpha1_chain_obc(int n, double g, double J, double lambda) {
  if (n < 2) throw std::invalid_argument("alpha1_chain_obc: n must be >= 2");
  const double l = check_lambda(lambda);
  const double ne = n - 1;
  const double denom =
      16.0 * g * g * ne * (l - 1.0) * (l - 1.0) + 4.0 * J * J * (4.0 * ne - 3.0) * l * l;
  return {l, -ne / denom, AgpMethod::chain_obc_closed_form};
}

AgpCoefficient alpha1_periodic_continuum(double g, double J, double lambda) {
  if (g <= 0 || J <= 0) throw std::invalid_argument("alpha1: g, J must be positive");
  const double l = check_lambda(lambda);
  const double denom = 16.0 * (l * l * J * J + (1.0 - l) * (1.0 - l) * g * g);
  return {l, -1.0 / denom, AgpMethod::periodic_continuum};
}

}  // namespace cdq
