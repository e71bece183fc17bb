#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cdquench/circuit.hpp"
#include "cdquench/lattice.hpp"
#include "cdquench/quench.hpp"

namespace cdq {

/// Dense state on up to 26 qubits. Basis index bit i (little-endian) is the
/// Z-basis outcome of site i.
struct StateVector {
  int n_sites = 0;
  std::vector<std::complex<double>> amps;

  double norm2() const;
};

inline constexpr int kMaxDenseQubits = 26;
inline constexpr int kMaxOracleQubits = 12;
inline constexpr int kMaxPmfQubits = 22;

StateVector init_plus(int n);

/// |0...0>, the starting point for sequences that carry their own Hadamard
/// preparation layer (build_trotter does).
StateVector zero_state(int n);

void apply_gate(StateVector& state, const Gate& gate);

/// Applies every layer of the sequence in order.
void run(const GateSequence& seq, StateVector& state);

enum class Boundary { open, periodic };

/// Continuous-evolution oracle: integrates the full 2^N Schroedinger equation
/// i d/dt psi = [H(lambda) + cd lambda_dot A_lambda] psi by RK4 with at least
/// 4000 substeps. The periodic option adds the wrap-around edge (chains only).
/// alpha1_fn overrides the CD coefficient; by default it is the chain closed
/// form for open chains, the periodic continuum value for periodic ones, and
/// the variational trace value otherwise.
StateVector brute_force_evolve(const LatticeGraph& graph, const QuenchConfig& cfg,
                               Boundary boundary,
                               std::function<double(double)> alpha1_fn = {});

/// i.i.d. bitstring samples from |amplitude|^2, inverse-CDF over a cumulative
/// table, deterministic for fixed seed. Site 0 = leftmost character.
std::vector<std::string> sample_bitstrings(const StateVector& state, int shots,
                                           std::uint64_t seed);

/// Exact <n_def> = (1 / 2 N_e) sum_edges (1 - <Z_i Z_j>).
double kink_expectation(const StateVector& state, const LatticeGraph& graph,
                        Boundary boundary = Boundary::open);

/// Exact PMF over kink counts 0..N_e by basis-state enumeration.
std::vector<double> kink_distribution_exact(const StateVector& state,
                                            const LatticeGraph& graph,
                                            Boundary boundary = Boundary::open);

/// |<a|b>|^2 (both assumed normalized).
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace cdq
