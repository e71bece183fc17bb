#pragma once

#include <string>
#include <vector>

#include "cdquench/lattice.hpp"
#include "cdquench/quench.hpp"

namespace cdq {

enum class GateKind { Hadamard, Rx, Rzz, Ryz, Rzy };

std::string gate_kind_name(GateKind k);

/// R_P(theta) = exp(-i theta P / 2). Hadamard carries no angle.
struct Gate {
  GateKind kind;
  int q0 = -1;
  int q1 = -1;  // -1 for one-qubit gates
  double angle = 0.0;

  bool is_two_qubit() const { return q1 >= 0; }
};

struct StepRecord {
  double lambda;
  double alpha1;  // 0 when cd is off
};

struct GateSequence {
  int n_sites = 0;
  std::vector<std::vector<Gate>> layers;
  std::vector<StepRecord> step_records;
};

/// Greedy coloring of the gate conflict graph (nodes = gates, edge when
/// qubit sets intersect), processed in input order; colors become layers.
std::vector<std::vector<Gate>> layer_gates(const std::vector<Gate>& gates);

/// Digitized quench of Fig-style layout: Hadamard layer, then per step
/// Rx(theta_x = -2 dt (1-lambda_m) g) on every site,
/// Rzz(theta_zz = -2 dt lambda_m J) on every edge, and with CD
/// Ryz/Rzy(theta = 4 g J alpha1(lambda_m) dt / T) on every edge, both
/// orientations. alpha1: chain closed form for chains, variational trace
/// otherwise. Two-qubit gates are layered by greedy coloring in the
/// lattice's schedule order.
GateSequence build_trotter(const LatticeGraph& graph, const QuenchConfig& cfg);

struct GateCounts {
  int depth = 0;
  int one_qubit = 0;
  int two_qubit = 0;
};

GateCounts gate_counts(const GateSequence& seq);

/// {"n_sites": int, "layers": [[{"kind", "qubits", "angle"}]]}; stable schema.
std::string sequence_to_json(const GateSequence& seq);

}  // namespace cdq
