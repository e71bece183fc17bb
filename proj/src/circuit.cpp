#include "cdquench/circuit.hpp"

#include <functional>
#include <stdexcept>

#include "cdquench/agp.hpp"
#include "json.hpp"

namespace cdq {

std::string gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Hadamard: return "H";
    case GateKind::Rx: return "Rx";
    case GateKind::Rzz: return "Rzz";
    case GateKind::Ryz: return "Ryz";
    case GateKind::Rzy: return "Rzy";
  }
  return "?";
}

std::vector<std::vector<Gate>> layer_gates(const std::vector<Gate>& gates) {
  std::vector<std::vector<Gate>> layers;
  std::vector<int> colors(gates.size());
  for (size_t i = 0; i < gates.size(); ++i) {
    std::vector<char> used(layers.size() + 1, 0);
    for (size_t j = 0; j < i; ++j) {
      const bool conflict = gates[i].q0 == gates[j].q0 || gates[i].q0 == gates[j].q1 ||
                            (gates[i].q1 >= 0 && (gates[i].q1 == gates[j].q0 ||
                                                  gates[i].q1 == gates[j].q1));
      if (conflict && colors[j] < static_cast<int>(used.size())) used[colors[j]] = 1;
    }
    int c = 0;
    while (used[c]) ++c;
    colors[i] = c;
    if (c == static_cast<int>(layers.size())) layers.emplace_back();
    layers[c].push_back(gates[i]);
  }
  return layers;
}

namespace {

double lambda_at_step(const QuenchConfig& cfg, int m) {
  switch (cfg.eval_policy) {
    case EvalPolicy::left: return (m - 1) * cfg.dt / cfg.T;
    case EvalPolicy::mid: return (m - 0.5) * cfg.dt / cfg.T;
    case EvalPolicy::right: return m * cfg.dt / cfg.T;
  }
  return 0.0;
}

// Edge traversal order used for two-qubit gate emission: the lattice's
// schedule hint when present, canonical order otherwise.
std::vector<int> emission_order(const LatticeGraph& graph) {
  if (!graph.schedule_order.empty()) return graph.schedule_order;
  std::vector<int> order(graph.edges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return order;
}

}  // namespace

GateSequence build_trotter(const LatticeGraph& graph, const QuenchConfig& cfg) {
  cfg.check();
  validate(graph);

  GateSequence seq;
  seq.n_sites = graph.n_sites;

  // |0...0> -> |+...+>
  std::vector<Gate> hadamards;
  for (int i = 0; i < graph.n_sites; ++i)
    hadamards.push_back({GateKind::Hadamard, i, -1, 0.0});
  seq.layers.push_back(std::move(hadamards));

  std::function<double(double)> alpha1;
  if (cfg.cd) {
    if (graph.geometry == Geometry::chain) {
      const int n = graph.n_sites;
      const double g = cfg.g, J = cfg.J;
      alpha1 = [n, g, J](double l) { return alpha1_chain_obc(n, g, J, l).alpha1; };
    } else {
      alpha1 = VariationalAlpha1(graph, cfg.g, cfg.J);
    }
  }

  const std::vector<int> order = emission_order(graph);

  for (int m = 1; m <= cfg.steps; ++m) {
    const double lambda = lambda_at_step(cfg, m);
    const double a1 = cfg.cd ? alpha1(lambda) : 0.0;
    seq.step_records.push_back({lambda, a1});

    std::vector<Gate> rx;
    const double theta_x = -2.0 * cfg.dt * (1.0 - lambda) * cfg.g;
    for (int i = 0; i < graph.n_sites; ++i) rx.push_back({GateKind::Rx, i, -1, theta_x});
    seq.layers.push_back(std::move(rx));

    std::vector<Gate> rzz;
    const double theta_zz = -2.0 * cfg.dt * lambda * cfg.J;
    for (int e : order) {
      const auto& [i, j] = graph.edges[e];
      rzz.push_back({GateKind::Rzz, i, j, theta_zz});
    }
    for (auto& layer : layer_gates(rzz)) seq.layers.push_back(std::move(layer));

    if (cfg.cd) {
      const double theta_cd = 4.0 * cfg.g * cfg.J * a1 * cfg.dt / cfg.T;
      for (GateKind kind : {GateKind::Ryz, GateKind::Rzy}) {
        std::vector<Gate> cd_gates;
        for (int e : order) {
          const auto& [i, j] = graph.edges[e];
          cd_gates.push_back({kind, i, j, theta_cd});
        }
        for (auto& layer : layer_gates(cd_gates)) seq.layers.push_back(std::move(layer));
      }
    }
  }
  return seq;
}

GateCounts gate_counts(const GateSequence& seq) {
  GateCounts counts;
  counts.depth = static_cast<int>(seq.layers.size());
  for (const auto& layer : seq.layers)
    for (const auto& gate : layer)
      (gate.is_two_qubit() ? counts.two_qubit : counts.one_qubit)++;
  return counts;
}

std::string sequence_to_json(const GateSequence& seq) {
  nlohmann::json doc;
  doc["n_sites"] = seq.n_sites;
  doc["layers"] = nlohmann::json::array();
  for (const auto& layer : seq.layers) {
    nlohmann::json jl = nlohmann::json::array();
    for (const auto& gate : layer) {
      nlohmann::json jg;
      jg["kind"] = gate_kind_name(gate.kind);
      jg["qubits"] = gate.is_two_qubit() ? std::vector<int>{gate.q0, gate.q1}
                                         : std::vector<int>{gate.q0};
      if (gate.kind != GateKind::Hadamard) jg["angle"] = gate.angle;
      jl.push_back(std::move(jg));
    }
    doc["layers"].push_back(std::move(jl));
  }
  return doc.dump();
}

}  // namespace cdq
