#include "cdquench/statevector.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cdquench/agp.hpp"
#include "cdquench/errors.hpp"

namespace cdq {

using std::complex;

double StateVector::norm2() const {
  double acc = 0.0;
  for (const auto& a : amps) acc += std::norm(a);
  return acc;
}

StateVector init_plus(int n) {
  if (n < 1) throw std::invalid_argument("init_plus: n must be positive");
  if (n > kMaxDenseQubits)
    throw capacity_error("init_plus: n exceeds dense capacity of " +
                         std::to_string(kMaxDenseQubits));
  StateVector state;
  state.n_sites = n;
  const std::size_t dim = std::size_t{1} << n;
  state.amps.assign(dim, complex<double>(std::pow(2.0, -n / 2.0), 0.0));
  return state;
}

StateVector zero_state(int n) {
  if (n < 1) throw std::invalid_argument("zero_state: n must be positive");
  if (n > kMaxDenseQubits)
    throw capacity_error("zero_state: n exceeds dense capacity of " +
                         std::to_string(kMaxDenseQubits));
  StateVector state;
  state.n_sites = n;
  state.amps.assign(std::size_t{1} << n, 0.0);
  state.amps[0] = 1.0;
  return state;
}

namespace {

using Mat2 = std::array<complex<double>, 4>;   // row-major [out][in]
using Mat4 = std::array<complex<double>, 16>;  // basis index = 2*b0 + b1

void apply_one_qubit(StateVector& state, int q, const Mat2& m) {
  const std::size_t dim = state.amps.size();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & bit) continue;
    const complex<double> a0 = state.amps[base];
    const complex<double> a1 = state.amps[base | bit];
    state.amps[base] = m[0] * a0 + m[1] * a1;
    state.amps[base | bit] = m[2] * a0 + m[3] * a1;
  }
}

void apply_two_qubit(StateVector& state, int q0, int q1, const Mat4& m) {
  const std::size_t dim = state.amps.size();
  const std::size_t b0 = std::size_t{1} << q0;
  const std::size_t b1 = std::size_t{1} << q1;
  for (std::size_t base = 0; base < dim; ++base) {
    if (base & (b0 | b1)) continue;
    const std::size_t idx[4] = {base, base | b1, base | b0, base | b0 | b1};
    complex<double> in[4];
    for (int i = 0; i < 4; ++i) in[i] = state.amps[idx[i]];
    for (int r = 0; r < 4; ++r) {
      complex<double> acc = 0.0;
      for (int c = 0; c < 4; ++c) acc += m[4 * r + c] * in[c];
      state.amps[idx[r]] = acc;
    }
  }
}

// exp(-i theta P/2) = cos(theta/2) I - i sin(theta/2) P, with P a two-site
// Pauli word on (q0, q1) in the kernel basis index 2*b(q0) + b(q1).
Mat4 rotation_kernel(GateKind kind, double theta) {
  const complex<double> c(std::cos(theta / 2.0), 0.0);
  const complex<double> mis(0.0, -std::sin(theta / 2.0));
  Mat4 m{};
  auto set = [&](int r, int col, complex<double> v) { m[4 * r + col] = v; };
  for (int d = 0; d < 4; ++d) set(d, d, c);
  switch (kind) {
    case GateKind::Rzz: {
      // ZZ = diag(1, -1, -1, 1)
      const double zz[4] = {1, -1, -1, 1};
      for (int d = 0; d < 4; ++d) m[4 * d + d] += mis * zz[d];
      break;
    }
    case GateKind::Ryz: {
      // (Y on q0) x (Z on q1): Y|0> = i|1>, Y|1> = -i|0>; Z sign from b(q1).
      for (int bq0 = 0; bq0 < 2; ++bq0)
        for (int bq1 = 0; bq1 < 2; ++bq1) {
          const int in = 2 * bq0 + bq1;
          const int out = 2 * (1 - bq0) + bq1;
          const complex<double> y = bq0 == 0 ? complex<double>(0, 1) : complex<double>(0, -1);
          const double z = bq1 == 0 ? 1.0 : -1.0;
          m[4 * out + in] += mis * y * z;
        }
      break;
    }
    case GateKind::Rzy: {
      // (Z on q0) x (Y on q1).
      for (int bq0 = 0; bq0 < 2; ++bq0)
        for (int bq1 = 0; bq1 < 2; ++bq1) {
          const int in = 2 * bq0 + bq1;
          const int out = 2 * bq0 + (1 - bq1);
          const double z = bq0 == 0 ? 1.0 : -1.0;
          const complex<double> y = bq1 == 0 ? complex<double>(0, 1) : complex<double>(0, -1);
          m[4 * out + in] += mis * z * y;
        }
      break;
    }
    default:
      throw std::invalid_argument("rotation_kernel: not a two-qubit rotation");
  }
  return m;
}

}  // namespace

void apply_gate(StateVector& state, const Gate& gate) {
  if (gate.q0 < 0 || gate.q0 >= state.n_sites ||
      (gate.is_two_qubit() && (gate.q1 >= state.n_sites || gate.q1 == gate.q0)))
    throw std::invalid_argument("apply_gate: qubit index out of range");
  switch (gate.kind) {
    case GateKind::Hadamard: {
      const complex<double> s(1.0 / std::sqrt(2.0), 0.0);
      apply_one_qubit(state, gate.q0, {s, s, s, -s});
      break;
    }
    case GateKind::Rx: {
      const complex<double> c(std::cos(gate.angle / 2.0), 0.0);
      const complex<double> mis(0.0, -std::sin(gate.angle / 2.0));
      apply_one_qubit(state, gate.q0, {c, mis, mis, c});
      break;
    }
    case GateKind::Rzz:
    case GateKind::Ryz:
    case GateKind::Rzy:
      apply_two_qubit(state, gate.q0, gate.q1, rotation_kernel(gate.kind, gate.angle));
      break;
  }
}

void run(const GateSequence& seq, StateVector& state) {
  if (seq.n_sites != state.n_sites) throw std::invalid_argument("run: size mismatch");
  for (const auto& layer : seq.layers)
    for (const auto& gate : layer) apply_gate(state, gate);
}

namespace {

// Sparse application of a Pauli string: permutation plus phase per basis state.
struct CompiledString {
  std::size_t flip_mask = 0;   // X and Y sites
  std::size_t z_mask = 0;      // Z and Y sites (sign from parity)
  complex<double> base_phase;  // (i)^(#Y), adjusted per Y input bit below
  std::size_t y_mask = 0;

  explicit CompiledString(const PauliString& s) {
    int n_y = 0;
    for (const auto& [site, op] : s.letters) {
      const std::size_t bit = std::size_t{1} << site;
      switch (op) {
        case PauliOp::X: flip_mask |= bit; break;
        case PauliOp::Y:
          flip_mask |= bit;
          y_mask |= bit;
          ++n_y;
          break;
        case PauliOp::Z: z_mask |= bit; break;
      }
    }
    // Y|b> = i(-1)^b |1-b>: collect i^(#Y) here, (-1)^b via z-like parity.
    static const complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    base_phase = ipow[n_y % 4];
    z_mask |= y_mask;
  }

  void accumulate(const std::vector<complex<double>>& in, complex<double> coeff,
                  std::vector<complex<double>>& out) const {
    const complex<double> c = coeff * base_phase;
    for (std::size_t b = 0; b < in.size(); ++b) {
      const int parity = std::popcount(b & z_mask) & 1;
      out[b ^ flip_mask] += (parity ? -c : c) * in[b];
    }
  }
};

struct CompiledSum {
  std::vector<std::pair<CompiledString, complex<double>>> terms;

  explicit CompiledSum(const PauliSum& sum) {
    terms.reserve(sum.terms.size());
    for (const auto& [s, c] : sum.terms) terms.emplace_back(CompiledString(s), c);
  }

  void accumulate(const std::vector<complex<double>>& in, complex<double> scale,
                  std::vector<complex<double>>& out) const {
    for (const auto& [cs, c] : terms) cs.accumulate(in, scale * c, out);
  }
};

LatticeGraph with_boundary(const LatticeGraph& graph, Boundary boundary) {
  if (boundary == Boundary::open) return graph;
  if (graph.geometry != Geometry::chain)
    throw std::invalid_argument("periodic boundary supported for chains only");
  LatticeGraph g = graph;
  g.edges.emplace_back(0, g.n_sites - 1);
  std::sort(g.edges.begin(), g.edges.end());
  g.geometry = Geometry::custom;
  return g;
}

}  // namespace

StateVector brute_force_evolve(const LatticeGraph& graph, const QuenchConfig& cfg,
                               Boundary boundary,
                               std::function<double(double)> alpha1_fn) {
  cfg.check();
  if (graph.n_sites > kMaxOracleQubits)
    throw capacity_error("brute_force_evolve: n exceeds oracle capacity of " +
                         std::to_string(kMaxOracleQubits));
  const LatticeGraph g = with_boundary(graph, boundary);

  if (cfg.cd && !alpha1_fn) {
    if (graph.geometry == Geometry::chain && boundary == Boundary::periodic) {
      const double gf = cfg.g, J = cfg.J;
      alpha1_fn = [gf, J](double l) { return alpha1_periodic_continuum(gf, J, l).alpha1; };
    } else if (graph.geometry == Geometry::chain) {
      const int n = graph.n_sites;
      const double gf = cfg.g, J = cfg.J;
      alpha1_fn = [n, gf, J](double l) { return alpha1_chain_obc(n, gf, J, l).alpha1; };
    } else {
      alpha1_fn = VariationalAlpha1(g, cfg.g, cfg.J);
    }
  }

  const CompiledSum hx(transverse_term(g, cfg.g));
  const CompiledSum hz(ising_term(g, cfg.J));
  const CompiledSum cd_base(cd_pauli_base(g));

  const double lambda_dot = 1.0 / cfg.T;
  auto rhs = [&](double t, const std::vector<complex<double>>& psi,
                 std::vector<complex<double>>& out) {
    const double l = t / cfg.T;
    std::fill(out.begin(), out.end(), complex<double>(0, 0));
    const complex<double> minus_i(0, -1);
    hx.accumulate(psi, minus_i * (1.0 - l), out);
    hz.accumulate(psi, minus_i * l, out);
    if (cfg.cd) {
      const double a1 = alpha1_fn(std::clamp(l, 0.0, 1.0));
      cd_base.accumulate(psi, minus_i * lambda_dot * 2.0 * cfg.g * cfg.J * a1, out);
    }
  };

  StateVector state = init_plus(g.n_sites);
  const int n_int = std::max(4000, static_cast<int>(std::ceil(400.0 * cfg.T * cfg.J)));
  const double h = cfg.T / n_int;
  const std::size_t dim = state.amps.size();
  std::vector<complex<double>> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
  for (int i = 0; i < n_int; ++i) {
    const double t = i * h;
    rhs(t, state.amps, k1);
    for (std::size_t b = 0; b < dim; ++b) tmp[b] = state.amps[b] + 0.5 * h * k1[b];
    rhs(t + 0.5 * h, tmp, k2);
    for (std::size_t b = 0; b < dim; ++b) tmp[b] = state.amps[b] + 0.5 * h * k2[b];
    rhs(t + 0.5 * h, tmp, k3);
    for (std::size_t b = 0; b < dim; ++b) tmp[b] = state.amps[b] + h * k3[b];
    rhs(t + h, tmp, k4);
    for (std::size_t b = 0; b < dim; ++b)
      state.amps[b] += (h / 6.0) * (k1[b] + 2.0 * k2[b] + 2.0 * k3[b] + k4[b]);
  }
  return state;
}

std::vector<std::string> sample_bitstrings(const StateVector& state, int shots,
                                           std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sample_bitstrings: shots must be positive");
  const std::size_t dim = state.amps.size();
  std::vector<double> cdf(dim);
  long double acc = 0.0L;
  for (std::size_t b = 0; b < dim; ++b) {
    acc += std::norm(state.amps[b]);
    cdf[b] = static_cast<double>(acc);
  }
  cdf.back() = 1.0;

  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  out.reserve(shots);
  for (int s = 0; s < shots; ++s) {
    // 53-bit uniform in [0,1); explicit so results are platform-independent.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::size_t b = static_cast<std::size_t>(it - cdf.begin());
    std::string bits(state.n_sites, '0');
    for (int q = 0; q < state.n_sites; ++q)
      if (b & (std::size_t{1} << q)) bits[q] = '1';  // site 0 = leftmost char
    out.push_back(std::move(bits));
  }
  return out;
}

namespace {

int kinks_of_basis(std::size_t b, const std::vector<std::pair<int, int>>& edges) {
  int kinks = 0;
  for (const auto& [i, j] : edges)
    kinks += static_cast<int>(((b >> i) ^ (b >> j)) & 1);
  return kinks;
}

}  // namespace

double kink_expectation(const StateVector& state, const LatticeGraph& graph,
                        Boundary boundary) {
  if (graph.n_sites != state.n_sites)
    throw std::invalid_argument("kink_expectation: size mismatch");
  const LatticeGraph g = with_boundary(graph, boundary);
  double acc = 0.0;
  for (std::size_t b = 0; b < state.amps.size(); ++b)
    acc += std::norm(state.amps[b]) * kinks_of_basis(b, g.edges);
  return acc / g.n_edges();
}

std::vector<double> kink_distribution_exact(const StateVector& state,
                                            const LatticeGraph& graph,
                                            Boundary boundary) {
  if (graph.n_sites != state.n_sites)
    throw std::invalid_argument("kink_distribution_exact: size mismatch");
  if (state.n_sites > kMaxPmfQubits)
    throw capacity_error("kink_distribution_exact: n exceeds PMF capacity of " +
                         std::to_string(kMaxPmfQubits));
  const LatticeGraph g = with_boundary(graph, boundary);
  std::vector<double> pmf(g.n_edges() + 1, 0.0);
  for (std::size_t b = 0; b < state.amps.size(); ++b)
    pmf[kinks_of_basis(b, g.edges)] += std::norm(state.amps[b]);
  return pmf;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.n_sites != b.n_sites) throw std::invalid_argument("fidelity: size mismatch");
  complex<double> overlap(0, 0);
  for (std::size_t i = 0; i < a.amps.size(); ++i)
    overlap += std::conj(a.amps[i]) * b.amps[i];
  return std::norm(overlap);
}

}  // namespace cdq
