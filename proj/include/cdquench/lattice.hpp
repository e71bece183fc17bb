#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdq {

enum class Geometry { chain, ladder, square, heavy_hex, custom };

std::string geometry_name(Geometry g);

/// Undirected lattice graph. Edges are stored with the smaller index first
/// and sorted lexicographically, so edge lists are reproducible byte-for-byte.
/// Immutable after construction.
struct LatticeGraph {
  int n_sites = 0;
  std::vector<std::pair<int, int>> edges;
  Geometry geometry = Geometry::custom;

  // Optional gate-scheduling hint: a permutation of edge indices such that
  // greedy coloring in this order reaches the minimal two-qubit layer count.
  // Empty means canonical (sorted) order is already good.
  std::vector<int> schedule_order;

  int n_edges() const { return static_cast<int>(edges.size()); }

  std::vector<int> degrees() const;
  int max_degree() const;
  bool is_connected() const;
  bool has_triangle() const;
  bool is_bipartite() const;
};

// Throws std::invalid_argument naming the violated invariant
// (self-loop, duplicate edge, index out of range, disconnected).
void validate(const LatticeGraph& graph);

LatticeGraph make_chain(int n);
LatticeGraph make_square(int nx, int ny);
LatticeGraph make_ladder(int nx);  // three-leg ladder, equals square(nx, 3)

// Heavy-hexagonal lattice: cell_rows+1 horizontal qubit rows of length
// 4*cell_cols, with bridge qubits between consecutive rows at columns
// 0 mod 4 (even gaps) or 2 mod 4 (odd gaps). Vertex numbering is row-major:
// row 0 qubits, gap 0 bridges, row 1 qubits, gap 1 bridges, ...
// make_heavy_hex(7, 4) reproduces the 156-site / 176-edge device layout.
LatticeGraph make_heavy_hex(int cell_rows, int cell_cols);

// Edge-list document: line 1 = N, then "i j" per line; '#' starts a comment.
// Throws std::invalid_argument with the offending line number on parse errors.
LatticeGraph load_edge_list(std::string_view text);

// "chain:100", "square:6x6", "ladder:15", "heavyhex:RxC", "file:PATH".
LatticeGraph parse_lattice_spec(const std::string& spec);

}  // namespace cdq
