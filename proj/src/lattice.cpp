#include "cdquench/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cdq {

std::string geometry_name(Geometry g) {
  switch (g) {
    case Geometry::chain: return "chain";
    case Geometry::ladder: return "ladder";
    case Geometry::square: return "square";
    case Geometry::heavy_hex: return "heavy_hex";
    case Geometry::custom: return "custom";
  }
  return "?";
}

std::vector<int> LatticeGraph::degrees() const {
  std::vector<int> deg(n_sites, 0);
  for (const auto& [a, b] : edges) {
    ++deg[a];
    ++deg[b];
  }
  return deg;
}

int LatticeGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

namespace {

std::vector<std::vector<int>> adjacency(const LatticeGraph& g) {
  std::vector<std::vector<int>> adj(g.n_sites);
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

}  // namespace

bool LatticeGraph::is_connected() const {
  if (n_sites <= 1) return true;
  const auto adj = adjacency(*this);
  std::vector<char> seen(n_sites, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        q.push(w);
      }
    }
  }
  return count == n_sites;
}

bool LatticeGraph::has_triangle() const {
  std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
  const auto adj = adjacency(*this);
  for (const auto& [a, b] : edges) {
    for (int c : adj[a]) {
      if (c == b) continue;
      const auto key = std::minmax(b, c);
      if (edge_set.count({key.first, key.second})) return true;
    }
  }
  return false;
}

bool LatticeGraph::is_bipartite() const {
  const auto adj = adjacency(*this);
  std::vector<int> color(n_sites, -1);
  for (int start = 0; start < n_sites; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

void validate(const LatticeGraph& graph) {
  if (graph.n_sites < 1) throw std::invalid_argument("lattice: n_sites must be positive");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : graph.edges) {
    if (a == b) throw std::invalid_argument("lattice: self-loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= graph.n_sites || b >= graph.n_sites)
      throw std::invalid_argument("lattice: edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ") out of range");
    if (a > b) throw std::invalid_argument("lattice: edge not in canonical (min,max) order");
    if (!seen.insert({a, b}).second)
      throw std::invalid_argument("lattice: duplicate edge (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
  }
  if (!graph.is_connected()) throw std::invalid_argument("lattice: graph is not connected");
}

namespace {

LatticeGraph finish(int n, std::vector<std::pair<int, int>> edges, Geometry geom,
                    std::vector<std::pair<int, int>> schedule = {}) {
  for (auto& [a, b] : edges)
    if (a > b) std::swap(a, b);
  std::sort(edges.begin(), edges.end());
  LatticeGraph g;
  g.n_sites = n;
  g.edges = std::move(edges);
  g.geometry = geom;
  if (!schedule.empty()) {
    // Map the schedule's edge list (already color-grouped) to canonical indices.
    g.schedule_order.reserve(schedule.size());
    for (auto [a, b] : schedule) {
      if (a > b) std::swap(a, b);
      const auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(a, b));
      g.schedule_order.push_back(static_cast<int>(it - g.edges.begin()));
    }
  }
  validate(g);
  return g;
}

}  // namespace

LatticeGraph make_chain(int n) {
  if (n < 2) throw std::invalid_argument("make_chain: n must be >= 2");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return finish(n, std::move(edges), Geometry::chain);
}

LatticeGraph make_square(int nx, int ny) {
  if (nx < 1 || ny < 1 || nx * ny < 2)
    throw std::invalid_argument("make_square: need nx, ny >= 1 and nx*ny >= 2");
  // Row-major numbering: site (x, y) -> y*nx + x.
  std::vector<std::pair<int, int>> edges;
  for (int y = 0; y < ny; ++y)
    for (int x = 0; x < nx; ++x) {
      const int v = y * nx + x;
      if (x + 1 < nx) edges.emplace_back(v, v + 1);
      if (y + 1 < ny) edges.emplace_back(v, v + nx);
    }
  return finish(nx * ny, std::move(edges), Geometry::square);
}

LatticeGraph make_ladder(int nx) {
  LatticeGraph g = make_square(nx, 3);
  g.geometry = Geometry::ladder;
  return g;
}

LatticeGraph make_heavy_hex(int cell_rows, int cell_cols) {
  if (cell_rows < 1 || cell_cols < 1)
    throw std::invalid_argument("make_heavy_hex: need cell_rows, cell_cols >= 1");
  const int rows = cell_rows + 1;
  const int len = 4 * cell_cols;

  // Row qubits first (row-major, interleaved with each gap's bridge qubits).
  std::vector<std::vector<int>> row_ids(rows);
  std::vector<std::vector<std::pair<int, int>>> gap_bridges(rows - 1);  // (column, id)
  int next = 0;
  for (int r = 0; r < rows; ++r) {
    row_ids[r].resize(len);
    for (int c = 0; c < len; ++c) row_ids[r][c] = next++;
    if (r + 1 < rows) {
      const int start = (r % 2 == 0) ? 0 : 2;
      for (int c = start; c < len; c += 4) gap_bridges[r].emplace_back(c, next++);
    }
  }

  std::vector<std::pair<int, int>> edges;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < len; ++c) edges.emplace_back(row_ids[r][c], row_ids[r][c + 1]);
  for (int gp = 0; gp + 1 < rows; ++gp)
    for (auto [c, id] : gap_bridges[gp]) {
      edges.emplace_back(row_ids[gp][c], id);
      edges.emplace_back(id, row_ids[gp + 1][c]);
    }

  // Schedule hint: a proper 3-edge-coloring. Row edges follow a period-4
  // pattern, alternating between rows; each bridge edge takes the color
  // left free at its row attachment qubit, and the two free colors differ
  // between the upper and lower rows.
  static const int patternA[4] = {0, 1, 0, 2};
  static const int patternB[4] = {0, 2, 0, 1};
  auto row_edge_color = [&](int r, int c) {
    return (r % 2 == 0) ? patternA[c % 4] : patternB[c % 4];
  };
  auto free_color_at = [&](int r, int c) {
    bool used[3] = {false, false, false};
    if (c > 0) used[row_edge_color(r, c - 1)] = true;
    if (c + 1 < len) used[row_edge_color(r, c)] = true;
    for (int col = 2; col >= 0; --col)
      if (!used[col]) return col;
    return -1;  // unreachable: row qubits have at most 2 row edges
  };
  std::vector<std::vector<std::pair<int, int>>> classes(3);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c + 1 < len; ++c)
      classes[row_edge_color(r, c)].emplace_back(row_ids[r][c], row_ids[r][c + 1]);
  for (int gp = 0; gp + 1 < rows; ++gp)
    for (auto [c, id] : gap_bridges[gp]) {
      classes[free_color_at(gp, c)].emplace_back(row_ids[gp][c], id);
      classes[free_color_at(gp + 1, c)].emplace_back(id, row_ids[gp + 1][c]);
    }
  std::vector<std::pair<int, int>> schedule;
  for (auto& cls : classes) schedule.insert(schedule.end(), cls.begin(), cls.end());

  return finish(next, std::move(edges), Geometry::heavy_hex, std::move(schedule));
}

LatticeGraph load_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      if (!(ls >> n) || n < 1)
        throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                    ": expected positive site count");
      continue;
    }
    int a, b;
    if (!(ls >> a)) continue;  // blank or comment-only line
    std::string trailing;
    if (!(ls >> b) || (ls >> trailing))
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected \"i j\"");
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": vertex index out of range");
    edges.emplace_back(a, b);
  }
  if (n < 0) throw std::invalid_argument("edge list: empty document");
  return finish(n, std::move(edges), Geometry::custom);
}

LatticeGraph parse_lattice_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("lattice spec: expected kind:params, got \"" + spec + "\"");
  const std::string kind = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  auto parse_pair = [&](char sep) {
    const auto pos = params.find(sep);
    if (pos == std::string::npos)
      throw std::invalid_argument("lattice spec: expected AxB in \"" + spec + "\"");
    return std::make_pair(std::stoi(params.substr(0, pos)), std::stoi(params.substr(pos + 1)));
  };
  if (kind == "chain") return make_chain(std::stoi(params));
  if (kind == "ladder") return make_ladder(std::stoi(params));
  if (kind == "square") {
    const auto [nx, ny] = parse_pair('x');
    return make_square(nx, ny);
  }
  if (kind == "heavyhex") {
    const auto [r, c] = parse_pair('x');
    return make_heavy_hex(r, c);
  }
  if (kind == "file") {
    std::ifstream f(params);
    if (!f) throw std::invalid_argument("lattice spec: cannot open file " + params);
    std::ostringstream buf;
    buf << f.rdbuf();
    return load_edge_list(buf.str());
  }
  throw std::invalid_argument("lattice spec: unknown kind \"" + kind + "\"");
}

}  // namespace cdq
