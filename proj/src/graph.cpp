#include "pstwalk/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include <nlohmann/json.hpp>

#include "pstwalk/errors.hpp"

namespace pstwalk {

CirculantSpec CirculantSpec::make(int n, const std::vector<int>& generators) {
  if (n < 2) throw DomainError("CirculantSpec: n must be at least 2");
  std::set<int> residues;
  for (int g : generators) {
    int r = ((g % n) + n) % n;
    if (r == 0) throw DomainError("CirculantSpec: residue 0 is not allowed");
    residues.insert(r);
    residues.insert((n - r) % n);
  }
  CirculantSpec spec;
  spec.n = n;
  spec.s.assign(residues.begin(), residues.end());
  return spec;
}

bool CirculantSpec::contains(int residue) const {
  int r = ((residue % n) + n) % n;
  return std::binary_search(s.begin(), s.end(), r);
}

bool CirculantSpec::operator<(const CirculantSpec& other) const {
  if (n != other.n) return n < other.n;
  return s < other.s;
}

std::string CirculantSpec::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["s"] = s;
  return j.dump();
}

CirculantSpec CirculantSpec::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  return make(j.at("n").get<int>(), j.at("s").get<std::vector<int>>());
}

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count <= 0) throw DomainError("Graph: vertex count must be positive");
  Graph g;
  g.vertex_count = vertex_count;
  std::set<std::pair<int, int>> seen;
  for (auto [x, y] : edges) {
    if (x == y) throw DomainError("Graph: loops are not allowed");
    if (x < 0 || y < 0 || x >= vertex_count || y >= vertex_count)
      throw DomainError("Graph: edge endpoint out of range");
    if (x > y) std::swap(x, y);
    if (!seen.insert({x, y}).second) throw DomainError("Graph: multi-edges are not allowed");
  }
  g.edges.assign(seen.begin(), seen.end());
  g.adjacency.assign(vertex_count, {});
  for (auto [x, y] : g.edges) {
    g.adjacency[x].push_back(y);
    g.adjacency[y].push_back(x);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  g.degree.resize(vertex_count);
  for (int v = 0; v < vertex_count; ++v) g.degree[v] = static_cast<int>(g.adjacency[v].size());
  return g;
}

bool Graph::has_edge(int x, int y) const {
  if (x > y) std::swap(x, y);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(x, y));
}

bool Graph::is_regular() const {
  return std::all_of(degree.begin(), degree.end(),
                     [&](int d) { return d == degree.front(); });
}

ArcSpace ArcSpace::build(const Graph& g) {
  ArcSpace arcs;
  for (auto [x, y] : g.edges) {
    arcs.arcs.emplace_back(x, y);
    arcs.arcs.emplace_back(y, x);
  }
  std::sort(arcs.arcs.begin(), arcs.arcs.end());
  std::map<std::pair<int, int>, int> index;
  for (int a = 0; a < arcs.size(); ++a) index[arcs.arcs[a]] = a;
  arcs.inverse.resize(arcs.arcs.size());
  for (int a = 0; a < arcs.size(); ++a) {
    arcs.inverse[a] = index.at({arcs.arcs[a].second, arcs.arcs[a].first});
  }
  arcs.in_arcs.assign(g.vertex_count, {});
  for (int a = 0; a < arcs.size(); ++a) arcs.in_arcs[arcs.arcs[a].second].push_back(a);
  return arcs;
}

int ArcSpace::index_of(int origin, int terminus) const {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), std::make_pair(origin, terminus));
  if (it == arcs.end() || *it != std::make_pair(origin, terminus)) return -1;
  return static_cast<int>(it - arcs.begin());
}

Graph build_circulant(const CirculantSpec& spec) {
  if (spec.n < 2) throw DomainError("build_circulant: n must be at least 2");
  if (spec.s.empty()) throw DomainError("build_circulant: empty connection set");
  for (int r : spec.s) {
    if (r <= 0 || r >= spec.n) throw DomainError("build_circulant: residue out of range");
    if (!spec.contains(spec.n - r)) throw DomainError("build_circulant: connection set must satisfy S = -S");
  }
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < spec.n; ++x) {
    for (int r : spec.s) {
      int y = (x + r) % spec.n;
      if (x < y) edges.emplace_back(x, y);
    }
  }
  Graph g = Graph::from_edges(spec.n, std::move(edges));
  for (int v = 0; v < g.vertex_count; ++v) {
    if (g.degree[v] != spec.valency())
      throw InternalInconsistencyError("build_circulant: graph is not |S|-regular");
  }
  return g;
}

bool is_connected(const CirculantSpec& spec) {
  long g = spec.n;
  for (int r : spec.s) g = std::gcd(g, static_cast<long>(r));
  return g == 1;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count == 0) return false;
  std::vector<char> seen(g.vertex_count, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.adjacency[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == g.vertex_count;
}

}  // namespace pstwalk
