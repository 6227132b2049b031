#pragma once

// Graphs, symmetric arc spaces and circulant constructors. Graphs are
// simple, finite and undirected; arcs are ordered pairs listed in
// lexicographic (origin, terminus) order so every matrix index is
// reproducible.

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pstwalk {

// Connection set description of the circulant graph on Z_n: the stored
// residues are the canonical representatives in [1, n-1] and are closed
// under negation.
struct CirculantSpec {
  int n = 0;
  std::vector<int> s;

  // Builds a spec from generator residues: each residue is reduced mod n
  // and the set is closed under negation. Residues equal to 0 mod n are
  // rejected.
  static CirculantSpec make(int n, const std::vector<int>& generators);

  int valency() const { return static_cast<int>(s.size()); }
  bool contains(int residue) const;

  std::string to_json() const;
  static CirculantSpec from_json(const std::string& text);

  bool operator==(const CirculantSpec& other) const = default;
  bool operator<(const CirculantSpec& other) const;
};

struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;     // sorted pairs with first < second
  std::vector<std::vector<int>> adjacency;    // sorted neighbor lists
  std::vector<int> degree;

  static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);

  bool has_edge(int x, int y) const;
  bool is_regular() const;
};

struct ArcSpace {
  std::vector<std::pair<int, int>> arcs;  // lexicographic by (origin, terminus)
  std::vector<int> inverse;               // fixed-point-free involution
  std::vector<std::vector<int>> in_arcs;  // arcs with terminus v, per vertex

  static ArcSpace build(const Graph& g);

  int size() const { return static_cast<int>(arcs.size()); }
  int origin(int a) const { return arcs[a].first; }
  int terminus(int a) const { return arcs[a].second; }
  int index_of(int origin, int terminus) const;  // -1 when absent
};

// Validates the spec invariants (0 not in S, S = -S, n >= 2) and builds the
// graph with x ~ y iff y - x in S.
Graph build_circulant(const CirculantSpec& spec);

// gcd criterion: the circulant is connected iff gcd(S union {n}) = 1.
bool is_connected(const CirculantSpec& spec);

// Breadth-first connectivity on an explicit graph.
bool is_connected(const Graph& g);

}  // namespace pstwalk
