#pragma once

// Graph automorphisms as permutation matrices on vertices and on arcs, the
// intertwining identities linking them to the walk matrices, transfer
// transport under automorphisms, and the fixing-group obstruction.

#include <Eigen/Dense>

#include <vector>

#include "pstwalk/graph.hpp"
#include "pstwalk/walk.hpp"

namespace pstwalk {

struct VertexAutomorphism {
  std::vector<int> mapping;   // image of each vertex
  Eigen::MatrixXd matrix;     // M with M_{x,y} = 1 iff x = g(y)

  int apply(int v) const { return mapping[v]; }
};

// Validates bijectivity and edge preservation; throws DomainError otherwise.
VertexAutomorphism make_vertex_automorphism(const Graph& g, std::vector<int> mapping);

struct ArcAutomorphism {
  std::vector<int> mapping;   // image of each arc index
  Eigen::MatrixXd matrix;     // N with N_{a,b} = 1 iff a = g~(b)
};

// The induced arc map (x, y) -> (g(x), g(y)).
ArcAutomorphism induce_arc_automorphism(const ArcSpace& arcs, const VertexAutomorphism& aut);

// x -> x + z on the circulant.
VertexAutomorphism circulant_rotation(const Graph& g, const CirculantSpec& spec, int z);
// x -> -x on the circulant.
VertexAutomorphism circulant_inversion(const Graph& g, const CirculantSpec& spec);

// max of || d^T M - N d^T ||_inf and || U N - N U ||_inf; both vanish for
// genuine automorphisms.
double verify_intertwining(const WalkMatrices& wm, const VertexAutomorphism& aut);

// Given a verified transfer U^tau d^T e_x = gamma d^T e_y, confirms the
// transported instance from g(x) to g(y) by direct simulation.
bool pst_transport_check(const WalkMatrices& wm, const VertexAutomorphism& aut, int x, int y,
                         int tau, double gamma, double match_tol = tol::kStateMatch);

// True when some automorphism fixes exactly one of x, y: transfer between
// the two vertex states is then impossible.
bool fixing_group_obstruction(int x, int y, const std::vector<VertexAutomorphism>& auts);

}  // namespace pstwalk
