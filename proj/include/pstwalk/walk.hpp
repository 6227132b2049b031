#pragma once

// The arc-reversal walk: boundary matrix d, shift R, time evolution
// U = R(2 d*d - I), the vertex-space discriminant P = d R d*, and the
// brute-force evolution / fidelity machinery that serves as the ground
// truth for every transfer claim.

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

#include "pstwalk/graph.hpp"
#include "pstwalk/rational_linalg.hpp"
#include "pstwalk/tolerances.hpp"

namespace pstwalk {

struct WalkMatrices {
  Graph graph;
  ArcSpace arcs;
  Eigen::MatrixXd boundary;      // d:  V x A, (deg x)^{-1/2} on arcs into x
  Eigen::MatrixXd shift;         // R:  A x A, arc reversal
  Eigen::MatrixXd evolution;     // U = R(2 d^T d - I)
  Eigen::MatrixXd adjacency;     // V x V, 0/1 entries
  Eigen::MatrixXd discriminant;  // P = d R d^T
  // For k-regular graphs P = A/k holds exactly; the rational copy backs the
  // exact matrix-polynomial checks.
  std::optional<RationalMatrix> discriminant_exact;
};

// Throws on isolated vertices (the boundary matrix needs deg >= 1).
WalkMatrices build_walk_matrices(const Graph& g);

// Unit vector over arcs. The walk operator is real, so states that start
// real stay real, but amplitudes are complex for generality.
struct ArcState {
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
};

// d^T e_x: weight (deg x)^{-1/2} on every arc with terminus x.
ArcState vertex_type_state(const WalkMatrices& wm, int x);

// U^tau applied by repeated matrix-vector products.
ArcState evolve(const Eigen::MatrixXd& evolution, const ArcState& start, int tau);

struct FidelityHit {
  int tau;
  std::complex<double> phase;  // <psi, U^tau phi> at the hit
};

struct FidelityTrace {
  std::vector<int> times;
  std::vector<double> fidelities;
  std::vector<FidelityHit> hits;
};

// |<U^tau phi, psi>| for tau = 1..tau_max; a hit is recorded whenever the
// fidelity reaches 1 - pst_tol and the state matches the target up to the
// recorded phase.
FidelityTrace fidelity_trace(const Eigen::MatrixXd& evolution, const ArcState& phi,
                             const ArcState& psi, int tau_max,
                             double pst_tol = tol::kPstFidelity);

// max over tau <= tau_max of || d U^tau d^T - T_tau(P) ||_inf, the bridge
// between walk powers and the matrix polynomial on the discriminant.
double chebyshev_identity_max_deviation(const WalkMatrices& wm, int tau_max);

}  // namespace pstwalk
