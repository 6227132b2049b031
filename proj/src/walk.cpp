#include "pstwalk/walk.hpp"

#include <cmath>

#include "pstwalk/chebyshev.hpp"
#include "pstwalk/errors.hpp"

namespace pstwalk {

WalkMatrices build_walk_matrices(const Graph& g) {
  for (int v = 0; v < g.vertex_count; ++v) {
    if (g.degree[v] == 0)
      throw DomainError("build_walk_matrices: isolated vertex, boundary weights undefined");
  }
  // Dense desk-scale target: 2|E| <= 256 arcs.
  if (2 * g.edges.size() > 256)
    throw DomainError("build_walk_matrices: graph exceeds the dense size target (256 arcs)");
  WalkMatrices wm;
  wm.graph = g;
  wm.arcs = ArcSpace::build(g);
  const int nv = g.vertex_count;
  const int na = wm.arcs.size();

  wm.boundary = Eigen::MatrixXd::Zero(nv, na);
  for (int a = 0; a < na; ++a) {
    const int t = wm.arcs.terminus(a);
    wm.boundary(t, a) = 1.0 / std::sqrt(static_cast<double>(g.degree[t]));
  }

  wm.shift = Eigen::MatrixXd::Zero(na, na);
  for (int a = 0; a < na; ++a) wm.shift(a, wm.arcs.inverse[a]) = 1.0;

  wm.evolution = wm.shift * (2.0 * wm.boundary.transpose() * wm.boundary -
                             Eigen::MatrixXd::Identity(na, na));

  wm.adjacency = Eigen::MatrixXd::Zero(nv, nv);
  for (auto [x, y] : g.edges) {
    wm.adjacency(x, y) = 1.0;
    wm.adjacency(y, x) = 1.0;
  }

  wm.discriminant = wm.boundary * wm.shift * wm.boundary.transpose();

  if (g.is_regular()) {
    const int k = g.degree.front();
    RationalMatrix exact(nv, nv);
    for (auto [x, y] : g.edges) {
      exact.at(x, y) = make_rat(1, k);
      exact.at(y, x) = make_rat(1, k);
    }
    wm.discriminant_exact = std::move(exact);
  }
  return wm;
}

ArcState vertex_type_state(const WalkMatrices& wm, int x) {
  if (x < 0 || x >= wm.graph.vertex_count)
    throw DomainError("vertex_type_state: vertex out of range");
  ArcState state;
  state.amplitudes = Eigen::VectorXcd::Zero(wm.arcs.size());
  const double w = 1.0 / std::sqrt(static_cast<double>(wm.graph.degree[x]));
  for (int a : wm.arcs.in_arcs[x]) state.amplitudes[a] = w;
  return state;
}

ArcState evolve(const Eigen::MatrixXd& evolution, const ArcState& start, int tau) {
  if (tau < 0) throw std::invalid_argument("evolve: negative time");
  if (evolution.cols() != start.amplitudes.size())
    throw std::invalid_argument("evolve: dimension mismatch");
  ArcState state = start;
  Eigen::VectorXd re = state.amplitudes.real();
  Eigen::VectorXd im = state.amplitudes.imag();
  for (int t = 0; t < tau; ++t) {
    re = evolution * re;
    im = evolution * im;
  }
  state.amplitudes = re.cast<std::complex<double>>() +
                     std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
  return state;
}

FidelityTrace fidelity_trace(const Eigen::MatrixXd& evolution, const ArcState& phi,
                             const ArcState& psi, int tau_max, double pst_tol) {
  if (tau_max < 1) throw std::invalid_argument("fidelity_trace: tau_max must be at least 1");
  FidelityTrace trace;
  Eigen::VectorXd re = phi.amplitudes.real();
  Eigen::VectorXd im = phi.amplitudes.imag();
  for (int tau = 1; tau <= tau_max; ++tau) {
    re = evolution * re;
    im = evolution * im;
    Eigen::VectorXcd cur = re.cast<std::complex<double>>() +
                           std::complex<double>(0.0, 1.0) * im.cast<std::complex<double>>();
    const std::complex<double> overlap = psi.amplitudes.dot(cur);  // <psi, U^tau phi>
    const double fid = std::abs(overlap);
    trace.times.push_back(tau);
    trace.fidelities.push_back(fid);
    if (fid >= 1.0 - pst_tol) {
      // Phase check: the state must actually be overlap * psi.
      const double dev = (cur - overlap * psi.amplitudes).lpNorm<Eigen::Infinity>();
      if (dev <= tol::kStateMatch) trace.hits.push_back({tau, overlap});
    }
  }
  return trace;
}

double chebyshev_identity_max_deviation(const WalkMatrices& wm, int tau_max) {
  if (tau_max < 0) throw std::invalid_argument("chebyshev_identity_max_deviation: negative bound");
  const int na = wm.arcs.size();
  Eigen::MatrixXd walk_power = Eigen::MatrixXd::Identity(na, na);  // U^tau
  Eigen::MatrixXd prev_poly, cur_poly;                             // T_{tau}(P)
  double max_dev = 0.0;
  for (int tau = 0; tau <= tau_max; ++tau) {
    if (tau == 0) {
      cur_poly = Eigen::MatrixXd::Identity(wm.graph.vertex_count, wm.graph.vertex_count);
    } else if (tau == 1) {
      prev_poly = cur_poly;
      cur_poly = wm.discriminant;
    } else {
      Eigen::MatrixXd next = 2.0 * wm.discriminant * cur_poly - prev_poly;
      prev_poly = std::move(cur_poly);
      cur_poly = std::move(next);
    }
    const Eigen::MatrixXd folded = wm.boundary * walk_power * wm.boundary.transpose();
    max_dev = std::max(max_dev, (folded - cur_poly).cwiseAbs().maxCoeff());
    if (tau < tau_max) walk_power = wm.evolution * walk_power;
  }
  return max_dev;
}

}  // namespace pstwalk
