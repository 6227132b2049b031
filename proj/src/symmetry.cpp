#include "pstwalk/symmetry.hpp"

#include <algorithm>
#include <numeric>

#include "pstwalk/errors.hpp"

namespace pstwalk {

VertexAutomorphism make_vertex_automorphism(const Graph& g, std::vector<int> mapping) {
  const int n = g.vertex_count;
  if (static_cast<int>(mapping.size()) != n)
    throw DomainError("automorphism: mapping size must equal the vertex count");
  std::vector<char> hit(n, 0);
  for (int v : mapping) {
    if (v < 0 || v >= n || hit[v]) throw DomainError("automorphism: mapping is not a bijection");
    hit[v] = 1;
  }
  for (auto [x, y] : g.edges) {
    if (!g.has_edge(mapping[x], mapping[y]))
      throw DomainError("automorphism: edge set is not preserved");
  }
  // Bijectivity makes the edge count argument symmetric, so preservation of
  // all edges implies preservation of non-edges too.
  VertexAutomorphism aut;
  aut.mapping = std::move(mapping);
  aut.matrix = Eigen::MatrixXd::Zero(n, n);
  for (int y = 0; y < n; ++y) aut.matrix(aut.mapping[y], y) = 1.0;
  return aut;
}

ArcAutomorphism induce_arc_automorphism(const ArcSpace& arcs, const VertexAutomorphism& aut) {
  ArcAutomorphism out;
  const int na = arcs.size();
  out.mapping.resize(na);
  for (int a = 0; a < na; ++a) {
    const int image = arcs.index_of(aut.apply(arcs.origin(a)), aut.apply(arcs.terminus(a)));
    if (image < 0)
      throw InternalInconsistencyError("arc automorphism: image arc missing from the arc space");
    out.mapping[a] = image;
  }
  out.matrix = Eigen::MatrixXd::Zero(na, na);
  for (int b = 0; b < na; ++b) out.matrix(out.mapping[b], b) = 1.0;
  return out;
}

VertexAutomorphism circulant_rotation(const Graph& g, const CirculantSpec& spec, int z) {
  std::vector<int> mapping(spec.n);
  for (int v = 0; v < spec.n; ++v) mapping[v] = (v + (z % spec.n) + spec.n) % spec.n;
  return make_vertex_automorphism(g, std::move(mapping));
}

VertexAutomorphism circulant_inversion(const Graph& g, const CirculantSpec& spec) {
  std::vector<int> mapping(spec.n);
  for (int v = 0; v < spec.n; ++v) mapping[v] = (spec.n - v) % spec.n;
  return make_vertex_automorphism(g, std::move(mapping));
}

double verify_intertwining(const WalkMatrices& wm, const VertexAutomorphism& aut) {
  const ArcAutomorphism arc_aut = induce_arc_automorphism(wm.arcs, aut);
  const double boundary_dev =
      (wm.boundary.transpose() * aut.matrix - arc_aut.matrix * wm.boundary.transpose())
          .cwiseAbs()
          .maxCoeff();
  const double evolution_dev =
      (wm.evolution * arc_aut.matrix - arc_aut.matrix * wm.evolution).cwiseAbs().maxCoeff();
  return std::max(boundary_dev, evolution_dev);
}

bool pst_transport_check(const WalkMatrices& wm, const VertexAutomorphism& aut, int x, int y,
                         int tau, double gamma, double match_tol) {
  const ArcState start = vertex_type_state(wm, aut.apply(x));
  const ArcState expected = vertex_type_state(wm, aut.apply(y));
  const ArcState moved = evolve(wm.evolution, start, tau);
  const double dev =
      (moved.amplitudes - gamma * expected.amplitudes).lpNorm<Eigen::Infinity>();
  return dev <= match_tol;
}

bool fixing_group_obstruction(int x, int y, const std::vector<VertexAutomorphism>& auts) {
  if (x == y) return false;
  for (const VertexAutomorphism& aut : auts) {
    const bool fixes_x = aut.apply(x) == x;
    const bool fixes_y = aut.apply(y) == y;
    if (fixes_x != fixes_y) return true;
  }
  return false;
}

}  // namespace pstwalk
