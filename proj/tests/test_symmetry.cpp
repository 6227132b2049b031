#include <doctest.h>

#include "pstwalk/classifier.hpp"
#include "pstwalk/errors.hpp"
#include "pstwalk/symmetry.hpp"

using namespace pstwalk;

TEST_SUITE_BEGIN("symmetry");

TEST_CASE("rotation and inversion basics") {
  const CirculantSpec c6 = CirculantSpec::make(6, {1});
  const Graph g6 = build_circulant(c6);
  const VertexAutomorphism rot = circulant_rotation(g6, c6, 1);
  CHECK(rot.apply(0) == 1);
  CHECK(rot.apply(1) == 2);
  CHECK(g6.has_edge(rot.apply(0), rot.apply(1)));

  const CirculantSpec spec = CirculantSpec::make(6, {1, 2});
  const Graph g = build_circulant(spec);
  const VertexAutomorphism inv = circulant_inversion(g, spec);
  CHECK(inv.apply(0) == 0);
  CHECK(inv.apply(3) == 3);
  CHECK(inv.apply(1) == 5);

  const CirculantSpec c5 = CirculantSpec::make(5, {1});
  const VertexAutomorphism inv5 = circulant_inversion(build_circulant(c5), c5);
  int fixed = 0;
  for (int v = 0; v < 5; ++v) {
    if (inv5.apply(v) == v) ++fixed;
  }
  CHECK(fixed == 1);
}

TEST_CASE("permutation matrices are orthogonal and act on basis vectors") {
  const CirculantSpec spec = CirculantSpec::make(8, {1, 3});
  const Graph g = build_circulant(spec);
  const VertexAutomorphism rot = circulant_rotation(g, spec, 3);
  CHECK((rot.matrix.transpose() * rot.matrix - Eigen::MatrixXd::Identity(8, 8))
            .cwiseAbs()
            .maxCoeff() == 0.0);
  for (int x = 0; x < 8; ++x) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(8);
    e[x] = 1.0;
    const Eigen::VectorXd image = rot.matrix * e;
    CHECK(image[rot.apply(x)] == 1.0);
  }
}

TEST_CASE("non-automorphisms are rejected at construction") {
  const Graph c4 = build_circulant(CirculantSpec::make(4, {1}));
  CHECK_THROWS_AS(make_vertex_automorphism(c4, {1, 0, 2, 3}), DomainError);
  CHECK_THROWS_AS(make_vertex_automorphism(c4, {0, 0, 2, 3}), DomainError);
  CHECK_THROWS_AS(make_vertex_automorphism(c4, {0, 1, 2}), DomainError);
}

TEST_CASE("intertwining identities hold for dihedral generators") {
  for (const CirculantSpec& spec : enumerate_connected_circulants(12)) {
    const Graph g = build_circulant(spec);
    const WalkMatrices wm = build_walk_matrices(g);
    CHECK(verify_intertwining(wm, circulant_rotation(g, spec, 1)) <= tol::kStructure);
    CHECK(verify_intertwining(wm, circulant_inversion(g, spec)) <= tol::kStructure);
  }
}

TEST_CASE("identity automorphism intertwines exactly") {
  const CirculantSpec spec = CirculantSpec::make(6, {1, 2});
  const Graph g = build_circulant(spec);
  const WalkMatrices wm = build_walk_matrices(g);
  CHECK(verify_intertwining(wm, circulant_rotation(g, spec, 0)) == 0.0);
}

TEST_CASE("transfers transport along automorphisms") {
  SUBCASE("rotating the even cycle instance") {
    const CirculantSpec spec = CirculantSpec::make(6, {1});
    const Graph g = build_circulant(spec);
    const WalkMatrices wm = build_walk_matrices(g);
    const VertexAutomorphism rot = circulant_rotation(g, spec, 1);
    CHECK(pst_transport_check(wm, rot, 0, 3, 3, 1.0));  // 1 -> 4 at the same time
  }
  SUBCASE("identity and inversion on the odd complementary family") {
    const CirculantSpec spec = CirculantSpec::make(6, {1, 2});
    const Graph g = build_circulant(spec);
    const WalkMatrices wm = build_walk_matrices(g);
    CHECK(pst_transport_check(wm, circulant_rotation(g, spec, 0), 0, 3, 6, 1.0));
    CHECK(pst_transport_check(wm, circulant_inversion(g, spec), 0, 3, 6, 1.0));
  }
}

TEST_CASE("fixing-group obstruction") {
  SUBCASE("triangle with a transposition") {
    const Graph k3 = build_circulant(CirculantSpec::make(3, {1}));
    const VertexAutomorphism swap = make_vertex_automorphism(k3, {0, 2, 1});
    CHECK(fixing_group_obstruction(0, 1, {swap}));
    CHECK_FALSE(fixing_group_obstruction(0, 0, {swap}));
  }
  SUBCASE("inversion obstructs everything except the antipode") {
    const CirculantSpec spec = CirculantSpec::make(8, {1, 3});
    const Graph g = build_circulant(spec);
    const VertexAutomorphism inv = circulant_inversion(g, spec);
    for (int y = 1; y < 8; ++y) {
      CHECK(fixing_group_obstruction(0, y, {inv}) == (y != 4));
    }
  }
  SUBCASE("odd order: every pair is obstructed by a reflection") {
    for (int n : {5, 7, 9}) {
      const CirculantSpec spec = CirculantSpec::make(n, {1, 2});
      const Graph g = build_circulant(spec);
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          if (x == y) continue;
          // v -> 2x - v fixes x; for odd n it moves every other vertex.
          std::vector<int> mapping(n);
          for (int v = 0; v < n; ++v) mapping[v] = ((2 * x - v) % n + n) % n;
          const VertexAutomorphism reflect = make_vertex_automorphism(g, std::move(mapping));
          CHECK(fixing_group_obstruction(x, y, {reflect}));
        }
      }
    }
  }
}

TEST_SUITE_END();
