#include <doctest.h>

#include <cmath>

#include "pstwalk/errors.hpp"
#include "pstwalk/spectral.hpp"
#include "pstwalk/walk.hpp"

using namespace pstwalk;

namespace {

std::vector<CirculantSpec> corpus() {
  return {
      CirculantSpec::make(4, {1}),     CirculantSpec::make(4, {1, 2}),
      CirculantSpec::make(5, {1}),     CirculantSpec::make(6, {1}),
      CirculantSpec::make(6, {1, 2}),  CirculantSpec::make(6, {1, 3}),
      CirculantSpec::make(8, {1, 3}),  CirculantSpec::make(10, {1, 2}),
      CirculantSpec::make(12, {1, 5}), CirculantSpec::make(10, {3, 5}),
  };
}

Eigen::VectorXd basis_vector(int n, int x) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v[x] = 1.0;
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("spectral");

TEST_CASE("four cycle spectrum") {
  const SpectralDecomposition dec = decompose(CirculantSpec::make(4, {1}));
  REQUIRE(dec.classes.size() == 3);
  CHECK(dec.classes[0].value == doctest::Approx(1.0));
  CHECK(dec.classes[1].value == doctest::Approx(0.0));
  CHECK(dec.classes[2].value == doctest::Approx(-1.0));
  CHECK(dec.classes[0].indices.size() == 1);
  CHECK(dec.classes[1].indices.size() == 2);
  CHECK(dec.classes[2].indices.size() == 1);
}

TEST_CASE("complete graph spectrum") {
  const SpectralDecomposition dec = decompose(CirculantSpec::make(4, {1, 2}));
  REQUIRE(dec.classes.size() == 2);
  CHECK(dec.classes[0].value == doctest::Approx(1.0));
  CHECK(dec.classes[1].value == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("projector algebra on the corpus") {
  for (const CirculantSpec& spec : corpus()) {
    const SpectralDecomposition dec = decompose(spec);
    const int n = spec.n;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd weighted = Eigen::MatrixXcd::Zero(n, n);
    for (size_t i = 0; i < dec.classes.size(); ++i) {
      const Eigen::MatrixXcd& e = dec.classes[i].projector;
      CHECK((e - e.adjoint()).cwiseAbs().maxCoeff() <= tol::kProjector);
      CHECK((e * e - e).cwiseAbs().maxCoeff() <= tol::kProjector);
      for (size_t j = i + 1; j < dec.classes.size(); ++j) {
        CHECK((e * dec.classes[j].projector).cwiseAbs().maxCoeff() <= tol::kProjector);
      }
      sum += e;
      weighted += dec.classes[i].value * e;
    }
    CHECK((sum - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff() <= tol::kProjector);
    CHECK((weighted - dec.source.cast<std::complex<double>>()).cwiseAbs().maxCoeff() <=
          tol::kProjector);
  }
}

TEST_CASE("spectral radius never exceeds one") {
  for (const CirculantSpec& spec : corpus()) {
    for (const auto& [tag, value] : circulant_eigenvalues(spec)) {
      CHECK(std::abs(value) <= 1.0 + tol::kStructure);
    }
  }
}

TEST_CASE("exact tags agree with numeric eigenvalues") {
  for (const CirculantSpec& spec : corpus()) {
    const SpectralDecomposition exact = decompose(spec);
    const WalkMatrices wm = build_walk_matrices(build_circulant(spec));
    const SpectralDecomposition numeric = decompose(wm.discriminant);
    REQUIRE(exact.classes.size() == numeric.classes.size());
    for (size_t i = 0; i < exact.classes.size(); ++i) {
      CHECK(exact.classes[i].value == doctest::Approx(numeric.classes[i].value).epsilon(1e-10));
      CHECK(std::abs(exact.classes[i].exact_tag->embed().real() - exact.classes[i].value) <=
            1e-10);
      CHECK(std::abs(exact.classes[i].exact_tag->embed().imag()) <= 1e-10);
      CHECK((exact.classes[i].projector - numeric.classes[i].projector).cwiseAbs().maxCoeff() <=
            1e-8);
    }
  }
}

TEST_CASE("cubic circulant eigenvalue formula") {
  // lambda_j = (2 cos(a j pi / l) + (-1)^j) / 3 for S = {±a, l} on Z_{2l}.
  const int l = 5, a = 2;
  const auto evals = circulant_eigenvalues(CirculantSpec::make(2 * l, {a, l}));
  for (int j = 0; j < 2 * l; ++j) {
    const double expected =
        (2.0 * std::cos(a * j * M_PI / l) + ((j % 2 == 0) ? 1.0 : -1.0)) / 3.0;
    CHECK(evals[j].second == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("complementary pair eigenvalue formula") {
  // a + b = l: lambda_j = 0 for odd j, cos(a j pi / l) for even j.
  const int l = 6, a = 1, b = 5;
  const auto evals = circulant_eigenvalues(CirculantSpec::make(2 * l, {a, b}));
  for (int j = 0; j < 2 * l; ++j) {
    const double expected = (j % 2 == 1) ? 0.0 : std::cos(a * j * M_PI / l);
    CHECK(evals[j].second == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("row sums give eigenvalue one at index zero") {
  for (const CirculantSpec& spec : corpus()) {
    const auto evals = circulant_eigenvalues(spec);
    CHECK(evals[0].second == doctest::Approx(1.0));
    CHECK(evals[0].first == CycloElem::one(spec.n));
  }
}

TEST_CASE("support of a standard basis vector is the whole spectrum on circulants") {
  for (const CirculantSpec& spec : corpus()) {
    const SpectralDecomposition dec = decompose(spec);
    // Every class keeps a nonzero index set, which is the exact form of the
    // support statement; the numeric support agrees.
    for (const EigenClass& cls : dec.classes) CHECK(!cls.indices.empty());
    const auto support = eigenvalue_support(dec, basis_vector(spec.n, 0));
    CHECK(support.size() == dec.classes.size());
  }
}

TEST_CASE("support of an eigenvector is a single class") {
  const CirculantSpec spec = CirculantSpec::make(6, {1});
  const SpectralDecomposition dec = decompose(spec);
  const Eigen::VectorXd ones = Eigen::VectorXd::Constant(6, 1.0 / std::sqrt(6.0));
  const auto support = eigenvalue_support(dec, ones);
  REQUIRE(support.size() == 1);
  CHECK(dec.classes[support[0]].value == doctest::Approx(1.0));
}

TEST_CASE("six cycle support classes") {
  const SpectralDecomposition dec = decompose(CirculantSpec::make(6, {1}));
  REQUIRE(dec.classes.size() == 4);
  CHECK(dec.classes[0].value == doctest::Approx(1.0));
  CHECK(dec.classes[1].value == doctest::Approx(0.5));
  CHECK(dec.classes[2].value == doctest::Approx(-0.5));
  CHECK(dec.classes[3].value == doctest::Approx(-1.0));
}

TEST_CASE("projector sign relations") {
  SUBCASE("the 2 mod 4 family: zero class flips, others agree") {
    const CirculantSpec spec = CirculantSpec::make(12, {1, 5});
    const SpectralDecomposition dec = decompose(spec);
    const auto signs = projector_sign_relation(dec, 0, 6);
    for (size_t i = 0; i < dec.classes.size(); ++i) {
      if (std::abs(dec.classes[i].value) < 1e-12) {
        CHECK(signs[i] == SignRelation::kMinus);
      } else {
        CHECK(signs[i] == SignRelation::kPlus);
      }
    }
  }
  SUBCASE("identical vertices always agree") {
    const SpectralDecomposition dec = decompose(CirculantSpec::make(8, {1, 3}));
    for (const SignRelation s : projector_sign_relation(dec, 2, 2)) {
      CHECK(s == SignRelation::kPlus);
    }
  }
  SUBCASE("the 0 mod 4 family mixes parities in the zero class") {
    const SpectralDecomposition dec = decompose(CirculantSpec::make(8, {1, 3}));
    const auto signs = projector_sign_relation(dec, 0, 4);
    bool found_mixed = false;
    for (size_t i = 0; i < dec.classes.size(); ++i) {
      if (std::abs(dec.classes[i].value) < 1e-12 && signs[i] == SignRelation::kMixed)
        found_mixed = true;
    }
    CHECK(found_mixed);
  }
  SUBCASE("numeric path agrees with the exact path") {
    const CirculantSpec spec = CirculantSpec::make(12, {1, 5});
    const WalkMatrices wm = build_walk_matrices(build_circulant(spec));
    const auto exact_signs = projector_sign_relation(decompose(spec), 0, 6);
    const auto numeric_signs = projector_sign_relation(decompose(wm.discriminant), 0, 6);
    CHECK(exact_signs == numeric_signs);
  }
}

TEST_CASE("ambiguous numeric grouping is reported") {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 2);
  m(0, 0) = 0.0;
  m(1, 1) = 5e-8;  // above the grouping width, below the required gap
  CHECK_THROWS_AS(decompose(m), AmbiguousGroupingError);
}

TEST_SUITE_END();
