#pragma once

// Spectral decomposition of the discriminant. Circulants get an exact
// path: eigenvalues carry cyclotomic tags built from root-of-unity sums,
// eigenvectors come from the character formula, and eigenvalue coincidence
// is decided by exact tag equality. Everything else goes through a numeric
// symmetric eigensolver with tolerance-based grouping.

#include <Eigen/Dense>

#include <optional>
#include <vector>

#include "pstwalk/cyclotomic.hpp"
#include "pstwalk/graph.hpp"
#include "pstwalk/tolerances.hpp"

namespace pstwalk {

struct EigenClass {
  double value = 0.0;
  std::optional<CycloElem> exact_tag;  // k*lambda as sum of roots, over k
  std::vector<int> indices;            // circulant path: j with lambda_j = value
  Eigen::MatrixXcd projector;
};

struct SpectralDecomposition {
  std::vector<EigenClass> classes;  // sorted by descending eigenvalue
  Eigen::MatrixXd source;           // the matrix decomposed
  std::optional<CirculantSpec> spec;  // present on the exact path

  bool exact() const { return spec.has_value(); }
  int dimension() const { return static_cast<int>(source.rows()); }
};

// Per-index eigenvalues of the discriminant of the circulant:
// lambda_j = (1/|S|) sum_{s in S} zeta_n^{js}, exact tag plus float value.
std::vector<std::pair<CycloElem, double>> circulant_eigenvalues(const CirculantSpec& spec);

// Exact path: indices grouped by tag equality, projectors from the
// character eigenvectors.
SpectralDecomposition decompose(const CirculantSpec& spec);

// Numeric path for a real symmetric matrix. Eigenvalues closer than
// group_tol are merged; throws AmbiguousGroupingError when two resulting
// groups sit closer than gap_tol.
SpectralDecomposition decompose(const Eigen::MatrixXd& p,
                                double group_tol = tol::kEigenGroup,
                                double gap_tol = tol::kEigenGap);

// Class ids whose projector does not annihilate v.
std::vector<int> eigenvalue_support(const SpectralDecomposition& dec,
                                    const Eigen::VectorXd& v,
                                    double support_tol = tol::kSupport);

enum class SignRelation { kPlus, kMinus, kMixed };

// Per class: +1 when E e_x = E e_y, -1 when E e_x = -E e_y, mixed
// otherwise. The exact path decides by the parity of j*(y-x) mod n; classes
// that annihilate both vectors count as +1 (they constrain nothing).
std::vector<SignRelation> projector_sign_relation(const SpectralDecomposition& dec,
                                                  int x, int y,
                                                  double match_tol = tol::kStateMatch);

}  // namespace pstwalk
