#pragma once

// Transfer decision machinery: the cosine-angle recognizer, the polynomial
// criterion T_tau(P) e_x = gamma e_y, the per-eigenvalue projector/witness
// criterion, and the minimum-time search with an always-on brute-force
// cross-check.

#include <optional>
#include <string>
#include <vector>

#include "pstwalk/spectral.hpp"
#include "pstwalk/walk.hpp"

namespace pstwalk {

enum class Parity { kEven, kOdd };

// Witness that lambda = cos(j pi / tau). The exact flag records whether the
// identity was decided in a cyclotomic field or by numeric rounding.
struct CosAngleWitness {
  int j = 0;
  Parity parity = Parity::kEven;
  bool exact = false;
};

// Finds j in [0, tau] with lambda = cos(j pi / tau), or reports absence.
// With an exact tag the equality 2*lambda = zeta_{2 tau}^j + zeta_{2 tau}^{-j}
// is decided in the compositum of the tag's field and Q(zeta_{2 tau});
// fields of degree beyond phi_cap fall back to the numeric test.
std::optional<CosAngleWitness> recognize_cos_angle(double lambda, const CycloElem* tag,
                                                   int tau, int phi_cap = tol::kPhiCap,
                                                   double numeric_tol = tol::kCosAngle);

struct ClassWitness {
  int class_id;
  double value;
  SignRelation sign;
  std::optional<CosAngleWitness> witness;  // absent for classes outside the support
};

struct CriterionResult {
  bool holds = false;
  std::optional<int> gamma;            // +1 or -1 when holds
  std::vector<ClassWitness> classes;   // criterion-C detail
  std::string detail;
};

// T_tau(P) e_x = gamma e_y up to match_tol, gamma snapped to +-1.
// Regular graphs must come out with gamma = +1; anything else trips an
// internal-inconsistency error.
CriterionResult pst_criterion_b(const WalkMatrices& wm, int x, int y, int tau,
                                double match_tol = tol::kStateMatch);

// The per-eigenvalue conditions: no mixed projector sign, and every class
// in the support of e_x carries a cosine witness whose parity matches the
// sign pattern for a single gamma.
CriterionResult pst_criterion_c(const SpectralDecomposition& dec, int x, int y, int tau,
                                double match_tol = tol::kStateMatch,
                                double support_tol = tol::kSupport,
                                int phi_cap = tol::kPhiCap);

struct EvidenceItem {
  std::string criterion;
  bool pass;
  std::string details;
};

struct PSTVerdict {
  bool occurs = false;
  int source = 0;
  std::optional<int> target;
  std::optional<int> tau_min;
  std::optional<int> gamma;
  std::vector<int> co_targets;  // every target passing at tau_min; target is the smallest
  std::optional<std::string> case_label;
  std::vector<EvidenceItem> evidence;
};

// Scans tau = 1..tau_max. With a circulant spec the candidate target is
// pruned to x + n/2 (and to nothing when n is odd); otherwise every y != x
// is tried. Each polynomial-criterion hit is cross-checked against the
// simulated walk; any boolean disagreement raises
// InternalInconsistencyError.
PSTVerdict search_min_pst(const WalkMatrices& wm, int x, int tau_max,
                          const CirculantSpec* spec = nullptr,
                          double pst_tol = tol::kPstFidelity,
                          double match_tol = tol::kStateMatch);

}  // namespace pstwalk
