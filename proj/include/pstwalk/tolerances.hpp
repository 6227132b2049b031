#pragma once

// Numerical tolerances used across the toolkit. Functions take these as
// defaulted parameters so the CLI can override them; the values here are
// the documented defaults.
namespace pstwalk::tol {

// Fidelity threshold for declaring a perfect-transfer hit: |<U^t phi, psi>| >= 1 - kPstFidelity.
inline constexpr double kPstFidelity = 1e-9;

// Entrywise match for state vectors: ||U^t phi - gamma psi||_inf and the
// polynomial-criterion vector checks.
inline constexpr double kStateMatch = 1e-8;

// Numeric eigenvalue grouping and the mandatory inter-group gap.
inline constexpr double kEigenGroup = 1e-9;
inline constexpr double kEigenGap = 1e-6;

// ||E_i v|| threshold deciding eigenvalue support membership.
inline constexpr double kSupport = 1e-9;

// Structural identities (R^2 = I, d d^T = I, intertwining relations).
inline constexpr double kStructure = 1e-12;

// Projector algebra (idempotence, orthogonality, completeness).
inline constexpr double kProjector = 1e-10;

// Max deviation allowed for the walk/polynomial transfer identity.
inline constexpr double kChebIdentity = 1e-9;

// Numeric cosine-angle recognizer: |lambda - cos(j pi / tau)| <= kCosAngle.
inline constexpr double kCosAngle = 1e-9;

// Exact cyclotomic operations refuse fields of degree beyond this cap.
inline constexpr int kPhiCap = 512;

}  // namespace pstwalk::tol
