#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_n): canonical power-basis
// representation, conductor-changing maps, canonical integral bases built
// from per-prime exponent choices, CRT exponent decomposition, and the
// algebraic-integer membership test. Everything here is exact rational
// arithmetic; floating point appears only in the numeric embedding used as
// a cross-check.

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pstwalk/rational_linalg.hpp"
#include "pstwalk/tolerances.hpp"

namespace pstwalk {

long euler_phi(long n);

// Prime factorization of n as (p, f) with p^f || n, primes ascending.
std::vector<std::pair<long, int>> factorize(long n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
// Computed by exact division of x^n - 1 by the lower-order factors.
std::vector<Int> cyclotomic_polynomial(int n);

// Element of Q(zeta_n) as rational coefficients over the power basis
// zeta^0 .. zeta^{phi(n)-1}, kept reduced modulo the n-th cyclotomic
// polynomial. Equality is coefficient equality. Arithmetic requires equal
// conductors; callers lift to a common conductor explicitly.
class CycloElem {
 public:
  CycloElem() : conductor_(1), coeffs_(1) {}

  static CycloElem zero(int n);
  static CycloElem one(int n);
  static CycloElem from_rational(int n, const Rat& value);
  // zeta_n^k, any integer k (reduced mod n).
  static CycloElem root_power(int n, long k);
  static CycloElem from_coeffs(int n, std::vector<Rat> coeffs);

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  CycloElem operator+(const CycloElem& other) const;
  CycloElem operator-(const CycloElem& other) const;
  CycloElem operator*(const CycloElem& other) const;
  CycloElem operator-() const;
  CycloElem scaled(const Rat& s) const;
  // Complex conjugate, i.e. the field automorphism zeta -> zeta^{-1}.
  CycloElem conjugate() const;

  // Same element viewed in Q(zeta_m); m must be a multiple of the conductor.
  CycloElem lifted(int m) const;

  bool is_zero() const;
  bool is_rational() const;
  // Defined only when is_rational().
  Rat rational_value() const;

  bool operator==(const CycloElem& other) const = default;

  // Numeric value at zeta_n = exp(2 pi i / n).
  std::complex<double> embed() const;

  // Human-readable form, e.g. "1/2 + z12^3 - z12^5".
  std::string to_string() const;

 private:
  int conductor_;
  std::vector<Rat> coeffs_;
};

// Rewrites an element whose conductor is n = 2l with l odd into Q(zeta_l),
// using zeta_{2l}^c = (-1)^c zeta_l^{eps(c)}.
CycloElem to_odd_conductor(const CycloElem& e);

// The exponent-halving map for odd l: returns (sign, e) with
// zeta_{2l}^c = sign * zeta_l^e, sign in {+1,-1}, e in [0, l).
struct EpsilonImage {
  int sign;
  long exponent;
};
EpsilonImage epsilon_map(long l, long c);

// Per-prime component of an exponent: zeta_n^x = prod_j zeta_{p_j^{f_j}}^{x_j}.
// pi/theta split x_j = pi * p^{f-1} + theta for odd p, and
// x_j = pi * 2^{f-2} + theta for p = 2 with f >= 2; undefined for p = 2, f = 1.
struct PrimeComponent {
  long p;
  int f;
  long prime_power;  // p^f
  long component;    // x_j in [p^f)
  std::optional<long> pi;
  std::optional<long> theta;
};

struct ExponentDecomposition {
  int n;
  long exponent;  // x in [n)
  std::vector<PrimeComponent> parts;
};

ExponentDecomposition crt_decompose(int n, long x);
// Inverse direction: components x_j (one per prime factor, ascending primes)
// back to the exponent in [n).
long crt_compose(int n, const std::vector<long>& components);

// pi/theta values of -zeta_n^x via the sign-absorption rule (requires
// n divisible by 4), cross-verified against direct decomposition of the
// shifted exponent.
std::vector<PrimeComponent> negate_pi_theta(int n, long x);

// pi^(3) of zeta_n^{-x} via the inversion rule (requires n divisible by 3),
// cross-verified against direct decomposition.
long invert_pi3(int n, long x);

// Canonical integral basis of Q(zeta_n) built from per-prime choices:
// for each prime factor p, a set A_p of phi(p*) residues in [p) (A_2 is
// forced to {0,1}), with B_p = [p^f / p*]. The basis elements are the
// products zeta_{p*}^{a} zeta_{p^f}^{b}; each is a power of zeta_n.
struct BosmaBasis {
  int conductor;
  std::vector<std::pair<long, int>> factors;
  std::map<long, std::vector<int>> a_choices;
  std::vector<long> exponents;       // ascending, size phi(n)
  std::vector<CycloElem> elements;   // zeta_n^e for e in exponents
};

BosmaBasis bosma_basis(int n, const std::map<long, std::vector<int>>& a_choices = {});

// Coordinates of e in the given basis (exact). Throws if the basis matrix
// is singular, which would violate the basis invariant.
std::vector<Rat> basis_coordinates(const CycloElem& e, const BosmaBasis& basis);

// True iff every basis coordinate is an integer.
bool is_algebraic_integer(const CycloElem& e, const BosmaBasis& basis);

// Exact rank test: the elements (common conductor required) are linearly
// independent over Q.
bool q_linear_independent(const std::vector<CycloElem>& elems);

// Integrality of Delta = (zeta_{2l}^a + zeta_{2l}^{-a} + zeta_{2l}^b + zeta_{2l}^{-b})/2
// for a 4-regular connection set {±a, ±b} on Z_{2l}. When 2l = 2 mod 4 the
// element is rewritten into Q(zeta_l) first; the basis choice follows the
// exponents of the surviving monomials.
struct DeltaIntegrality {
  int l, a, b;                  // canonicalized: 1 <= a < b <= l-1
  CycloElem delta;              // in Q(zeta_{2l})
  int working_conductor;        // 2l, or l when 2l = 2 mod 4
  CycloElem reduced_delta;      // delta viewed at the working conductor
  BosmaBasis basis;
  std::vector<Rat> coordinates;
  bool integral;
};

DeltaIntegrality delta_integrality(int l, int a, int b);

}  // namespace pstwalk
