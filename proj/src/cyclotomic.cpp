#include "pstwalk/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pstwalk/errors.hpp"

namespace pstwalk {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

long mod_reduce(long x, long n) {
  long r = x % n;
  if (r < 0) r += n;
  return r;
}

long mod_inverse(long a, long m) {
  long t = 0, new_t = 1;
  long r = m, new_r = mod_reduce(a, m);
  while (new_r != 0) {
    long q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("mod_inverse: not invertible");
  return mod_reduce(t, m);
}

// Exact division of integer polynomials; divisor must be monic and divide
// the dividend exactly. Coefficients are constant-term first.
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const int dn = static_cast<int>(num.size()) - 1;
  const int dd = static_cast<int>(den.size()) - 1;
  if (dd > dn) throw std::logic_error("poly_divide_exact: degree underflow");
  std::vector<Int> quot(dn - dd + 1);
  for (int i = dn; i >= dd; --i) {
    Int c = num[i];
    if (c == 0) continue;
    quot[i - dd] = c;
    for (int k = 0; k <= dd; ++k) num[i - dd + k] -= c * den[k];
  }
  for (const Int& c : num) {
    if (c != 0) throw std::logic_error("poly_divide_exact: nonzero remainder");
  }
  return quot;
}

// Per-conductor data: the cyclotomic polynomial and the full table of
// x^k mod Phi_n for k in [0, n). The table entries are integer vectors of
// length phi(n); they stay small for the conductors this toolkit touches.
struct CycloContext {
  int n = 1;
  int phi = 1;
  std::vector<Int> min_poly;
  std::vector<std::vector<Int>> powers;
};

const CycloContext& cyclo_context(int n);

std::vector<Int> compute_cyclotomic(int n) {
  // x^n - 1 divided by all lower-order cyclotomic factors.
  std::vector<Int> poly(n + 1);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    poly = poly_divide_exact(std::move(poly), cyclo_context(d).min_poly);
  }
  return poly;
}

CycloContext build_context(int n) {
  CycloContext ctx;
  ctx.n = n;
  ctx.phi = static_cast<int>(euler_phi(n));
  ctx.min_poly = (n == 1) ? std::vector<Int>{-1, 1} : compute_cyclotomic(n);
  ctx.powers.resize(n);
  ctx.powers[0].assign(ctx.phi, 0);
  ctx.powers[0][0] = 1;
  for (int k = 1; k < n; ++k) {
    // Multiply the previous power by x, then fold the leading term back
    // with the monic minimal polynomial.
    const std::vector<Int>& prev = ctx.powers[k - 1];
    std::vector<Int> cur(ctx.phi + 1);
    for (int i = 0; i < ctx.phi; ++i) cur[i + 1] = prev[i];
    if (cur[ctx.phi] != 0) {
      Int c = cur[ctx.phi];
      for (int i = 0; i < ctx.phi; ++i) cur[i] -= c * ctx.min_poly[i];
    }
    cur.resize(ctx.phi);
    ctx.powers[k] = std::move(cur);
  }
  return ctx;
}

const CycloContext& cyclo_context(int n) {
  if (n < 1) throw std::invalid_argument("cyclo_context: conductor must be positive");
  // Recursive: building Phi_n walks the divisor lattice.
  static std::recursive_mutex mutex;
  static std::map<int, std::unique_ptr<CycloContext>> cache;
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, std::make_unique<CycloContext>(build_context(n))).first;
  }
  return *it->second;
}

// Reduce a coefficient vector of degree < 2*phi - 1 modulo Phi_n.
std::vector<Rat> reduce_mod_minpoly(std::vector<Rat> v, const CycloContext& ctx) {
  for (int i = static_cast<int>(v.size()) - 1; i >= ctx.phi; --i) {
    if (v[i] == 0) continue;
    Rat c = v[i];
    v[i] = 0;
    for (int k = 0; k < ctx.phi; ++k) {
      if (ctx.min_poly[k] != 0) v[i - ctx.phi + k] -= c * Rat(ctx.min_poly[k]);
    }
  }
  v.resize(ctx.phi);
  return v;
}

void require_same_conductor(const CycloElem& a, const CycloElem& b) {
  if (a.conductor() != b.conductor())
    throw DomainError("CycloElem: conductor mismatch (lift to a common conductor first)");
}

}  // namespace

long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::pair<long, int>> factorize(long n) {
  std::vector<std::pair<long, int>> out;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      int f = 0;
      while (m % p == 0) {
        m /= p;
        ++f;
      }
      out.emplace_back(p, f);
    }
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<Int> cyclotomic_polynomial(int n) { return cyclo_context(n).min_poly; }

CycloElem CycloElem::zero(int n) {
  const CycloContext& ctx = cyclo_context(n);
  CycloElem e;
  e.conductor_ = n;
  e.coeffs_.assign(ctx.phi, Rat(0));
  return e;
}

CycloElem CycloElem::one(int n) { return from_rational(n, Rat(1)); }

CycloElem CycloElem::from_rational(int n, const Rat& value) {
  CycloElem e = zero(n);
  e.coeffs_[0] = value;
  return e;
}

CycloElem CycloElem::root_power(int n, long k) {
  const CycloContext& ctx = cyclo_context(n);
  CycloElem e = zero(n);
  const std::vector<Int>& row = ctx.powers[mod_reduce(k, n)];
  for (int i = 0; i < ctx.phi; ++i) e.coeffs_[i] = Rat(row[i]);
  return e;
}

CycloElem CycloElem::from_coeffs(int n, std::vector<Rat> coeffs) {
  const CycloContext& ctx = cyclo_context(n);
  if (static_cast<int>(coeffs.size()) != ctx.phi)
    throw std::invalid_argument("CycloElem: coefficient vector must have length phi(n)");
  CycloElem e;
  e.conductor_ = n;
  e.coeffs_ = std::move(coeffs);
  return e;
}

CycloElem CycloElem::operator+(const CycloElem& other) const {
  require_same_conductor(*this, other);
  CycloElem out = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += other.coeffs_[i];
  return out;
}

CycloElem CycloElem::operator-(const CycloElem& other) const {
  require_same_conductor(*this, other);
  CycloElem out = *this;
  for (size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= other.coeffs_[i];
  return out;
}

CycloElem CycloElem::operator*(const CycloElem& other) const {
  require_same_conductor(*this, other);
  const CycloContext& ctx = cyclo_context(conductor_);
  std::vector<Rat> prod(2 * ctx.phi - 1);
  for (int i = 0; i < ctx.phi; ++i) {
    if (coeffs_[i] == 0) continue;
    for (int j = 0; j < ctx.phi; ++j) {
      if (other.coeffs_[j] == 0) continue;
      prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  CycloElem out;
  out.conductor_ = conductor_;
  out.coeffs_ = reduce_mod_minpoly(std::move(prod), ctx);
  return out;
}

CycloElem CycloElem::operator-() const {
  CycloElem out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

CycloElem CycloElem::scaled(const Rat& s) const {
  CycloElem out = *this;
  for (Rat& c : out.coeffs_) c *= s;
  return out;
}

CycloElem CycloElem::conjugate() const {
  CycloElem out = zero(conductor_);
  for (int i = 0; i < degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    out = out + root_power(conductor_, conductor_ - i).scaled(coeffs_[i]);
  }
  return out;
}

CycloElem CycloElem::lifted(int m) const {
  if (m == conductor_) return *this;
  if (m % conductor_ != 0)
    throw DomainError("CycloElem::lifted: target conductor must be a multiple");
  const long step = m / conductor_;
  CycloElem out = zero(m);
  for (int i = 0; i < degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    out = out + root_power(m, step * i).scaled(coeffs_[i]);
  }
  return out;
}

bool CycloElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return false;
  }
  return true;
}

Rat CycloElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("CycloElem: not a rational element");
  return coeffs_[0];
}

std::complex<double> CycloElem::embed() const {
  std::complex<double> acc(0.0, 0.0);
  for (int i = 0; i < degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * kPi * i / conductor_;
    acc += coeffs_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string CycloElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < degree(); ++i) {
    if (coeffs_[i] == 0) continue;
    Rat c = coeffs_[i];
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << "z" << conductor_;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycloElem to_odd_conductor(const CycloElem& e) {
  const int n = e.conductor();
  if (n % 2 != 0 || (n / 2) % 2 == 0)
    throw DomainError("to_odd_conductor: conductor must be 2 mod 4");
  const long l = n / 2;
  CycloElem out = CycloElem::zero(static_cast<int>(l));
  for (int i = 0; i < e.degree(); ++i) {
    if (e.coeffs()[i] == 0) continue;
    const EpsilonImage img = epsilon_map(l, i);
    CycloElem term = CycloElem::root_power(static_cast<int>(l), img.exponent).scaled(e.coeffs()[i]);
    out = (img.sign > 0) ? out + term : out - term;
  }
  return out;
}

EpsilonImage epsilon_map(long l, long c) {
  if (l < 1 || l % 2 == 0) throw DomainError("epsilon_map: l must be odd and positive");
  c = mod_reduce(c, 2 * l);
  EpsilonImage img;
  if (c % 2 == 0) {
    img.sign = 1;
    img.exponent = mod_reduce(c / 2, l);
  } else {
    img.sign = -1;
    img.exponent = mod_reduce((c + l) / 2, l);
  }
  return img;
}

ExponentDecomposition crt_decompose(int n, long x) {
  if (n < 2) throw DomainError("crt_decompose: n must be at least 2");
  x = mod_reduce(x, n);
  ExponentDecomposition dec;
  dec.n = n;
  dec.exponent = x;
  for (const auto& [p, f] : factorize(n)) {
    PrimeComponent part;
    part.p = p;
    part.f = f;
    part.prime_power = 1;
    for (int i = 0; i < f; ++i) part.prime_power *= p;
    const long cofactor = n / part.prime_power;
    part.component = mod_reduce(x * mod_inverse(cofactor, part.prime_power), part.prime_power);
    if (p != 2) {
      long unit = part.prime_power / p;  // p^{f-1}
      part.pi = part.component / unit;
      part.theta = part.component % unit;
    } else if (f >= 2) {
      long unit = part.prime_power / 4;  // 2^{f-2}
      part.pi = part.component / unit;
      part.theta = part.component % unit;
    }
    // p = 2, f = 1: the split is undefined; pi/theta stay absent.
    dec.parts.push_back(part);
  }
  return dec;
}

long crt_compose(int n, const std::vector<long>& components) {
  const auto factors = factorize(n);
  if (components.size() != factors.size())
    throw std::invalid_argument("crt_compose: one component per prime factor expected");
  long acc = 0;
  for (size_t j = 0; j < factors.size(); ++j) {
    long q = 1;
    for (int i = 0; i < factors[j].second; ++i) q *= factors[j].first;
    acc = mod_reduce(acc + mod_reduce(components[j], q) * (n / q), n);
  }
  return acc;
}

std::vector<PrimeComponent> negate_pi_theta(int n, long x) {
  if (n % 4 != 0) throw DomainError("negate_pi_theta: n must be divisible by 4");
  const ExponentDecomposition base = crt_decompose(n, x);
  std::vector<PrimeComponent> out = base.parts;
  for (PrimeComponent& part : out) {
    if (part.p == 2) {
      part.pi = (*part.pi + 2) % 4;
      part.component = *part.pi * (part.prime_power / 4) + *part.theta;
    }
  }
  // -zeta_n^x = zeta_n^{x + n/2}; the rule must match direct decomposition.
  const ExponentDecomposition direct = crt_decompose(n, x + n / 2);
  for (size_t j = 0; j < out.size(); ++j) {
    if (out[j].component != direct.parts[j].component)
      throw InternalInconsistencyError("negate_pi_theta: rule disagrees with direct decomposition");
  }
  return out;
}

long invert_pi3(int n, long x) {
  if (n % 3 != 0) throw DomainError("invert_pi3: n must be divisible by 3");
  const ExponentDecomposition base = crt_decompose(n, x);
  long pi = 0, theta = 0;
  for (const PrimeComponent& part : base.parts) {
    if (part.p == 3) {
      pi = *part.pi;
      theta = *part.theta;
    }
  }
  const long result = (theta == 0) ? (3 - pi) % 3 : 2 - pi;
  const ExponentDecomposition direct = crt_decompose(n, n - x);
  for (const PrimeComponent& part : direct.parts) {
    if (part.p == 3 && *part.pi != result)
      throw InternalInconsistencyError("invert_pi3: rule disagrees with direct decomposition");
  }
  return result;
}

BosmaBasis bosma_basis(int n, const std::map<long, std::vector<int>>& a_choices) {
  if (n < 2) throw DomainError("bosma_basis: conductor must be at least 2");
  if (n % 4 == 2)
    throw DomainError("bosma_basis: conductor 2 mod 4 not supported; rewrite to the odd conductor first");
  BosmaBasis basis;
  basis.conductor = n;
  basis.factors = factorize(n);

  // Per prime: the admissible residues A_p (size phi(p*)) and the tail
  // range B_p = [p^f / p*].
  std::vector<std::vector<long>> component_values;
  for (const auto& [p, f] : basis.factors) {
    long q = 1;
    for (int i = 0; i < f; ++i) q *= p;
    std::vector<int> a;
    if (p == 2) {
      a = {0, 1};
      auto it = a_choices.find(p);
      if (it != a_choices.end() && it->second != a)
        throw DomainError("bosma_basis: A_2 is forced to {0,1}");
    } else {
      auto it = a_choices.find(p);
      if (it != a_choices.end()) {
        a = it->second;
        std::sort(a.begin(), a.end());
        if (static_cast<long>(a.size()) != p - 1 ||
            std::set<int>(a.begin(), a.end()).size() != a.size() || a.front() < 0 ||
            a.back() >= p)
          throw DomainError("bosma_basis: A_p must be phi(p) distinct residues in [0, p)");
      } else {
        for (int r = 0; r < p - 1; ++r) a.push_back(r);
      }
    }
    basis.a_choices[p] = a;
    const long b_count = (p == 2) ? q / 4 : q / p;
    std::vector<long> values;
    for (int av : a) {
      for (long b = 0; b < b_count; ++b) values.push_back(av * b_count + b);
    }
    component_values.push_back(std::move(values));
  }

  // Cartesian product over the prime components.
  std::vector<std::vector<long>> tuples{{}};
  for (const auto& values : component_values) {
    std::vector<std::vector<long>> next;
    next.reserve(tuples.size() * values.size());
    for (const auto& t : tuples) {
      for (long v : values) {
        auto copy = t;
        copy.push_back(v);
        next.push_back(std::move(copy));
      }
    }
    tuples = std::move(next);
  }
  for (const auto& t : tuples) basis.exponents.push_back(crt_compose(n, t));
  std::sort(basis.exponents.begin(), basis.exponents.end());

  const long phi = euler_phi(n);
  if (static_cast<long>(basis.exponents.size()) != phi)
    throw InternalInconsistencyError("bosma_basis: element count differs from phi(n)");
  for (long e : basis.exponents) basis.elements.push_back(CycloElem::root_power(n, e));

  RationalMatrix m(static_cast<int>(phi), static_cast<int>(phi));
  for (int j = 0; j < phi; ++j) {
    for (int i = 0; i < phi; ++i) m.at(i, j) = basis.elements[j].coeffs()[i];
  }
  if (rational_rank(m) != phi)
    throw InternalInconsistencyError("bosma_basis: constructed set is not linearly independent");
  return basis;
}

std::vector<Rat> basis_coordinates(const CycloElem& e, const BosmaBasis& basis) {
  if (e.conductor() != basis.conductor)
    throw DomainError("basis_coordinates: conductor mismatch");
  const int phi = e.degree();
  RationalMatrix m(phi, phi);
  for (int j = 0; j < phi; ++j) {
    for (int i = 0; i < phi; ++i) m.at(i, j) = basis.elements[j].coeffs()[i];
  }
  auto solution = solve_linear_system(std::move(m), e.coeffs());
  if (!solution)
    throw InternalInconsistencyError("basis_coordinates: basis matrix is singular");
  return *solution;
}

bool is_algebraic_integer(const CycloElem& e, const BosmaBasis& basis) {
  const auto coords = basis_coordinates(e, basis);
  return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return is_integral(c); });
}

bool q_linear_independent(const std::vector<CycloElem>& elems) {
  if (elems.empty()) return true;
  const int n = elems.front().conductor();
  for (const CycloElem& e : elems) {
    if (e.conductor() != n) throw DomainError("q_linear_independent: common conductor required");
  }
  const int phi = elems.front().degree();
  RationalMatrix m(phi, static_cast<int>(elems.size()));
  for (size_t j = 0; j < elems.size(); ++j) {
    for (int i = 0; i < phi; ++i) m.at(i, static_cast<int>(j)) = elems[j].coeffs()[i];
  }
  return rational_rank(std::move(m)) == static_cast<int>(elems.size());
}

namespace {

// Canonical representative of a residue class in [1, l-1]; 0 and l are
// rejected (they do not give a 4-regular connection set).
int canonical_half_residue(int r, int l) {
  long m = mod_reduce(r, 2L * l);
  if (m > l) m = 2L * l - m;
  if (m == 0 || m == l)
    throw DomainError("delta_integrality: residue is 0 mod l, connection set is not 4-regular");
  return static_cast<int>(m);
}

}  // namespace

DeltaIntegrality delta_integrality(int l, int a, int b) {
  if (l < 2) throw DomainError("delta_integrality: l must be at least 2");
  DeltaIntegrality out;
  out.l = l;
  int ca = canonical_half_residue(a, l);
  int cb = canonical_half_residue(b, l);
  if (ca == cb)
    throw DomainError("delta_integrality: residues coincide, connection set is not 4-regular");
  if (ca > cb) std::swap(ca, cb);
  out.a = ca;
  out.b = cb;

  const int m = 2 * l;
  out.delta = (CycloElem::root_power(m, ca) + CycloElem::root_power(m, -ca) +
               CycloElem::root_power(m, cb) + CycloElem::root_power(m, -cb))
                  .scaled(make_rat(1, 2));

  std::vector<long> exponents = {ca, m - ca, cb, m - cb};
  if (m % 4 == 2) {
    out.working_conductor = l;
    out.reduced_delta = to_odd_conductor(out.delta);
    for (long& e : exponents) e = epsilon_map(l, e).exponent;
  } else {
    out.working_conductor = m;
    out.reduced_delta = out.delta;
  }

  // Choose A_p so the basis contains (up to sign) the monomials present in
  // the reduced element: A_p covers their pi values, extended with the
  // smallest unused residues. When all three residues occur at p = 3, take
  // A_3 = {1, 2}.
  std::map<long, std::vector<int>> choices;
  for (const auto& [p, f] : factorize(out.working_conductor)) {
    if (p == 2) continue;
    std::set<int> pis;
    for (long e : exponents) {
      const auto dec = crt_decompose(out.working_conductor, e);
      for (const PrimeComponent& part : dec.parts) {
        if (part.p == p) pis.insert(static_cast<int>(*part.pi));
      }
    }
    std::vector<int> a_set;
    if (p == 3 && pis.size() == 3) {
      a_set = {1, 2};
    } else {
      a_set.assign(pis.begin(), pis.end());
      for (int r = 0; static_cast<long>(a_set.size()) < p - 1 && r < p; ++r) {
        if (!pis.count(r)) a_set.push_back(r);
      }
      std::sort(a_set.begin(), a_set.end());
    }
    choices[p] = a_set;
  }

  out.basis = bosma_basis(out.working_conductor, choices);
  out.coordinates = basis_coordinates(out.reduced_delta, out.basis);
  out.integral = std::all_of(out.coordinates.begin(), out.coordinates.end(),
                             [](const Rat& c) { return is_integral(c); });
  return out;
}

}  // namespace pstwalk
