#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "pstwalk/cyclotomic.hpp"
#include "pstwalk/errors.hpp"
#include "oracles.hpp"

using namespace pstwalk;

TEST_SUITE_BEGIN("cyclotomic");

TEST_CASE("cyclotomic polynomials match known values") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Int>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Int>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Int>{1, 0, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Int>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(36) == std::vector<Int>{1, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("cyclotomic polynomial vanishes at the primitive root") {
  for (int n = 1; n <= 64; ++n) {
    const auto poly = cyclotomic_polynomial(n);
    std::complex<double> acc(0.0, 0.0);
    const double angle = 2.0 * M_PI / n;
    for (size_t k = 0; k < poly.size(); ++k) {
      acc += poly[k].get_d() *
             std::complex<double>(std::cos(angle * k), std::sin(angle * k));
    }
    CHECK(std::abs(acc) < 1e-10);
  }
}

TEST_CASE("primitive root sum") {
  CycloElem sum = CycloElem::zero(5);
  for (int k = 1; k <= 4; ++k) sum = sum + CycloElem::root_power(5, k);
  CHECK(sum == CycloElem::from_rational(5, Rat(-1)));
}

TEST_CASE("conjugation inverts root powers") {
  for (int n : {5, 8, 12, 36}) {
    for (int k = 0; k < n; ++k) {
      CHECK(CycloElem::root_power(n, k).conjugate() == CycloElem::root_power(n, n - k));
    }
  }
}

TEST_CASE("ring laws and the numeric embedding homomorphism") {
  std::mt19937_64 rng(2024);
  for (int n : {5, 8, 9, 12}) {
    for (int trial = 0; trial < 50; ++trial) {
      const CycloElem a = testing::random_cyclo_elem(n, rng);
      const CycloElem b = testing::random_cyclo_elem(n, rng);
      const CycloElem c = testing::random_cyclo_elem(n, rng);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-9);
      CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-9);
    }
  }
}

TEST_CASE("conductor mismatch is rejected") {
  CHECK_THROWS_AS(CycloElem::root_power(5, 1) + CycloElem::root_power(7, 1), DomainError);
}

TEST_CASE("lifting preserves the embedded value") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const CycloElem e = testing::random_cyclo_elem(6, rng);
    const CycloElem lifted = e.lifted(36);
    CHECK(std::abs(e.embed() - lifted.embed()) < 1e-10);
  }
}

TEST_CASE("half-order rewrite: zeta_6 = -zeta_3^2") {
  const CycloElem z6 = CycloElem::root_power(6, 1);
  const CycloElem rewritten = to_odd_conductor(z6);
  CHECK(rewritten == -CycloElem::root_power(3, 2));
  CHECK(std::abs(z6.embed() - rewritten.embed()) < 1e-12);
}

TEST_CASE("epsilon map known values") {
  CHECK(epsilon_map(3, 1).sign == -1);
  CHECK(epsilon_map(3, 1).exponent == 2);
  CHECK(epsilon_map(5, 4).sign == 1);
  CHECK(epsilon_map(5, 4).exponent == 2);
  CHECK(epsilon_map(7, 7).sign == -1);
  CHECK(epsilon_map(7, 7).exponent == 0);
  CHECK_THROWS_AS(epsilon_map(4, 1), DomainError);
}

TEST_CASE("epsilon map identity holds exactly for every exponent") {
  for (long l : {3L, 5L, 7L, 9L}) {
    for (long c = 0; c < 2 * l; ++c) {
      const EpsilonImage img = epsilon_map(l, c);
      const CycloElem lhs = CycloElem::root_power(static_cast<int>(2 * l), c);
      const CycloElem rhs = CycloElem::root_power(static_cast<int>(l), img.exponent)
                                .scaled(Rat(img.sign))
                                .lifted(static_cast<int>(2 * l));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("exponent decomposition of zeta_36^5") {
  const ExponentDecomposition dec = crt_decompose(36, 5);
  REQUIRE(dec.parts.size() == 2);
  CHECK(dec.parts[0].p == 2);
  CHECK(dec.parts[0].component == 1);
  CHECK(*dec.parts[0].pi == 1);
  CHECK(*dec.parts[0].theta == 0);
  CHECK(dec.parts[1].p == 3);
  CHECK(dec.parts[1].component == 8);
  CHECK(*dec.parts[1].pi == 2);
  CHECK(*dec.parts[1].theta == 2);
}

TEST_CASE("exponent decomposition of zero is all zero") {
  const ExponentDecomposition dec = crt_decompose(36, 0);
  for (const PrimeComponent& part : dec.parts) {
    CHECK(part.component == 0);
    CHECK(*part.pi == 0);
    CHECK(*part.theta == 0);
  }
}

TEST_CASE("decomposition matches the product of prime-power roots") {
  for (int n : {12, 36, 45}) {
    for (long x = 0; x < n; ++x) {
      const ExponentDecomposition dec = crt_decompose(n, x);
      CycloElem prod = CycloElem::one(n);
      for (const PrimeComponent& part : dec.parts) {
        prod = prod * CycloElem::root_power(static_cast<int>(part.prime_power), part.component)
                          .lifted(n);
      }
      CHECK(prod == CycloElem::root_power(n, x));
    }
  }
}

TEST_CASE("compose is inverse to decompose") {
  for (int n : {12, 36, 45, 60}) {
    for (long x = 0; x < n; ++x) {
      const ExponentDecomposition dec = crt_decompose(n, x);
      std::vector<long> parts;
      for (const PrimeComponent& part : dec.parts) parts.push_back(part.component);
      CHECK(crt_compose(n, parts) == x);
    }
  }
}

TEST_CASE("pi/theta undefined at p = 2 when n = 2 mod 4") {
  const ExponentDecomposition dec = crt_decompose(6, 1);
  for (const PrimeComponent& part : dec.parts) {
    if (part.p == 2) {
      CHECK_FALSE(part.pi.has_value());
      CHECK_FALSE(part.theta.has_value());
    } else {
      CHECK(part.pi.has_value());
    }
  }
}

TEST_CASE("negation rule at n = 36") {
  const auto parts = negate_pi_theta(36, 5);
  for (const PrimeComponent& part : parts) {
    if (part.p == 2) {
      CHECK(*part.pi == 3);
      CHECK(*part.theta == 0);
    }
  }
  const auto at_zero = negate_pi_theta(36, 0);
  for (const PrimeComponent& part : at_zero) {
    if (part.p == 2) {
      CHECK(*part.pi == 2);
      CHECK(*part.theta == 0);
    }
  }
}

TEST_CASE("inversion rule at p = 3") {
  CHECK(invert_pi3(36, 5) == 0);  // theta = 2 != 0, pi = 2 -> 2 - 2
  // Exhaustive self-verification (the function cross-checks internally).
  for (int n : {9, 12, 36, 45}) {
    for (long x = 0; x < n; ++x) CHECK_NOTHROW(invert_pi3(n, x));
  }
  for (long x = 0; x < 36; ++x) CHECK_NOTHROW(negate_pi_theta(36, x));
}

TEST_CASE("canonical basis for conductor 36") {
  const BosmaBasis basis = bosma_basis(36, {{3, {0, 2}}});
  const std::vector<long> expected{0, 1, 4, 5, 8, 9, 13, 17, 24, 28, 32, 33};
  CHECK(basis.exponents == expected);
}

TEST_CASE("exponent 23 is the negation of exponent 5 at conductor 36") {
  // zeta_36^23 = -zeta_36^5, so a basis cannot contain both 5 and 23.
  CHECK(CycloElem::root_power(36, 23) == -CycloElem::root_power(36, 5));
  CHECK_FALSE(q_linear_independent(
      {CycloElem::root_power(36, 5), CycloElem::root_power(36, 23)}));
}

TEST_CASE("small canonical bases") {
  const BosmaBasis b4 = bosma_basis(4);
  CHECK(b4.exponents == std::vector<long>{0, 1});
  const BosmaBasis b9 = bosma_basis(9, {{3, {1, 2}}});
  CHECK(b9.exponents.size() == 6);
  CHECK_THROWS_AS(bosma_basis(6), DomainError);
  CHECK_THROWS_AS(bosma_basis(9, {{3, {0, 1, 2}}}), DomainError);
}

TEST_CASE("algebraic integer membership") {
  const BosmaBasis b8 = bosma_basis(8);
  const CycloElem sqrt2 = CycloElem::root_power(8, 1) + CycloElem::root_power(8, -1);
  CHECK(is_algebraic_integer(sqrt2, b8));

  const BosmaBasis b5 = bosma_basis(5);
  const CycloElem half = (CycloElem::root_power(5, 1) + CycloElem::root_power(5, -1) +
                          CycloElem::root_power(5, 2) + CycloElem::root_power(5, -2))
                             .scaled(make_rat(1, 2));
  CHECK(half.is_rational());
  CHECK(half.rational_value() == make_rat(-1, 2));
  CHECK_FALSE(is_algebraic_integer(half, b5));

  const CycloElem cos72 =
      (CycloElem::root_power(5, 1) + CycloElem::root_power(5, -1)).scaled(make_rat(1, 2));
  CHECK_FALSE(is_algebraic_integer(cos72, b5));
}

TEST_CASE("doubled cosines are always algebraic integers") {
  for (int m : {5, 7, 8, 9, 12, 16}) {
    const BosmaBasis basis = bosma_basis(m);
    for (int k = 0; k < m; ++k) {
      const CycloElem two_cos = CycloElem::root_power(m, k) + CycloElem::root_power(m, -k);
      CHECK(is_algebraic_integer(two_cos, basis));
    }
  }
}

TEST_CASE("membership agrees with the characteristic polynomial oracle") {
  std::mt19937_64 rng(7);
  for (int n : {5, 7, 8, 9, 12}) {
    const BosmaBasis basis = bosma_basis(n);
    for (int trial = 0; trial < 50; ++trial) {
      const CycloElem e = testing::random_cyclo_elem(n, rng);
      CHECK(is_algebraic_integer(e, basis) == testing::charpoly_integral_oracle(e));
    }
  }
}

TEST_CASE("rational linear independence") {
  CHECK_FALSE(q_linear_independent(
      {CycloElem::root_power(12, 3), CycloElem::root_power(12, 9)}));  // i and -i
  CHECK(q_linear_independent({CycloElem::root_power(12, 1), CycloElem::root_power(12, 11),
                              CycloElem::root_power(12, 2), CycloElem::root_power(12, 10)}));
  CHECK(q_linear_independent({CycloElem::one(5)}));
  CHECK(q_linear_independent({}));
}

TEST_CASE("reduced denominators") {
  CHECK(reduced_denominator(make_rat(3, 6)) == 2);
  CHECK(reduced_denominator(make_rat(2, 5)) == 5);
  CHECK(reduced_denominator(Rat(4)) == 1);
  CHECK(reduced_denominator(make_rat(-3, 6)) == 2);
}

TEST_CASE("half root sum integrality for known parameter triples") {
  SUBCASE("l=5, a=1, b=2: not an algebraic integer") {
    const DeltaIntegrality d = delta_integrality(5, 1, 2);
    CHECK(d.working_conductor == 5);
    CHECK_FALSE(d.integral);
  }
  SUBCASE("l=3, a=1, b=2: the complementary pair collapses to zero") {
    const DeltaIntegrality d = delta_integrality(3, 1, 2);
    CHECK(d.reduced_delta.is_zero());
    CHECK(d.integral);
  }
  SUBCASE("l=6, a=1, b=3: the order-4 pair cancels, residue not integral") {
    const DeltaIntegrality d = delta_integrality(6, 1, 3);
    CHECK(d.working_conductor == 12);
    const CycloElem expected = (CycloElem::root_power(12, 1) + CycloElem::root_power(12, 11))
                                   .scaled(make_rat(1, 2));
    CHECK(d.reduced_delta == expected);
    CHECK_FALSE(d.integral);
  }
  SUBCASE("degenerate parameters are rejected") {
    CHECK_THROWS_AS(delta_integrality(5, 5, 1), DomainError);
    CHECK_THROWS_AS(delta_integrality(5, 1, 1), DomainError);
    CHECK_THROWS_AS(delta_integrality(5, 1, 9), DomainError);  // 9 = -1: same pair
  }
}

TEST_CASE("half root sum integrality tracks the complementary family") {
  for (int l = 2; 2 * l <= 24; ++l) {
    for (int a = 1; a < l; ++a) {
      for (int b = a + 1; b < l; ++b) {
        const DeltaIntegrality d = delta_integrality(l, a, b);
        CHECK(d.integral == (a + b == l));
      }
    }
  }
}

TEST_SUITE_END();
