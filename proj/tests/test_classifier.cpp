#include <doctest.h>

#include "pstwalk/classifier.hpp"
#include "pstwalk/errors.hpp"
#include "pstwalk/report.hpp"

using namespace pstwalk;

TEST_SUITE_BEGIN("classifier");

TEST_CASE("closed-form verdicts on named instances") {
  SUBCASE("even cycle") {
    const PSTVerdict v = classify(CirculantSpec::make(6, {1}));
    REQUIRE(v.occurs);
    CHECK(*v.target == 3);
    CHECK(*v.tau_min == 3);
    CHECK(*v.gamma == 1);
    CHECK(*v.case_label == "cycle-even");
  }
  SUBCASE("odd cycle") {
    const PSTVerdict v = classify(CirculantSpec::make(7, {1}));
    CHECK_FALSE(v.occurs);
    CHECK(*v.case_label == "cycle-odd");
  }
  SUBCASE("cubic circulant") {
    const PSTVerdict v = classify(CirculantSpec::make(10, {3, 5}));
    CHECK_FALSE(v.occurs);
    CHECK(*v.case_label == "valency3");
  }
  SUBCASE("0 mod 4 complementary family") {
    const PSTVerdict v = classify(CirculantSpec::make(8, {1, 3}));
    CHECK_FALSE(v.occurs);
    CHECK(*v.case_label == "v4-sum-l-0mod4");
  }
  SUBCASE("2 mod 4 complementary family") {
    const PSTVerdict v = classify(CirculantSpec::make(12, {1, 5}));
    REQUIRE(v.occurs);
    CHECK(*v.target == 6);
    CHECK(*v.tau_min == 6);
    CHECK(*v.case_label == "v4-sum-l-2mod4");
  }
  SUBCASE("odd half order complementary family") {
    const PSTVerdict v = classify(CirculantSpec::make(6, {1, 2}));
    REQUIRE(v.occurs);
    CHECK(*v.target == 3);
    CHECK(*v.tau_min == 6);
    CHECK(*v.case_label == "v4-sum-l-odd");
  }
  SUBCASE("non-complementary 4-regular") {
    const PSTVerdict v = classify(CirculantSpec::make(10, {1, 2}));
    CHECK_FALSE(v.occurs);
    CHECK(*v.case_label == "v4-sum-not-l");
  }
  SUBCASE("odd order 4-regular") {
    const PSTVerdict v = classify(CirculantSpec::make(5, {1, 2}));
    CHECK_FALSE(v.occurs);
    CHECK(*v.case_label == "v4-odd-order");
  }
}

TEST_CASE("classification refusals") {
  CHECK_THROWS_AS(classify(CirculantSpec::make(12, {1, 2, 3})), DomainError);  // valency 6
  CHECK_THROWS_AS(classify(CirculantSpec::make(6, {2})), DomainError);         // disconnected
  CHECK_THROWS_AS(classify(CirculantSpec::make(12, {2, 3, 6})), DomainError);  // valency 5
}

TEST_CASE("enumeration lists each connected spec once") {
  const auto specs = enumerate_connected_circulants(12);
  for (const CirculantSpec& spec : specs) {
    CHECK(is_connected(spec));
    CHECK(spec.valency() >= 2);
    CHECK(spec.valency() <= 4);
  }
  for (size_t i = 1; i < specs.size(); ++i) CHECK(specs[i - 1] < specs[i]);
  // Hand count for n = 4: {±1}, {±1, 2} only.
  int count4 = 0;
  for (const CirculantSpec& spec : specs) {
    if (spec.n == 4) ++count4;
  }
  CHECK(count4 == 2);
}

TEST_CASE("sweep agrees with the brute-force search up to n = 16") {
  const SweepReport report = verify_classification(16, 4);
  CHECK(report.mismatches == 0);
  CHECK(!report.records.empty());
  for (const SweepRecord& rec : report.records) CHECK(rec.agree);
  CHECK_THROWS_AS(verify_classification(25, 4), DomainError);
}

TEST_CASE("parallel sweep gives identical records") {
  const SweepReport seq = verify_classification(10, 4, 1);
  const SweepReport par = verify_classification(10, 4, 4);
  CHECK(sweep_to_jsonl(seq) == sweep_to_jsonl(par));
}

TEST_CASE("nonintegrality witnesses") {
  SUBCASE("l=5, a=1, b=2") {
    const NonintegralityWitness w = nonintegrality_witness(5, 1, 2);
    CHECK_FALSE(w.detail.integral);
    CHECK(!w.noninteger_positions.empty());
  }
  SUBCASE("l=6, a=1, b=3 reduces to the order-12 pair") {
    const NonintegralityWitness w = nonintegrality_witness(6, 1, 3);
    CHECK_FALSE(w.detail.integral);
    CHECK(w.detail.working_conductor == 12);
  }
  SUBCASE("complementary pairs are refused") {
    CHECK_THROWS_AS(nonintegrality_witness(7, 2, 5), DomainError);
  }
  SUBCASE("every non-complementary 4-regular triple with 2l <= 30 has a witness") {
    for (int l = 2; 2 * l <= 30; ++l) {
      for (int a = 1; a < l; ++a) {
        for (int b = a + 1; b < l; ++b) {
          if (a + b == l) continue;
          const NonintegralityWitness w = nonintegrality_witness(l, a, b);
          CHECK_FALSE(w.detail.integral);
          CHECK(!w.noninteger_positions.empty());
        }
      }
    }
  }
}

TEST_CASE("verdict serialization is stable") {
  const CirculantSpec spec = CirculantSpec::make(12, {1, 5});
  const PSTVerdict v = classify(spec);
  const std::string json = verdict_to_jv(v, &spec).dump();
  CHECK(json.find("\"occurs\":true") != std::string::npos);
  CHECK(json.find("\"tau_min\":6") != std::string::npos);
  CHECK(json == verdict_to_jv(classify(spec), &spec).dump());
}

TEST_SUITE_END();
