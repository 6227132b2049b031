#include "pstwalk/verify.hpp"

#include <random>
#include <sstream>

#include "pstwalk/classifier.hpp"
#include "pstwalk/errors.hpp"
#include "pstwalk/report.hpp"
#include "pstwalk/symmetry.hpp"

namespace pstwalk {

namespace {

struct Collector {
  std::string jsonl;
  std::map<std::string, std::pair<int, int>> per_suite;  // suite -> (checks, failures)
  int checks = 0;
  int failures = 0;

  void add(const std::string& suite, const std::string& check, const CirculantSpec* spec,
           bool pass, const std::string& details) {
    Jv j = Jv::object();
    j.set("suite", Jv::str(suite));
    j.set("check", Jv::str(check));
    if (spec != nullptr) j.set("spec", spec_to_jv(*spec));
    j.set("pass", Jv::boolean(pass));
    j.set("details", Jv::str(details));
    jsonl += j.dump();
    jsonl += "\n";
    ++checks;
    ++per_suite[suite].first;
    if (!pass) {
      ++failures;
      ++per_suite[suite].second;
    }
  }
};

std::string verdict_brief(const PSTVerdict& v) {
  std::ostringstream os;
  if (v.occurs) {
    os << "transfer to " << *v.target << " at tau=" << *v.tau_min << " gamma=" << *v.gamma;
  } else {
    os << "no transfer";
  }
  return os.str();
}

void run_theorems(const VerifyConfig& config, Collector& out) {
  const SweepReport report = verify_classification(config.n_max, config.tau_factor, config.jobs);
  for (const SweepRecord& rec : report.records) {
    out.add("theorems", "classification-vs-search", &rec.spec, rec.agree,
            "classified: " + verdict_brief(rec.classified) +
                "; searched: " + verdict_brief(rec.searched));
  }
}

void run_lemmas(const VerifyConfig& config, Collector& out) {
  for (const CirculantSpec& spec : enumerate_connected_circulants(config.n_max)) {
    const Graph g = build_circulant(spec);
    const WalkMatrices wm = build_walk_matrices(g);

    const double cheb_dev = chebyshev_identity_max_deviation(wm, 20);
    out.add("lemmas", "walk-polynomial-identity", &spec, cheb_dev <= tol::kChebIdentity,
            "max deviation " + fmt_double17(cheb_dev) + " over tau <= 20");

    double intertwine_dev = 0.0;
    const VertexAutomorphism rot = circulant_rotation(g, spec, 1);
    const VertexAutomorphism inv = circulant_inversion(g, spec);
    intertwine_dev = std::max(verify_intertwining(wm, rot), verify_intertwining(wm, inv));
    out.add("lemmas", "automorphism-intertwining", &spec, intertwine_dev <= tol::kStructure,
            "max deviation " + fmt_double17(intertwine_dev) + " for rotation and inversion");

    const PSTVerdict verdict = classify(spec);
    if (verdict.occurs) {
      bool transported = true;
      for (int z = 0; z < spec.n; ++z) {
        if (!pst_transport_check(wm, circulant_rotation(g, spec, z), verdict.source,
                                 *verdict.target, *verdict.tau_min, *verdict.gamma)) {
          transported = false;
        }
      }
      if (!pst_transport_check(wm, inv, verdict.source, *verdict.target, *verdict.tau_min,
                               *verdict.gamma)) {
        transported = false;
      }
      out.add("lemmas", "transfer-transport", &spec, transported,
              "all rotations and the inversion transport the detected transfer");

      // The reverse direction hits at the same time.
      const FidelityTrace back =
          fidelity_trace(wm.evolution, vertex_type_state(wm, *verdict.target),
                         vertex_type_state(wm, verdict.source), *verdict.tau_min);
      const bool symmetric = !back.hits.empty() && back.hits.back().tau == *verdict.tau_min;
      out.add("lemmas", "transfer-symmetry", &spec, symmetric,
              "fidelity from the target back to the source reaches one at the same time");
    }
  }
}

void run_cyclotomic(const VerifyConfig& config, Collector& out) {
  // Exponent decomposition round trips.
  for (int n : {12, 36, 45, 60}) {
    bool ok = true;
    for (long x = 0; x < n; ++x) {
      const ExponentDecomposition dec = crt_decompose(n, x);
      std::vector<long> parts;
      for (const PrimeComponent& part : dec.parts) parts.push_back(part.component);
      if (crt_compose(n, parts) != x) ok = false;
    }
    out.add("cyclotomic", "exponent-roundtrip-n" + std::to_string(n), nullptr, ok,
            "compose(decompose(x)) = x for all x");
  }

  // Basis construction keeps full rank (the constructor verifies the rank;
  // reaching here means it held).
  for (int n : {4, 8, 9, 12, 36, 45}) {
    bool ok = true;
    std::string details;
    try {
      const BosmaBasis basis = bosma_basis(n);
      details = std::to_string(basis.exponents.size()) + " elements, exact rank verified";
    } catch (const std::exception& e) {
      ok = false;
      details = e.what();
    }
    out.add("cyclotomic", "basis-rank-n" + std::to_string(n), nullptr, ok, details);
  }

  // Ring laws on seeded random triples, exact.
  std::mt19937_64 rng(config.seed);
  for (int n : {5, 8, 9, 12, 36}) {
    const long phi = euler_phi(n);
    auto random_elem = [&]() {
      std::vector<Rat> coeffs(phi);
      for (long i = 0; i < phi; ++i) {
        const long num = static_cast<long>(rng() % 21) - 10;
        const long den = 1 + static_cast<long>(rng() % 6);
        coeffs[i] = make_rat(num, den);
      }
      return CycloElem::from_coeffs(n, std::move(coeffs));
    };
    bool ok = true;
    for (int trial = 0; trial < 200 && ok; ++trial) {
      const CycloElem a = random_elem(), b = random_elem(), c = random_elem();
      if (!(a * b == b * a)) ok = false;
      if (!((a * b) * c == a * (b * c))) ok = false;
      if (!(a * (b + c) == a * b + a * c)) ok = false;
    }
    out.add("cyclotomic", "ring-laws-n" + std::to_string(n), nullptr, ok,
            "commutativity, associativity, distributivity on 200 random triples");
  }

  // Exponent halving: zeta_{2l}^c = sign * zeta_l^e, exactly.
  for (long l : {3L, 5L, 7L, 9L, 15L}) {
    bool ok = true;
    for (long c = 0; c < 2 * l; ++c) {
      const EpsilonImage img = epsilon_map(l, c);
      CycloElem lhs = CycloElem::root_power(static_cast<int>(2 * l), c);
      CycloElem rhs = CycloElem::root_power(static_cast<int>(l), img.exponent)
                          .scaled(Rat(img.sign))
                          .lifted(static_cast<int>(2 * l));
      if (!(lhs == rhs)) ok = false;
    }
    out.add("cyclotomic", "exponent-halving-l" + std::to_string(l), nullptr, ok,
            "identity holds for every exponent");
  }

  // Integrality of the half root sum tracks the a + b = l family exactly,
  // and the non-integral instances show no transfer by brute force.
  for (int l = 2; 2 * l <= 30; ++l) {
    for (int a = 1; a < l; ++a) {
      for (int b = a + 1; b < l; ++b) {
        const DeltaIntegrality d = delta_integrality(l, a, b);
        const bool expected = (a + b == l);
        CirculantSpec spec = CirculantSpec::make(2 * l, {a, b});
        out.add("cyclotomic", "half-root-sum-integrality", &spec, d.integral == expected,
                std::string("algebraic integer: ") + (d.integral ? "yes" : "no") +
                    ", complementary pair: " + (expected ? "yes" : "no"));
        if (!expected && is_connected(spec) && 2 * l <= config.n_max + 4) {
          const WalkMatrices wm = build_walk_matrices(build_circulant(spec));
          const PSTVerdict v = search_min_pst(wm, 0, 8 * l, &spec);
          out.add("cyclotomic", "nonintegral-implies-no-transfer", &spec, !v.occurs,
                  verdict_brief(v) + " up to tau = 8l");
        }
      }
    }
  }
}

}  // namespace

VerifyOutcome run_verify(const VerifyConfig& config) {
  if (config.suite != "theorems" && config.suite != "lemmas" && config.suite != "cyclotomic" &&
      config.suite != "all") {
    throw DomainError("run_verify: unknown suite '" + config.suite + "'");
  }
  Collector collector;
  if (config.suite == "theorems" || config.suite == "all") run_theorems(config, collector);
  if (config.suite == "lemmas" || config.suite == "all") run_lemmas(config, collector);
  if (config.suite == "cyclotomic" || config.suite == "all") run_cyclotomic(config, collector);

  VerifyOutcome outcome;
  outcome.jsonl = collector.jsonl;
  outcome.checks = collector.checks;
  outcome.failures = collector.failures;
  std::ostringstream csv;
  csv << "suite,checks,failures\n";
  for (const auto& [suite, counts] : collector.per_suite) {
    csv << suite << "," << counts.first << "," << counts.second << "\n";
  }
  csv << "total," << collector.checks << "," << collector.failures << "\n";
  outcome.csv = csv.str();
  return outcome;
}

}  // namespace pstwalk
