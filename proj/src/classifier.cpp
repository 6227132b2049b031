#include "pstwalk/classifier.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "pstwalk/errors.hpp"
#include "pstwalk/walk.hpp"

namespace pstwalk {

namespace {

std::string spec_str(const CirculantSpec& spec) {
  std::ostringstream os;
  os << "n=" << spec.n << " S={";
  for (size_t i = 0; i < spec.s.size(); ++i) os << (i ? "," : "") << spec.s[i];
  os << "}";
  return os.str();
}

// Representative of ±r in [1, l-1]; requires r not congruent to 0 or l.
int half_residue(int r, int n) {
  int m = ((r % n) + n) % n;
  if (2 * m > n) m = n - m;
  return m;
}

}  // namespace

PSTVerdict classify(const CirculantSpec& spec) {
  const int valency = spec.valency();
  if (valency < 2 || valency > 4)
    throw DomainError("classify: only valency 2, 3 and 4 are covered (got " +
                      std::to_string(valency) + ")");
  if (!is_connected(spec))
    throw DomainError("classify: spec is disconnected: " + spec_str(spec));

  PSTVerdict v;
  v.source = 0;
  const int n = spec.n;

  if (valency == 2) {
    // Connected 2-regular: a cycle. Transfer iff the order is even.
    if (n % 2 == 0) {
      v.occurs = true;
      v.target = n / 2;
      v.co_targets = {n / 2};
      v.tau_min = n / 2;
      v.gamma = 1;
      v.case_label = "cycle-even";
      v.evidence.push_back({"cycle family", true,
                            "even cycle: transfer to the antipode at half the order"});
    } else {
      v.case_label = "cycle-odd";
      v.evidence.push_back({"cycle family", true, "odd cycle: no transfer"});
    }
    return v;
  }

  if (valency == 3) {
    // S = {±a, n/2}; no transfer at valency 3.
    v.case_label = "valency3";
    v.evidence.push_back({"valency-3 family", true,
                          "cubic circulant: the support eigenvalue (2cos(a pi/l) - 1)/3 "
                          "admits no cosine witness"});
    return v;
  }

  // Valency 4.
  if (n % 2 != 0) {
    v.case_label = "v4-odd-order";
    v.evidence.push_back({"candidate pruning", true,
                          "odd vertex count: symmetry leaves no admissible target"});
    return v;
  }
  const int l = n / 2;
  const int a = half_residue(spec.s[0], n);
  int b = -1;
  for (int r : spec.s) {
    const int h = half_residue(r, n);
    if (h != a) b = h;
  }
  if (b < 0) throw InternalInconsistencyError("classify: could not split the connection set");
  const int lo = std::min(a, b), hi = std::max(a, b);

  if (lo + hi == l) {
    if (l % 2 == 1) {
      v.occurs = true;
      v.tau_min = 2 * l;
      v.case_label = "v4-sum-l-odd";
      v.evidence.push_back({"complementary-pair family", true,
                            "a + b = l with l odd: minimum time 2l"});
    } else if (l % 4 == 2) {
      v.occurs = true;
      v.tau_min = l;
      v.case_label = "v4-sum-l-2mod4";
      v.evidence.push_back({"complementary-pair family", true,
                            "a + b = l with l = 2 mod 4: minimum time l"});
    } else {
      v.case_label = "v4-sum-l-0mod4";
      v.evidence.push_back({"complementary-pair family", true,
                            "a + b = l with l = 0 mod 4: the zero eigenvalue class mixes "
                            "both index parities, no transfer"});
    }
  } else {
    v.case_label = "v4-sum-not-l";
    v.evidence.push_back({"eigenvalue integrality", true,
                          "a + b != l: half the root sum is not an algebraic integer, "
                          "no transfer"});
  }
  if (v.occurs) {
    v.target = l;
    v.co_targets = {l};
    v.gamma = 1;
  }
  return v;
}

std::vector<CirculantSpec> enumerate_connected_circulants(int n_max) {
  std::vector<CirculantSpec> specs;
  for (int n = 2; n <= n_max; ++n) {
    const int half = n / 2;
    std::vector<std::vector<int>> generator_sets;
    // Generators are residues in [1, n/2]; n/2 itself (n even) contributes
    // valency 1, every other residue contributes 2.
    for (int a = 1; a <= half; ++a) {
      if (2 * a == n) continue;
      generator_sets.push_back({a});                           // valency 2
      if (n % 2 == 0) generator_sets.push_back({a, half});     // valency 3
      for (int b = a + 1; b <= half; ++b) {
        if (2 * b == n) continue;
        generator_sets.push_back({a, b});                      // valency 4
      }
    }
    for (const auto& gens : generator_sets) {
      CirculantSpec spec = CirculantSpec::make(n, gens);
      if (is_connected(spec)) specs.push_back(spec);
    }
  }
  std::sort(specs.begin(), specs.end());
  return specs;
}

namespace {

SweepRecord sweep_one(const CirculantSpec& spec, int tau_factor) {
  SweepRecord rec;
  rec.spec = spec;
  rec.classified = classify(spec);
  const WalkMatrices wm = build_walk_matrices(build_circulant(spec));
  rec.searched = search_min_pst(wm, 0, tau_factor * spec.n, &spec);
  rec.agree = rec.classified.occurs == rec.searched.occurs &&
              rec.classified.target == rec.searched.target &&
              rec.classified.tau_min == rec.searched.tau_min &&
              rec.classified.gamma == rec.searched.gamma;
  return rec;
}

}  // namespace

SweepReport verify_classification(int n_max, int tau_factor, int jobs) {
  if (n_max > 24)
    throw DomainError("verify_classification: n_max beyond the default runtime budget (24)");
  const std::vector<CirculantSpec> specs = enumerate_connected_circulants(n_max);
  SweepReport report;
  report.tau_factor = tau_factor;
  report.records.resize(specs.size());

  if (jobs <= 1) {
    for (size_t i = 0; i < specs.size(); ++i) report.records[i] = sweep_one(specs[i], tau_factor);
  } else {
    // Fixed slots keep the output order deterministic regardless of jobs.
    std::vector<std::future<void>> workers;
    std::atomic<size_t> next{0};
    for (int w = 0; w < jobs; ++w) {
      workers.push_back(std::async(std::launch::async, [&]() {
        for (size_t i = next.fetch_add(1); i < specs.size(); i = next.fetch_add(1)) {
          report.records[i] = sweep_one(specs[i], tau_factor);
        }
      }));
    }
    for (auto& worker : workers) worker.get();
  }

  for (const SweepRecord& rec : report.records) {
    if (!rec.agree) ++report.mismatches;
  }
  return report;
}

NonintegralityWitness nonintegrality_witness(int l, int a, int b) {
  NonintegralityWitness w;
  w.detail = delta_integrality(l, a, b);
  w.l = l;
  w.a = w.detail.a;
  w.b = w.detail.b;
  if (w.a + w.b == l)
    throw DomainError("nonintegrality_witness: a + b = l is the transfer family, "
                      "no obstruction expected");
  if (w.detail.integral)
    throw InternalInconsistencyError(
        "nonintegrality_witness: half root sum came out integral for a + b != l");
  for (size_t i = 0; i < w.detail.coordinates.size(); ++i) {
    if (!is_integral(w.detail.coordinates[i])) w.noninteger_positions.push_back(static_cast<int>(i));
  }
  return w;
}

}  // namespace pstwalk
