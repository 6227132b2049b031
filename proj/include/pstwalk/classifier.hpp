#pragma once

// The closed-form transfer decision for circulant graphs of valency 2..4,
// implemented from the classification statements, never by running the
// search. The exhaustive sweep cross-checks every verdict against the
// brute-force minimum-time search.

#include <string>
#include <vector>

#include "pstwalk/cyclotomic.hpp"
#include "pstwalk/graph.hpp"
#include "pstwalk/pst.hpp"

namespace pstwalk {

// Decides transfer for a connected circulant of valency 2, 3 or 4; throws
// DomainError for anything else. Source vertex is 0 (vertex transitivity
// moves every instance there).
PSTVerdict classify(const CirculantSpec& spec);

// All connected circulant specs with 2 <= n <= n_max and valency in
// {2, 3, 4}, each connection set listed once (S and -S coincide here by
// construction). Sorted by (n, S).
std::vector<CirculantSpec> enumerate_connected_circulants(int n_max);

struct SweepRecord {
  CirculantSpec spec;
  PSTVerdict classified;
  PSTVerdict searched;
  bool agree;
};

struct SweepReport {
  std::vector<SweepRecord> records;
  int mismatches = 0;
  int tau_factor = 4;
};

// classify() versus search_min_pst() on every enumerated spec, with
// tau_max = tau_factor * n. Mismatches are recorded, not thrown, so a full
// sweep always completes.
SweepReport verify_classification(int n_max, int tau_factor = 4, int jobs = 1);

// For a 4-regular set {±a, ±b} on Z_{2l} with a + b != l: the eigenvalue
// obstruction record. The half-sum of the four roots must fail integrality;
// the record carries the basis and the offending coordinates.
struct NonintegralityWitness {
  int l, a, b;
  DeltaIntegrality detail;
  std::vector<int> noninteger_positions;  // indices into detail.coordinates
};

NonintegralityWitness nonintegrality_witness(int l, int a, int b);

}  // namespace pstwalk
