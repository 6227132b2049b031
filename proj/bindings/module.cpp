#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pstwalk/classifier.hpp"
#include "pstwalk/report.hpp"
#include "pstwalk/verify.hpp"

namespace py = pybind11;
using namespace pstwalk;

namespace {

py::dict verdict_to_dict(const PSTVerdict& v, const CirculantSpec* spec) {
  py::dict d;
  if (spec != nullptr) {
    py::dict s;
    s["n"] = spec->n;
    s["s"] = spec->s;
    d["spec"] = s;
  }
  d["occurs"] = v.occurs;
  d["source"] = v.source;
  d["target"] = v.target ? py::cast(*v.target) : py::none();
  d["tau_min"] = v.tau_min ? py::cast(*v.tau_min) : py::none();
  d["gamma"] = v.gamma ? py::cast(*v.gamma) : py::none();
  if (v.case_label) d["case"] = *v.case_label;
  py::list evidence;
  for (const EvidenceItem& item : v.evidence) {
    py::dict e;
    e["criterion"] = item.criterion;
    e["pass"] = item.pass;
    e["details"] = item.details;
    evidence.append(e);
  }
  d["evidence"] = evidence;
  return d;
}

py::dict classify_py(int n, const std::vector<int>& s) {
  const CirculantSpec spec = CirculantSpec::make(n, s);
  return verdict_to_dict(classify(spec), &spec);
}

py::dict search_py(int n, const std::vector<int>& s, int x, int tau_max) {
  const CirculantSpec spec = CirculantSpec::make(n, s);
  const WalkMatrices wm = build_walk_matrices(build_circulant(spec));
  const int horizon = tau_max > 0 ? tau_max : 4 * spec.n;
  return verdict_to_dict(search_min_pst(wm, x, horizon, &spec), &spec);
}

py::dict simulate_py(int n, const std::vector<int>& s, int source, int target, int tau_max) {
  const CirculantSpec spec = CirculantSpec::make(n, s);
  const WalkMatrices wm = build_walk_matrices(build_circulant(spec));
  const FidelityTrace trace = fidelity_trace(wm.evolution, vertex_type_state(wm, source),
                                             vertex_type_state(wm, target), tau_max);
  py::dict d;
  d["times"] = trace.times;
  d["fidelities"] = trace.fidelities;
  py::list hits;
  for (const FidelityHit& hit : trace.hits) {
    py::dict h;
    h["tau"] = hit.tau;
    h["phase"] = hit.phase;
    hits.append(h);
  }
  d["hits"] = hits;
  return d;
}

py::list eigenvalues_py(int n, const std::vector<int>& s) {
  const CirculantSpec spec = CirculantSpec::make(n, s);
  py::list out;
  int j = 0;
  for (const auto& [tag, value] : circulant_eigenvalues(spec)) {
    out.append(py::make_tuple(j++, value, tag.to_string()));
  }
  return out;
}

py::dict delta_py(int l, int a, int b) {
  const DeltaIntegrality d = delta_integrality(l, a, b);
  py::dict out;
  out["l"] = d.l;
  out["a"] = d.a;
  out["b"] = d.b;
  out["delta"] = d.delta.to_string();
  out["working_conductor"] = d.working_conductor;
  out["reduced_delta"] = d.reduced_delta.to_string();
  out["basis_exponents"] = d.basis.exponents;
  py::list coords;
  for (const Rat& c : d.coordinates) coords.append(fmt_rational(c));
  out["coordinates"] = coords;
  out["algebraic_integer"] = d.integral;
  return out;
}

py::dict crt_decompose_py(int n, long x) {
  const ExponentDecomposition dec = crt_decompose(n, x);
  py::dict out;
  out["n"] = dec.n;
  out["x"] = dec.exponent;
  py::list parts;
  for (const PrimeComponent& part : dec.parts) {
    py::dict p;
    p["p"] = part.p;
    p["f"] = part.f;
    p["component"] = part.component;
    p["pi"] = part.pi ? py::cast(*part.pi) : py::none();
    p["theta"] = part.theta ? py::cast(*part.theta) : py::none();
    parts.append(p);
  }
  out["parts"] = parts;
  return out;
}

std::vector<long> bosma_exponents_py(int n, const std::map<long, std::vector<int>>& choices) {
  return bosma_basis(n, choices).exponents;
}

double cheb_identity_py(int n, const std::vector<int>& s, int tau_max) {
  const CirculantSpec spec = CirculantSpec::make(n, s);
  return chebyshev_identity_max_deviation(build_walk_matrices(build_circulant(spec)), tau_max);
}

py::dict verify_py(const std::string& suite, int n_max, int tau_factor, std::uint64_t seed,
                   int jobs) {
  VerifyConfig config;
  config.suite = suite;
  config.n_max = n_max;
  config.tau_factor = tau_factor;
  config.seed = seed;
  config.jobs = jobs;
  const VerifyOutcome outcome = run_verify(config);
  py::dict out;
  out["jsonl"] = outcome.jsonl;
  out["csv"] = outcome.csv;
  out["checks"] = outcome.checks;
  out["failures"] = outcome.failures;
  return out;
}

bool is_connected_py(int n, const std::vector<int>& s) {
  return is_connected(CirculantSpec::make(n, s));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Perfect state transfer toolkit for arc-reversal walks on circulant graphs";

  m.def("classify", &classify_py, py::arg("n"), py::arg("s"),
        "Closed-form transfer decision for a connected circulant of valency 2..4.");
  m.def("search_min_pst", &search_py, py::arg("n"), py::arg("s"), py::arg("x") = 0,
        py::arg("tau_max") = 0,
        "Minimum-time search, cross-checked against the simulated walk.");
  m.def("simulate", &simulate_py, py::arg("n"), py::arg("s"), py::arg("source"),
        py::arg("target"), py::arg("tau_max"),
        "Fidelity trace between two vertex states.");
  m.def("circulant_eigenvalues", &eigenvalues_py, py::arg("n"), py::arg("s"),
        "Per-index eigenvalues of the discriminant with exact tags.");
  m.def("delta_integrality", &delta_py, py::arg("l"), py::arg("a"), py::arg("b"),
        "Integrality of the half root sum for the connection set {±a, ±b} on Z_2l.");
  m.def("crt_decompose", &crt_decompose_py, py::arg("n"), py::arg("x"),
        "Prime-power decomposition of a root exponent with pi/theta splits.");
  m.def("bosma_exponents", &bosma_exponents_py, py::arg("n"),
        py::arg("a_choices") = std::map<long, std::vector<int>>{},
        "Exponents of the canonical integral basis of the conductor-n field.");
  m.def("chebyshev_identity_max_deviation", &cheb_identity_py, py::arg("n"), py::arg("s"),
        py::arg("tau_max"),
        "Max deviation between folded walk powers and the matrix polynomial.");
  m.def("verify", &verify_py, py::arg("suite") = "all", py::arg("n_max") = 12,
        py::arg("tau_factor") = 4, py::arg("seed") = 7, py::arg("jobs") = 1,
        "Run a verification suite and return its report.");
  m.def("is_connected", &is_connected_py, py::arg("n"), py::arg("s"),
        "gcd connectivity test for a circulant spec.");

#ifdef VERSION_INFO
#define PSTWALK_STR(x) #x
#define PSTWALK_XSTR(x) PSTWALK_STR(x)
  m.attr("__version__") = PSTWALK_XSTR(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
