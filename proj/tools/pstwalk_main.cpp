// Command line front end. Exit codes: 0 success, 1 usage error,
// 2 verification mismatch, 3 internal inconsistency.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "pstwalk/classifier.hpp"
#include "pstwalk/errors.hpp"
#include "pstwalk/report.hpp"
#include "pstwalk/symmetry.hpp"
#include "pstwalk/verify.hpp"

namespace {

using namespace pstwalk;

void write_or_print(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot open output file: " + path);
  out << content;
}

std::map<long, std::vector<int>> parse_prime_choices(const std::vector<std::string>& raw,
                                                     const std::vector<int>& a3) {
  std::map<long, std::vector<int>> choices;
  if (!a3.empty()) choices[3] = a3;
  for (const std::string& entry : raw) {
    const auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw DomainError("--ap expects p:r1,r2,... (got '" + entry + "')");
    const long p = std::stol(entry.substr(0, colon));
    std::vector<int> residues;
    std::stringstream rest(entry.substr(colon + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) residues.push_back(std::stoi(tok));
    choices[p] = residues;
  }
  return choices;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Perfect state transfer toolkit for arc-reversal walks on circulant graphs"};
  app.require_subcommand(1);

  int n = 0, x = 0, from = 0, to = -1, tau_max = 0, n_max = 12, tau_factor = 4, jobs = 1;
  int delta_l = 0, delta_a = 0, delta_b = 0;
  int pair_x = 0, pair_y = -1;
  long cyclo_x = 0;
  std::vector<int> s_residues, a3, aut_map;
  std::vector<std::string> prime_choices;
  std::string out_path, suite = "all", format = "json";
  std::uint64_t seed = 7;
  double pst_tol = tol::kPstFidelity;
  double group_tol = tol::kEigenGroup;
  double support_tol = tol::kSupport;

  app.add_option("--tol", pst_tol, "Fidelity tolerance for transfer hits")
      ->envname("GPST_TOL");
  app.add_option("--group-tol", group_tol, "Numeric eigenvalue grouping tolerance")
      ->envname("GPST_GROUP_TOL");
  app.add_option("--support-tol", support_tol, "Eigenvalue support tolerance")
      ->envname("GPST_SUPPORT_TOL");

  CLI::App* classify_cmd = app.add_subcommand("classify", "Closed-form transfer decision");
  classify_cmd->add_option("--n", n, "Ring size")->required();
  classify_cmd->add_option("--s", s_residues, "Connection residues (closed under negation)")
      ->required()
      ->delimiter(',');
  classify_cmd->add_option("--out", out_path, "Output JSON path (stdout when omitted)");

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Fidelity trace of the walk");
  simulate_cmd->add_option("--n", n, "Ring size")->required();
  simulate_cmd->add_option("--s", s_residues, "Connection residues")->required()->delimiter(',');
  simulate_cmd->add_option("--from", from, "Source vertex")->required();
  simulate_cmd->add_option("--to", to, "Target vertex")->required();
  simulate_cmd->add_option("--tau-max", tau_max, "Number of steps")
      ->required()
      ->envname("GPST_TAU_MAX")
      ->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--out", out_path, "Output CSV path (stdout when omitted)");

  CLI::App* search_cmd = app.add_subcommand("search", "Minimum-time search with cross-check");
  search_cmd->add_option("--n", n, "Ring size")->required();
  search_cmd->add_option("--s", s_residues, "Connection residues")->required()->delimiter(',');
  search_cmd->add_option("--x", x, "Source vertex");
  search_cmd->add_option("--tau-max", tau_max, "Search horizon (default 4n)")
      ->envname("GPST_TAU_MAX");
  search_cmd->add_option("--out", out_path, "Output JSON path (stdout when omitted)");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite, "theorems | lemmas | cyclotomic | all")
      ->envname("GPST_SUITE");
  verify_cmd->add_option("--n-max", n_max, "Largest ring size in the sweep")
      ->envname("GPST_N_MAX");
  verify_cmd->add_option("--tau-factor", tau_factor, "Search horizon as a multiple of n")
      ->envname("GPST_TAU_FACTOR");
  verify_cmd->add_option("--seed", seed, "Seed for sampled checks")->envname("GPST_SEED");
  verify_cmd->add_option("--jobs", jobs, "Worker threads for the sweep")->envname("GPST_JOBS");
  verify_cmd->add_option("--out", out_path,
                         "Report base path; writes <out>.jsonl and <out>.csv");
  verify_cmd->add_option("--format", format, "Stream format on stdout: json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("GPST_FORMAT");

  CLI::App* aut_cmd =
      app.add_subcommand("aut", "Validate a vertex permutation as an automorphism");
  aut_cmd->add_option("--n", n, "Ring size")->required();
  aut_cmd->add_option("--s", s_residues, "Connection residues")->required()->delimiter(',');
  aut_cmd->add_option("--map", aut_map, "Images of 0..n-1 in one-line notation")
      ->required()
      ->delimiter(',');
  aut_cmd->add_option("--x", pair_x, "First vertex of the obstruction pair");
  aut_cmd->add_option("--y", pair_y, "Second vertex of the obstruction pair");
  aut_cmd->add_option("--out", out_path, "Output JSON path (stdout when omitted)");

  CLI::App* eigen_cmd = app.add_subcommand("eigentable", "Eigenvalue table as CSV");
  eigen_cmd->add_option("--n", n, "Ring size")->required();
  eigen_cmd->add_option("--s", s_residues, "Connection residues")->required()->delimiter(',');
  eigen_cmd->add_option("--out", out_path, "Output CSV path (stdout when omitted)");

  CLI::App* cyclo_cmd = app.add_subcommand("cyclo", "Exact cyclotomic operations");
  cyclo_cmd->require_subcommand(1);
  CLI::App* delta_cmd = cyclo_cmd->add_subcommand(
      "delta", "Integrality of the half root sum for {±a, ±b} on Z_2l");
  delta_cmd->add_option("--l", delta_l, "Half ring size")->required();
  delta_cmd->add_option("--a", delta_a, "First residue")->required();
  delta_cmd->add_option("--b", delta_b, "Second residue")->required();
  delta_cmd->add_option("--out", out_path, "Output JSON path (stdout when omitted)");
  CLI::App* decompose_cmd =
      cyclo_cmd->add_subcommand("decompose", "Prime-power exponent decomposition");
  decompose_cmd->add_option("--n", n, "Conductor")->required();
  decompose_cmd->add_option("--x", cyclo_x, "Exponent")->required();
  decompose_cmd->add_option("--out", out_path, "Output JSON path (stdout when omitted)");
  CLI::App* basis_cmd = cyclo_cmd->add_subcommand("basis", "Canonical integral basis");
  basis_cmd->add_option("--n", n, "Conductor")->required();
  basis_cmd->add_option("--a3", a3, "Residue choice at p = 3")->delimiter(',');
  basis_cmd->add_option("--ap", prime_choices, "Residue choice as p:r1,r2,... (repeatable)");
  basis_cmd->add_option("--out", out_path, "Output JSON path (stdout when omitted)");

  try {
    app.parse(argc, argv);

    if (classify_cmd->parsed()) {
      const CirculantSpec spec = CirculantSpec::make(n, s_residues);
      const PSTVerdict verdict = classify(spec);
      write_or_print(out_path, verdict_to_jv(verdict, &spec).dump() + "\n");
      return 0;
    }

    if (simulate_cmd->parsed()) {
      const CirculantSpec spec = CirculantSpec::make(n, s_residues);
      const WalkMatrices wm = build_walk_matrices(build_circulant(spec));
      const FidelityTrace trace =
          fidelity_trace(wm.evolution, vertex_type_state(wm, from),
                         vertex_type_state(wm, to), tau_max, pst_tol);
      write_or_print(out_path, trace_to_csv(trace));
      return 0;
    }

    if (search_cmd->parsed()) {
      const CirculantSpec spec = CirculantSpec::make(n, s_residues);
      const WalkMatrices wm = build_walk_matrices(build_circulant(spec));
      const int horizon = tau_max > 0 ? tau_max : 4 * spec.n;
      const PSTVerdict verdict = search_min_pst(wm, x, horizon, &spec, pst_tol);
      write_or_print(out_path, verdict_to_jv(verdict, &spec).dump() + "\n");
      return 0;
    }

    if (verify_cmd->parsed()) {
      VerifyConfig config;
      config.suite = suite;
      config.n_max = n_max;
      config.tau_factor = tau_factor;
      config.seed = seed;
      config.jobs = jobs;
      const VerifyOutcome outcome = run_verify(config);
      if (out_path.empty()) {
        std::cout << (format == "csv" ? outcome.csv : outcome.jsonl);
        std::cerr << "checks=" << outcome.checks << " failures=" << outcome.failures << "\n";
      } else {
        write_or_print(out_path + ".jsonl", outcome.jsonl);
        write_or_print(out_path + ".csv", outcome.csv);
        std::cout << "checks=" << outcome.checks << " failures=" << outcome.failures << "\n";
      }
      return outcome.failures == 0 ? 0 : 2;
    }

    if (aut_cmd->parsed()) {
      const CirculantSpec spec = CirculantSpec::make(n, s_residues);
      const Graph g = build_circulant(spec);
      const WalkMatrices wm = build_walk_matrices(g);
      const VertexAutomorphism aut = make_vertex_automorphism(g, aut_map);
      Jv j = Jv::object();
      j.set("spec", spec_to_jv(spec));
      j.set("valid", Jv::boolean(true));
      j.set("intertwining_deviation", Jv::real(verify_intertwining(wm, aut)));
      Jv fixes = Jv::array();
      for (int v = 0; v < g.vertex_count; ++v) {
        if (aut.apply(v) == v) fixes.push(Jv::num(v));
      }
      j.set("fixed_vertices", std::move(fixes));
      if (pair_y >= 0) {
        j.set("pair", Jv::array().push(Jv::num(pair_x)).push(Jv::num(pair_y)));
        j.set("obstructed", Jv::boolean(fixing_group_obstruction(pair_x, pair_y, {aut})));
      }
      write_or_print(out_path, j.dump() + "\n");
      return 0;
    }

    if (eigen_cmd->parsed()) {
      const CirculantSpec spec = CirculantSpec::make(n, s_residues);
      write_or_print(out_path, eigen_table_csv(spec));
      return 0;
    }

    if (delta_cmd->parsed()) {
      write_or_print(out_path, delta_to_jv(delta_integrality(delta_l, delta_a, delta_b)).dump() + "\n");
      return 0;
    }
    if (decompose_cmd->parsed()) {
      write_or_print(out_path, decomposition_to_jv(crt_decompose(n, cyclo_x)).dump() + "\n");
      return 0;
    }
    if (basis_cmd->parsed()) {
      const BosmaBasis basis = bosma_basis(n, parse_prime_choices(prime_choices, a3));
      Jv j = Jv::object();
      j.set("conductor", Jv::num(basis.conductor));
      Jv choices = Jv::object();
      for (const auto& [p, residues] : basis.a_choices) {
        Jv arr = Jv::array();
        for (int r : residues) arr.push(Jv::num(r));
        choices.set(std::to_string(p), std::move(arr));
      }
      j.set("a_choices", std::move(choices));
      Jv exps = Jv::array();
      for (long e : basis.exponents) exps.push(Jv::num(e));
      j.set("exponents", std::move(exps));
      write_or_print(out_path, j.dump() + "\n");
      return 0;
    }
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  } catch (const InternalInconsistencyError& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
