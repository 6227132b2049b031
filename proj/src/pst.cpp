#include "pstwalk/pst.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pstwalk/chebyshev.hpp"
#include "pstwalk/errors.hpp"

namespace pstwalk {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::optional<CosAngleWitness> recognize_cos_angle(double lambda, const CycloElem* tag, int tau,
                                                   int phi_cap, double numeric_tol) {
  if (tau < 1) throw std::invalid_argument("recognize_cos_angle: tau must be positive");
  if (std::abs(lambda) > 1.0 + 1e-12)
    throw std::invalid_argument("recognize_cos_angle: |lambda| exceeds 1");
  const double clamped = std::clamp(lambda, -1.0, 1.0);
  const int j_center = static_cast<int>(std::lround(tau * std::acos(clamped) / kPi));

  // cos(j pi / tau) is monotone in j, so only a contiguous candidate range
  // around the rounded value can be within reach of the float eigenvalue.
  std::vector<int> candidates;
  for (int j = std::max(0, j_center - 2); j <= std::min(tau, j_center + 2); ++j) {
    if (std::abs(clamped - std::cos(j * kPi / tau)) <= 1e-6) candidates.push_back(j);
  }

  if (tag != nullptr) {
    const long common = std::lcm(static_cast<long>(tag->conductor()), 2L * tau);
    if (euler_phi(common) <= phi_cap) {
      const CycloElem doubled = tag->scaled(Rat(2)).lifted(static_cast<int>(common));
      for (int j : candidates) {
        const long step = common / (2L * tau);
        const CycloElem rhs = CycloElem::root_power(static_cast<int>(common), step * j) +
                              CycloElem::root_power(static_cast<int>(common), -step * j);
        if (doubled == rhs) {
          return CosAngleWitness{j, (j % 2 == 0) ? Parity::kEven : Parity::kOdd, true};
        }
      }
      return std::nullopt;
    }
    // Degree cap exceeded: fall through to the numeric test.
  }

  for (int j : candidates) {
    if (std::abs(clamped - std::cos(j * kPi / tau)) <= numeric_tol) {
      return CosAngleWitness{j, (j % 2 == 0) ? Parity::kEven : Parity::kOdd, false};
    }
  }
  return std::nullopt;
}

CriterionResult pst_criterion_b(const WalkMatrices& wm, int x, int y, int tau,
                                double match_tol) {
  const int nv = wm.graph.vertex_count;
  if (x < 0 || y < 0 || x >= nv || y >= nv)
    throw DomainError("pst_criterion_b: vertex out of range");
  if (x == y) throw DomainError("pst_criterion_b: transfer requires distinct vertices");
  if (tau < 1) throw DomainError("pst_criterion_b: tau must be positive");

  Eigen::VectorXd ex = Eigen::VectorXd::Zero(nv);
  ex[x] = 1.0;
  ChebyshevColumnIterator it(wm.discriminant, ex);
  while (it.k() < tau) it.step();
  const Eigen::VectorXd& col = it.current();

  CriterionResult res;
  const double g = col[y];
  const int snapped = g >= 0.0 ? 1 : -1;
  if (std::abs(g - snapped) > match_tol) {
    res.detail = "overlap " + fmt(g) + " does not snap to +-1";
    return res;
  }
  Eigen::VectorXd target = Eigen::VectorXd::Zero(nv);
  target[y] = static_cast<double>(snapped);
  const double dev = (col - target).lpNorm<Eigen::Infinity>();
  if (dev > match_tol) {
    res.detail = "vector deviates from gamma e_y by " + fmt(dev);
    return res;
  }
  if (wm.graph.is_regular() && snapped != 1)
    throw InternalInconsistencyError("pst_criterion_b: gamma = -1 on a regular graph");
  res.holds = true;
  res.gamma = snapped;
  res.detail = "T_tau(P) e_x matches gamma e_y, deviation " + fmt(dev);
  return res;
}

CriterionResult pst_criterion_c(const SpectralDecomposition& dec, int x, int y, int tau,
                                double match_tol, double support_tol, int phi_cap) {
  const int nv = dec.dimension();
  if (x < 0 || y < 0 || x >= nv || y >= nv)
    throw DomainError("pst_criterion_c: vertex out of range");
  if (x == y) throw DomainError("pst_criterion_c: transfer requires distinct vertices");
  if (tau < 1) throw DomainError("pst_criterion_c: tau must be positive");

  const std::vector<SignRelation> signs = projector_sign_relation(dec, x, y, match_tol);
  Eigen::VectorXd ex = Eigen::VectorXd::Zero(nv);
  ex[x] = 1.0;
  const std::vector<int> support = eigenvalue_support(dec, ex, support_tol);

  CriterionResult res;
  for (size_t i = 0; i < dec.classes.size(); ++i) {
    res.classes.push_back({static_cast<int>(i), dec.classes[i].value, signs[i], std::nullopt});
  }

  for (size_t i = 0; i < signs.size(); ++i) {
    if (signs[i] == SignRelation::kMixed) {
      res.detail = "class " + std::to_string(i) + " (lambda = " + fmt(dec.classes[i].value) +
                   ") has mixed projector sign";
      return res;
    }
  }

  // Witnesses depend only on (lambda, tau); compute once per supported class.
  std::vector<std::optional<CosAngleWitness>> witnesses(dec.classes.size());
  for (int i : support) {
    const CycloElem* tag =
        dec.classes[i].exact_tag ? &*dec.classes[i].exact_tag : nullptr;
    witnesses[i] = recognize_cos_angle(dec.classes[i].value, tag, tau, phi_cap);
    res.classes[i].witness = witnesses[i];
  }

  for (int gamma : {1, -1}) {
    bool ok = true;
    for (int i : support) {
      const int sign = (signs[i] == SignRelation::kPlus) ? 1 : -1;
      const Parity needed = (sign == gamma) ? Parity::kEven : Parity::kOdd;
      if (!witnesses[i] || witnesses[i]->parity != needed) {
        ok = false;
        break;
      }
    }
    if (ok) {
      res.holds = true;
      res.gamma = gamma;
      res.detail = "sign pattern and cosine witnesses consistent for gamma = " +
                   std::to_string(gamma);
      return res;
    }
  }
  res.detail = "no gamma in {+1,-1} matches the witness parities";
  return res;
}

PSTVerdict search_min_pst(const WalkMatrices& wm, int x, int tau_max,
                          const CirculantSpec* spec, double pst_tol, double match_tol) {
  const int nv = wm.graph.vertex_count;
  if (x < 0 || x >= nv) throw DomainError("search_min_pst: vertex out of range");
  if (tau_max < 1) throw DomainError("search_min_pst: tau_max must be at least 1");

  PSTVerdict verdict;
  verdict.source = x;

  std::vector<int> candidates;
  if (spec != nullptr) {
    if (spec->n % 2 == 0) {
      candidates.push_back((x + spec->n / 2) % spec->n);
      verdict.evidence.push_back(
          {"candidate pruning", true,
           "rotation/inversion symmetry restricts the target to x + n/2"});
    } else {
      verdict.evidence.push_back(
          {"candidate pruning", true,
           "odd vertex count: symmetry leaves no admissible target"});
      verdict.evidence.push_back({"search", true, "no candidate targets to scan"});
      return verdict;
    }
  } else {
    for (int y = 0; y < nv; ++y) {
      if (y != x) candidates.push_back(y);
    }
  }

  Eigen::VectorXd ex = Eigen::VectorXd::Zero(nv);
  ex[x] = 1.0;
  ChebyshevColumnIterator cheb(wm.discriminant, ex);

  // Walk-side state, advanced in lockstep; real because U and d^T e_x are.
  Eigen::VectorXd walk = vertex_type_state(wm, x).amplitudes.real();

  // Precomputed target states.
  std::vector<Eigen::VectorXd> targets(nv);
  for (int y : candidates) targets[y] = vertex_type_state(wm, y).amplitudes.real();

  for (int tau = 1; tau <= tau_max; ++tau) {
    cheb.step();
    walk = wm.evolution * walk;
    const Eigen::VectorXd& col = cheb.current();

    std::vector<int> found;
    std::optional<int> gamma_found;
    for (int y : candidates) {
      // Polynomial criterion.
      bool b_holds = false;
      int gamma = 0;
      const double overlap = col[y];
      const int snapped = overlap >= 0.0 ? 1 : -1;
      if (std::abs(overlap - snapped) <= match_tol) {
        Eigen::VectorXd ref = Eigen::VectorXd::Zero(nv);
        ref[y] = static_cast<double>(snapped);
        if ((col - ref).lpNorm<Eigen::Infinity>() <= match_tol) {
          b_holds = true;
          gamma = snapped;
        }
      }

      // Brute-force check on the walk state.
      const double walk_overlap = targets[y].dot(walk);
      const double fidelity = std::abs(walk_overlap);
      bool bf_holds = false;
      if (fidelity >= 1.0 - pst_tol) {
        const int walk_gamma = walk_overlap >= 0.0 ? 1 : -1;
        const double dev =
            (walk - static_cast<double>(walk_gamma) * targets[y]).lpNorm<Eigen::Infinity>();
        bf_holds = dev <= match_tol;
      }

      if (b_holds != bf_holds) {
        std::ostringstream os;
        os << "search_min_pst: polynomial criterion and simulation disagree at tau=" << tau
           << " target=" << y << " (criterion=" << b_holds << ", fidelity=" << fidelity << ")";
        throw InternalInconsistencyError(os.str());
      }
      if (b_holds) {
        found.push_back(y);
        gamma_found = gamma;
        if (wm.graph.is_regular() && gamma != 1)
          throw InternalInconsistencyError("search_min_pst: gamma = -1 on a regular graph");
      }
    }

    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      verdict.occurs = true;
      verdict.target = found.front();
      verdict.co_targets = found;
      verdict.tau_min = tau;
      verdict.gamma = gamma_found;
      verdict.evidence.push_back(
          {"polynomial criterion", true,
           "T_tau(P) e_x = gamma e_y at tau = " + std::to_string(tau)});
      verdict.evidence.push_back(
          {"brute-force simulation", true,
           "U^tau maps the source state to gamma times the target state"});
      return verdict;
    }
  }

  verdict.evidence.push_back(
      {"search", true,
       "no transfer up to tau_max = " + std::to_string(tau_max) +
           "; polynomial criterion and simulation agree at every step"});
  return verdict;
}

}  // namespace pstwalk
