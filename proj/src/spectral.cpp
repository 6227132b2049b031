#include "pstwalk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "pstwalk/errors.hpp"

namespace pstwalk {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

Eigen::MatrixXd circulant_discriminant(const CirculantSpec& spec) {
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(spec.n, spec.n);
  const double w = 1.0 / spec.valency();
  for (int x = 0; x < spec.n; ++x) {
    for (int r : spec.s) p(x, (x + r) % spec.n) = w;
  }
  return p;
}

}  // namespace

std::vector<std::pair<CycloElem, double>> circulant_eigenvalues(const CirculantSpec& spec) {
  if (spec.valency() == 0) throw DomainError("circulant_eigenvalues: empty connection set");
  std::vector<std::pair<CycloElem, double>> out;
  out.reserve(spec.n);
  const Rat inv_valency = make_rat(1, spec.valency());
  for (int j = 0; j < spec.n; ++j) {
    CycloElem tag = CycloElem::zero(spec.n);
    for (int s : spec.s) tag = tag + CycloElem::root_power(spec.n, static_cast<long>(j) * s);
    tag = tag.scaled(inv_valency);
    out.emplace_back(tag, tag.embed().real());
  }
  return out;
}

SpectralDecomposition decompose(const CirculantSpec& spec) {
  const auto evals = circulant_eigenvalues(spec);
  SpectralDecomposition dec;
  dec.spec = spec;
  dec.source = circulant_discriminant(spec);

  // Group indices by exact tag equality.
  for (int j = 0; j < spec.n; ++j) {
    bool placed = false;
    for (EigenClass& cls : dec.classes) {
      if (*cls.exact_tag == evals[j].first) {
        cls.indices.push_back(j);
        placed = true;
        break;
      }
    }
    if (!placed) {
      EigenClass cls;
      cls.exact_tag = evals[j].first;
      cls.value = evals[j].second;
      cls.indices = {j};
      dec.classes.push_back(std::move(cls));
    }
  }

  // Projector of a class: (1/n) sum_{j in I} u_j u_j^*, with the character
  // eigenvectors (u_j)_k = zeta_n^{jk}; entry (x, y) is
  // (1/n) sum_j zeta_n^{j (x - y)}.
  const int n = spec.n;
  for (EigenClass& cls : dec.classes) {
    cls.projector = Eigen::MatrixXcd::Zero(n, n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::complex<double> acc(0.0, 0.0);
        for (int j : cls.indices) {
          const double angle = 2.0 * kPi * ((static_cast<long>(j) * (x - y)) % n) / n;
          acc += std::complex<double>(std::cos(angle), std::sin(angle));
        }
        cls.projector(x, y) = acc / static_cast<double>(n);
      }
    }
  }

  std::sort(dec.classes.begin(), dec.classes.end(),
            [](const EigenClass& a, const EigenClass& b) { return a.value > b.value; });
  return dec;
}

SpectralDecomposition decompose(const Eigen::MatrixXd& p, double group_tol, double gap_tol) {
  if (p.rows() != p.cols()) throw DomainError("decompose: matrix must be square");
  if ((p - p.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw DomainError("decompose: matrix must be symmetric");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(p);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("decompose: eigensolver failed");
  const Eigen::VectorXd values = solver.eigenvalues();  // ascending
  const Eigen::MatrixXd vectors = solver.eigenvectors();

  // Cluster adjacent eigenvalues within group_tol.
  std::vector<std::pair<int, int>> groups;  // [first, last] index ranges
  int start = 0;
  for (int i = 1; i <= values.size(); ++i) {
    if (i == values.size() || values[i] - values[i - 1] > group_tol) {
      groups.emplace_back(start, i - 1);
      start = i;
    }
  }
  for (size_t g = 1; g < groups.size(); ++g) {
    const double gap = values[groups[g].first] - values[groups[g - 1].second];
    if (gap < gap_tol)
      throw AmbiguousGroupingError("decompose: eigenvalue clusters closer than the required gap");
  }

  SpectralDecomposition dec;
  dec.source = p;
  for (auto [lo, hi] : groups) {
    EigenClass cls;
    double mean = 0.0;
    Eigen::MatrixXd proj = Eigen::MatrixXd::Zero(p.rows(), p.cols());
    for (int i = lo; i <= hi; ++i) {
      mean += values[i];
      proj += vectors.col(i) * vectors.col(i).transpose();
    }
    cls.value = mean / (hi - lo + 1);
    cls.projector = proj.cast<std::complex<double>>();
    dec.classes.push_back(std::move(cls));
  }
  std::sort(dec.classes.begin(), dec.classes.end(),
            [](const EigenClass& a, const EigenClass& b) { return a.value > b.value; });
  return dec;
}

std::vector<int> eigenvalue_support(const SpectralDecomposition& dec, const Eigen::VectorXd& v,
                                    double support_tol) {
  if (v.size() != dec.dimension()) throw DomainError("eigenvalue_support: dimension mismatch");
  std::vector<int> support;
  for (int i = 0; i < static_cast<int>(dec.classes.size()); ++i) {
    if ((dec.classes[i].projector * v.cast<std::complex<double>>()).norm() > support_tol)
      support.push_back(i);
  }
  return support;
}

std::vector<SignRelation> projector_sign_relation(const SpectralDecomposition& dec, int x, int y,
                                                  double match_tol) {
  const int n = dec.dimension();
  if (x < 0 || y < 0 || x >= n || y >= n)
    throw DomainError("projector_sign_relation: vertex out of range");

  std::vector<SignRelation> out;
  if (dec.exact()) {
    // E e_x = (1/n) sum_j zeta^{-jx} u_j, so E e_x = s * E e_y exactly when
    // zeta^{j(y-x)} = s for every index j of the class.
    const int diff = ((y - x) % n + n) % n;
    for (const EigenClass& cls : dec.classes) {
      bool all_plus = true, all_minus = true;
      for (int j : cls.indices) {
        const long v = (static_cast<long>(j) * diff) % n;
        if (v != 0) all_plus = false;
        if (n % 2 != 0 || v != n / 2) all_minus = false;
      }
      out.push_back(all_plus ? SignRelation::kPlus
                             : (all_minus ? SignRelation::kMinus : SignRelation::kMixed));
    }
    return out;
  }

  Eigen::VectorXcd ex = Eigen::VectorXcd::Zero(n);
  Eigen::VectorXcd ey = Eigen::VectorXcd::Zero(n);
  ex[x] = 1.0;
  ey[y] = 1.0;
  for (const EigenClass& cls : dec.classes) {
    const Eigen::VectorXcd px = cls.projector * ex;
    const Eigen::VectorXcd py = cls.projector * ey;
    if (px.norm() <= tol::kSupport && py.norm() <= tol::kSupport) {
      out.push_back(SignRelation::kPlus);  // annihilates both; unconstrained
    } else if ((px - py).norm() <= match_tol) {
      out.push_back(SignRelation::kPlus);
    } else if ((px + py).norm() <= match_tol) {
      out.push_back(SignRelation::kMinus);
    } else {
      out.push_back(SignRelation::kMixed);
    }
  }
  return out;
}

}  // namespace pstwalk
