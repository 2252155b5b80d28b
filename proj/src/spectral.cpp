#include "wadj/spectral.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wadj {

namespace {

Eigen::MatrixXd to_eigen(const SymmetricMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = m(i, j);
  }
  return out;
}

Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solve(const Eigen::MatrixXd& a, bool vectors) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      a, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "spectral: symmetric eigensolver did not converge (n=" << a.rows()
       << ", max|a_ij|=" << a.cwiseAbs().maxCoeff() << ")";
    throw ConvergenceError(os.str());
  }
  return solver;
}

}  // namespace

SymmetricMatrix SymmetricMatrix::scaled(double c) const {
  SymmetricMatrix out(n_);
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = c * data_[k];
  return out;
}

bool SymmetricMatrix::is_symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

WeightedMatrix build_matrix(const Graph& g, const WeightFunction& f) {
  WeightedMatrix out{SymmetricMatrix(g.order()), g, f};
  const auto& deg = g.degrees();
  for (const auto& e : g.edges()) {
    out.entries.set(e.u, e.v, f(static_cast<double>(deg[e.u]), static_cast<double>(deg[e.v])));
  }
  return out;
}

SpectralResult spectral_radius(const SymmetricMatrix& m, const SpectralOptions& opts) {
  SpectralResult result;
  const std::size_t n = m.dimension();
  if (n <= 1) {
    result.perron.assign(n, 1.0);
    if (opts.full_spectrum) result.spectrum = std::vector<double>(n, n == 1 ? m(0, 0) : 0.0);
    if (n == 1) result.rho = std::abs(m(0, 0));
    return result;
  }

  const Eigen::MatrixXd a = to_eigen(m);
  const auto solver = solve(a, true);
  const auto& values = solver.eigenvalues();
  const Eigen::Index last = values.size() - 1;
  // Eigenvalues are ascending; the extreme by magnitude is at one end. For
  // bipartite graphs both ends agree up to rounding, and the top one carries
  // the nonnegative Perron vector, so the bottom wins only by a clear margin.
  const double top = std::abs(values(last));
  const Eigen::Index pick = std::abs(values(0)) > top + 1e-10 * std::max(1.0, top) ? 0 : last;
  const double lambda = values(pick);
  Eigen::VectorXd v = solver.eigenvectors().col(pick);

  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      break;
    }
  }

  result.rho = std::abs(lambda);
  result.perron.assign(v.data(), v.data() + v.size());
  result.residual = (a * v - lambda * v).cwiseAbs().maxCoeff();
  if (opts.full_spectrum) result.spectrum = std::vector<double>(values.data(), values.data() + values.size());

  if (!(result.residual <= opts.tolerance * std::max(1.0, result.rho))) {
    std::ostringstream os;
    os << "spectral: residual " << result.residual << " exceeds tolerance "
       << opts.tolerance * std::max(1.0, result.rho) << " (rho=" << result.rho << ", n=" << n << ")";
    throw ConvergenceError(os.str());
  }
  return result;
}

SpectralResult spectral_radius(const WeightedMatrix& m, const SpectralOptions& opts) {
  return spectral_radius(m.entries, opts);
}

std::vector<double> full_spectrum(const SymmetricMatrix& m) {
  const std::size_t n = m.dimension();
  if (n == 0) return {};
  if (n == 1) return {m(0, 0)};
  const auto solver = solve(to_eigen(m), false);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::vector<double> full_spectrum(const WeightedMatrix& m) { return full_spectrum(m.entries); }

double rho_f(const Graph& g, const WeightFunction& f) {
  return spectral_radius(build_matrix(g, f)).rho;
}

}  // namespace wadj
