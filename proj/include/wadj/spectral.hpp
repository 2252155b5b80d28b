#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wadj/graph.hpp"
#include "wadj/weights.hpp"

namespace wadj {

/// Dense symmetric matrix, row-major.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  std::size_t dimension() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  /// Writes both (i,j) and (j,i).
  void set(std::size_t i, std::size_t j, double value) {
    data_[i * n_ + j] = value;
    data_[j * n_ + i] = value;
  }
  const std::vector<double>& data() const { return data_; }

  SymmetricMatrix scaled(double c) const;
  bool is_symmetric() const;

 private:
  std::size_t n_{0};
  std::vector<double> data_;
};

/// A_f(G) together with the graph and weight it was built from.
struct WeightedMatrix {
  SymmetricMatrix entries;
  Graph graph;
  WeightFunction weight;

  std::size_t dimension() const { return entries.dimension(); }
};

WeightedMatrix build_matrix(const Graph& g, const WeightFunction& f);

struct SpectralOptions {
  /// Relative bound on ||Av - rho v||_inf / max(1, rho).
  double tolerance{1e-10};
  bool full_spectrum{false};
};

struct SpectralResult {
  double rho{0.0};
  /// Unit 2-norm; first component with |v_i| > 1e-12 is positive.
  std::vector<double> perron;
  double residual{0.0};
  /// Ascending, present when requested.
  std::optional<std::vector<double>> spectrum;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest |eigenvalue| with its eigenvector. The n = 0 and n = 1 cases
/// return rho = 0.
SpectralResult spectral_radius(const SymmetricMatrix& m, const SpectralOptions& opts = {});
SpectralResult spectral_radius(const WeightedMatrix& m, const SpectralOptions& opts = {});

std::vector<double> full_spectrum(const SymmetricMatrix& m);
std::vector<double> full_spectrum(const WeightedMatrix& m);

/// Shorthand for spectral_radius(build_matrix(g, f)).rho.
double rho_f(const Graph& g, const WeightFunction& f);

}  // namespace wadj
