#pragma once

// Independent reference routines used only by the tests.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "wadj/graph.hpp"
#include "wadj/weights.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<double>>;

inline Matrix weighted(const wadj::Graph& g, const wadj::WeightFunction& f) {
  Matrix m(g.order(), std::vector<double>(g.order(), 0.0));
  for (const auto& e : g.edges()) {
    const double w = f(static_cast<double>(g.degree(e.u)), static_cast<double>(g.degree(e.v)));
    m[e.u][e.v] = w;
    m[e.v][e.u] = w;
  }
  return m;
}

/// Cyclic Jacobi rotations; eigenvalues ascending.
inline std::vector<double> jacobi_eigenvalues(Matrix a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

inline double jacobi_rho(const wadj::Graph& g, const wadj::WeightFunction& f) {
  const auto ev = jacobi_eigenvalues(weighted(g, f));
  return ev.empty() ? 0.0 : std::max(std::abs(ev.front()), std::abs(ev.back()));
}

/// Smallest upper-triangle bit string over all vertex permutations.
inline std::string brute_canonical(const wadj::Graph& g) {
  const std::size_t n = g.order();
  std::vector<wadj::Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) s.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Classes of connected graphs with n vertices and n + 1 edges, by brute force
/// over every edge subset.
inline std::set<std::string> brute_bicyclic_classes(int n) {
  std::vector<wadj::Edge> all;
  for (wadj::Vertex a = 0; a < static_cast<wadj::Vertex>(n); ++a) {
    for (wadj::Vertex b = a + 1; b < static_cast<wadj::Vertex>(n); ++b) all.push_back({a, b});
  }
  std::set<std::string> classes;
  std::vector<bool> pick(all.size(), false);
  std::fill(pick.end() - (n + 1), pick.end(), true);
  do {
    std::vector<wadj::Edge> edges;
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (pick[i]) edges.push_back(all[i]);
    }
    const wadj::Graph g(static_cast<std::size_t>(n), edges);
    if (g.connected()) classes.insert(brute_canonical(g));
  } while (std::next_permutation(pick.begin(), pick.end()));
  return classes;
}

inline wadj::Graph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  std::vector<wadj::Edge> edges;
  for (wadj::Vertex v = 1; v < n; ++v) edges.push_back(wadj::make_edge(v, static_cast<wadj::Vertex>(rng() % v)));
  wadj::Graph g(n, edges);
  for (std::size_t k = 0; k < extra; ++k) {
    const auto a = static_cast<wadj::Vertex>(rng() % n);
    const auto b = static_cast<wadj::Vertex>(rng() % n);
    if (a != b && !g.has_edge(a, b)) g = g.with_edges_added({wadj::make_edge(a, b)});
  }
  return g;
}

inline wadj::Graph random_relabel(std::mt19937_64& rng, const wadj::Graph& g) {
  std::vector<wadj::Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

}  // namespace oracle
