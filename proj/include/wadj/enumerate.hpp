#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wadj/canonical.hpp"
#include "wadj/graph.hpp"

namespace wadj {

enum class EnumerationMethod {
  /// Every ∞/θ base with at most n vertices, completed by hanging rooted
  /// trees on base vertices.
  constructive,
  /// Every free tree on n vertices plus every pair of non-edges.
  edge_subset,
};

std::string to_string(EnumerationMethod method);
EnumerationMethod parse_method(const std::string& text);

struct EnumerationReport {
  int n{0};
  std::size_t count{0};
  EnumerationMethod method{EnumerationMethod::constructive};
  /// Sorted by certificate; graphs[i] is the canonical representative of
  /// certificates[i].
  std::vector<CanonicalForm> certificates;
  std::vector<Graph> graphs;
};

inline constexpr int kMaxEnumerationOrder = 10;
inline constexpr int kMaxEdgeSubsetOrder = 9;

struct EnumerationOptions {
  /// Raise the edge_subset bound to kMaxEnumerationOrder.
  bool allow_large_edge_subset{false};
};

/// All connected bicyclic graphs on n vertices up to isomorphism, 4 <= n <= 10.
EnumerationReport enumerate_bicyclic(int n, EnumerationMethod method = EnumerationMethod::constructive,
                                     const EnumerationOptions& opts = {});

/// The classes of enumerate_bicyclic(n) with maximum degree exactly delta.
EnumerationReport enumerate_with_max_degree(int n, int delta,
                                            EnumerationMethod method = EnumerationMethod::constructive,
                                            const EnumerationOptions& opts = {});

/// Bicyclic graphs with maximum degree n-2, generated directly: a centre
/// adjacent to all but one vertex z, plus three edges among the other n-1
/// vertices touching z at least once. Works beyond the exhaustive bound
/// (up to the canonical-form bound).
EnumerationReport enumerate_max_degree_n_minus_2(int n);

/// Free trees on n vertices up to isomorphism (n <= 16).
std::vector<Graph> enumerate_trees(int n);

/// Rooted trees with `size` vertices as parent arrays (parent[0] = 0 is the root).
std::vector<std::vector<Vertex>> enumerate_rooted_trees(int size);

}  // namespace wadj
