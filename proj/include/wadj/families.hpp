#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wadj/graph.hpp"

namespace wadj {

/// ∞-graph: cycles C_p and C_q joined by a path with l vertices
/// (l = 1 means the cycles share a vertex).
///
/// Labeling: the C_p cycle occupies 0..p-1 with vertex 0 on the path, the
/// path interior follows, then C_q starting at the path's far end.
Graph make_infinity(int p, int l, int q);

/// θ-graph: two terminals x = 0 and y = 1 joined by internally disjoint
/// paths of lengths p, l and q. Interior vertices follow in path order p, l, q.
Graph make_theta(int p, int l, int q);

enum class FamilyTag { G1, G2, G3, G4, Infinity, Theta };

struct NamedFamily {
  FamilyTag tag{FamilyTag::G1};
  int n{0};
  int p{0}, l{0}, q{0};

  static NamedFamily g1(int n) { return {FamilyTag::G1, n}; }
  static NamedFamily g2(int n) { return {FamilyTag::G2, n}; }
  static NamedFamily g3(int n) { return {FamilyTag::G3, n}; }
  static NamedFamily g4(int n) { return {FamilyTag::G4, n}; }
  static NamedFamily infinity(int p, int l, int q) { return {FamilyTag::Infinity, 0, p, l, q}; }
  static NamedFamily theta(int p, int l, int q) { return {FamilyTag::Theta, 0, p, l, q}; }

  /// Parses "G1:8", "G2:9", "B:3,1,3", "P:2,1,2".
  static NamedFamily parse(std::string_view text);
  std::string name() const;
};

/// G1(n): θ(2,1,2) with n-4 pendants at x (vertex 0).
/// G2(n): ∞(3,1,3) with n-5 pendants at the shared vertex 0.
/// G3(n): θ(2,1,2) with n-4 pendants at the degree-2 vertex 2.
/// G4(n): θ(2,1,2) with n-5 pendants at x and one at y (the last vertex).
Graph make_named(const NamedFamily& family);

/// Adds k new vertices (labels n..n+k-1), each joined only to v.
Graph attach_pendants(const Graph& g, Vertex v, std::size_t k);

enum class BaseKind { Infinity, Theta };

struct BaseGraph {
  Graph base;
  /// base vertex i corresponds to original vertex original[i]
  std::vector<Vertex> original;
  BaseKind kind{BaseKind::Theta};
  /// Normalized parameters: ∞ has p <= q; θ has l = min and p <= q.
  int p{0}, l{0}, q{0};

  std::string name() const;
};

/// Strips pendant vertices until none remain and classifies the remaining
/// bicyclic core as B(p,l,q) or P(p,l,q). Throws for non-bicyclic input.
BaseGraph base_graph(const Graph& g);

// Small reference graphs used by tests and the CLI.
Graph make_cycle(std::size_t n);
Graph make_path(std::size_t n);
Graph make_star(std::size_t n);
Graph make_complete(std::size_t n);
/// Two adjacent centers 0 and 1 carrying a and b leaves respectively.
Graph make_double_star(std::size_t a, std::size_t b);

}  // namespace wadj
