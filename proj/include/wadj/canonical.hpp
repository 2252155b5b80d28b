#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "wadj/graph.hpp"

namespace wadj {

inline constexpr std::size_t kDefaultCanonicalBound = 16;

/// Byte string identifying an isomorphism class: equal certificates iff the
/// graphs are isomorphic.
struct CanonicalForm {
  std::string certificate;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;
};

/// canonical_labeling(g)[v] is the canonical position of vertex v.
///
/// Colour refinement followed by individualisation backtracking that keeps
/// the lexicographically smallest adjacency rows. Branches on twin vertices
/// (equal neighbourhoods up to each other) are skipped since swapping twins
/// is an automorphism.
std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t max_order = kDefaultCanonicalBound);

CanonicalForm canonical_form(const Graph& g, std::size_t max_order = kDefaultCanonicalBound);

/// Canonical representative together with its certificate.
std::pair<Graph, CanonicalForm> canonicalize(const Graph& g, std::size_t max_order = kDefaultCanonicalBound);

/// g relabeled by its canonical labeling; isomorphic graphs give equal results.
Graph canonical_graph(const Graph& g, std::size_t max_order = kDefaultCanonicalBound);

bool isomorphic(const Graph& a, const Graph& b, std::size_t max_order = kDefaultCanonicalBound);

}  // namespace wadj
