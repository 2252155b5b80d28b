#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wadj/graph.hpp"

namespace wadj {

struct MovedEdge {
  Edge removed;  // u w
  Edge added;    // v w
};

struct TransformOutcome {
  Graph result;
  /// result is not isomorphic to the input
  bool changed{false};
  std::vector<MovedEdge> moved_edges;
  /// input was connected and result is not
  bool disconnected{false};
  /// `changed` was decided from invariants (degree sequence and spectrum)
  /// because the order exceeded kExactIsomorphismOrder
  bool probable{false};
};

inline constexpr std::size_t kExactIsomorphismOrder = 12;

struct IsomorphismVerdict {
  bool isomorphic{false};
  bool probable{false};
};

/// Canonical-form comparison up to kExactIsomorphismOrder vertices; above
/// that, degree sequence plus adjacency spectrum (to 1e-8), flagged probable.
IsomorphismVerdict compare_isomorphism(const Graph& a, const Graph& b);

/// Kelmans operation: every edge uw with w in N(u) - N[v] is replaced by vw.
/// Vertex labels are kept.
TransformOutcome kelmans(const Graph& g, Vertex u, Vertex v);

/// N(a) - N[b], ascending.
std::vector<Vertex> exclusive_neighbours(const Graph& g, Vertex a, Vertex b);

enum class PendantShiftViolation {
  invalid_vertex,
  same_vertex,
  w_not_exclusive,      // w is not in N(v) - N[u]
  v_side_not_pendant,   // some vertex of N(v) - N[u] has degree > 1
  u_side_not_pendant,   // some vertex of N(u) - N[v] has degree > 1
  size_condition,       // |N(v) - N[u]| > |N(u) - N[v]|
};

std::string to_string(PendantShiftViolation violation);

class PendantShiftError : public std::invalid_argument {
 public:
  explicit PendantShiftError(std::vector<PendantShiftViolation> violations);
  const std::vector<PendantShiftViolation>& violations() const { return violations_; }

 private:
  std::vector<PendantShiftViolation> violations_;
};

/// All violated preconditions of pendant_shift(g, v, u, w); empty when it applies.
std::vector<PendantShiftViolation> pendant_shift_violations(const Graph& g, Vertex v, Vertex u, Vertex w);

/// G - vw + uw for a pendant w hanging on v, moving it to u. Throws
/// PendantShiftError listing every violated precondition.
Graph pendant_shift(const Graph& g, Vertex v, Vertex u, Vertex w);

}  // namespace wadj
