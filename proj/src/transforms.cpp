#include "wadj/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "wadj/canonical.hpp"
#include "wadj/spectral.hpp"
#include "wadj/weights.hpp"

namespace wadj {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v >= g.order()) {
    throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) + " outside 0.." +
                            std::to_string(g.order() == 0 ? 0 : g.order() - 1));
  }
}

std::string join(const std::vector<PendantShiftViolation>& violations) {
  std::string out = "pendant_shift: precondition violated:";
  for (auto v : violations) out += " " + to_string(v);
  return out;
}

}  // namespace

IsomorphismVerdict compare_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size() || a.degree_sequence() != b.degree_sequence()) {
    return {false, false};
  }
  if (a == b) return {true, false};
  if (a.order() <= kExactIsomorphismOrder) return {isomorphic(a, b), false};

  static const WeightFunction one = WeightFunction::builtin(WeightKind::constant_one);
  const auto sa = full_spectrum(build_matrix(a, one));
  const auto sb = full_spectrum(build_matrix(b, one));
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (std::abs(sa[i] - sb[i]) > 1e-8) return {false, false};
  }
  return {true, true};
}

std::vector<Vertex> exclusive_neighbours(const Graph& g, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(a)) {
    if (w != b && !g.has_edge(w, b)) out.push_back(w);
  }
  return out;
}

TransformOutcome kelmans(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u, "kelmans");
  check_vertex(g, v, "kelmans");
  if (u == v) throw std::invalid_argument("kelmans: u and v must differ");

  TransformOutcome out;
  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex w : exclusive_neighbours(g, u, v)) {
    MovedEdge moved{make_edge(u, w), make_edge(v, w)};
    removed.push_back(moved.removed);
    added.push_back(moved.added);
    out.moved_edges.push_back(moved);
  }
  out.result = g.with_edges_removed(removed).with_edges_added(added);
  if (!out.moved_edges.empty()) {
    const auto verdict = compare_isomorphism(g, out.result);
    out.changed = !verdict.isomorphic;
    out.probable = verdict.probable;
  }
  out.disconnected = g.connected() && !out.result.connected();
  return out;
}

std::string to_string(PendantShiftViolation violation) {
  switch (violation) {
    case PendantShiftViolation::invalid_vertex: return "invalid_vertex";
    case PendantShiftViolation::same_vertex: return "same_vertex";
    case PendantShiftViolation::w_not_exclusive: return "w_not_exclusive";
    case PendantShiftViolation::v_side_not_pendant: return "v_side_not_pendant";
    case PendantShiftViolation::u_side_not_pendant: return "u_side_not_pendant";
    case PendantShiftViolation::size_condition: return "size_condition";
  }
  return "unknown";
}

PendantShiftError::PendantShiftError(std::vector<PendantShiftViolation> violations)
    : std::invalid_argument(join(violations)), violations_(std::move(violations)) {}

std::vector<PendantShiftViolation> pendant_shift_violations(const Graph& g, Vertex v, Vertex u, Vertex w) {
  const auto n = g.order();
  if (v >= n || u >= n || w >= n) return {PendantShiftViolation::invalid_vertex};
  if (u == v) return {PendantShiftViolation::same_vertex};

  std::vector<PendantShiftViolation> out;
  const auto n1 = exclusive_neighbours(g, v, u);
  const auto n2 = exclusive_neighbours(g, u, v);
  if (std::find(n1.begin(), n1.end(), w) == n1.end()) out.push_back(PendantShiftViolation::w_not_exclusive);
  auto pendant = [&](Vertex x) { return g.degree(x) == 1; };
  if (!std::all_of(n1.begin(), n1.end(), pendant)) out.push_back(PendantShiftViolation::v_side_not_pendant);
  if (!std::all_of(n2.begin(), n2.end(), pendant)) out.push_back(PendantShiftViolation::u_side_not_pendant);
  if (n1.size() > n2.size()) out.push_back(PendantShiftViolation::size_condition);
  return out;
}

Graph pendant_shift(const Graph& g, Vertex v, Vertex u, Vertex w) {
  auto violations = pendant_shift_violations(g, v, u, w);
  if (!violations.empty()) throw PendantShiftError(std::move(violations));
  return g.with_edges_removed({make_edge(v, w)}).with_edges_added({make_edge(u, w)});
}

}  // namespace wadj
