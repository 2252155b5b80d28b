#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace wadj {

using Vertex = std::uint32_t;

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u{0};
  Vertex v{0};

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept sorted and deduplicated; construction rejects
/// self-loops, repeated edges and endpoints outside the vertex range.
/// Graphs are immutable values: every modifying operation returns a new graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);
  Graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t degree(Vertex v) const;
  const std::vector<std::size_t>& degrees() const { return degrees_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  std::size_t max_degree() const;
  std::size_t min_degree() const;

  /// Degree sequence in non-increasing order.
  std::vector<std::size_t> degree_sequence() const;

  bool connected() const;
  std::size_t component_count() const;

  /// m - n + 1; meaningful as the cyclomatic number for connected graphs.
  long cyclomatic_number() const;
  bool is_bicyclic() const { return connected() && cyclomatic_number() == 2; }

  Graph with_edges_added(const std::vector<Edge>& extra) const;
  Graph with_edges_removed(const std::vector<Edge>& removed) const;

  /// Relabel so that old vertex v becomes perm[v].
  Graph relabeled(const std::vector<Vertex>& perm) const;

  /// Induced subgraph on `keep` (renumbered in the given order).
  Graph induced(const std::vector<Vertex>& keep) const;

  bool operator==(const Graph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
  }

 private:
  void build_adjacency();

  std::size_t order_{0};
  std::vector<Edge> edges_;
  std::vector<std::size_t> degrees_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Edge make_edge(Vertex a, Vertex b);

// graph6 interchange (header-free form, n <= 62).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// Debug edge-list text: a "# n <order>" header followed by one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Graph& g);

}  // namespace wadj
