#include "wadj/graph.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wadj {

Edge make_edge(Vertex a, Vertex b) {
  if (a == b) {
    throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(std::size_t order) : order_(order) { build_adjacency(); }

Graph::Graph(std::size_t order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  for (auto& e : edges_) {
    e = make_edge(e.u, e.v);
    if (e.v >= order_) {
      throw std::invalid_argument("graph: endpoint " + std::to_string(e.v) +
                                  " out of range for order " + std::to_string(order_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("graph: duplicate edge " + std::to_string(dup->u) + "-" +
                                std::to_string(dup->v));
  }
  build_adjacency();
}

void Graph::build_adjacency() {
  degrees_.assign(order_, 0);
  adjacency_.assign(order_, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (std::size_t v = 0; v < order_; ++v) {
    std::sort(adjacency_[v].begin(), adjacency_[v].end());
    degrees_[v] = adjacency_[v].size();
  }
}

std::size_t Graph::degree(Vertex v) const {
  if (v >= order_) throw std::out_of_range("graph: vertex out of range");
  return degrees_[v];
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v >= order_) throw std::out_of_range("graph: vertex out of range");
  return adjacency_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= order_ || b >= order_ || a == b) return false;
  const auto& adj = adjacency_[a];
  return std::binary_search(adj.begin(), adj.end(), b);
}

std::size_t Graph::max_degree() const {
  return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::min_degree() const {
  return degrees_.empty() ? 0 : *std::min_element(degrees_.begin(), degrees_.end());
}

std::vector<std::size_t> Graph::degree_sequence() const {
  auto seq = degrees_;
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

std::size_t Graph::component_count() const {
  std::vector<bool> seen(order_, false);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex s = 0; s < order_; ++s) {
    if (seen[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : adjacency_[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

bool Graph::connected() const { return order_ > 0 && component_count() == 1; }

long Graph::cyclomatic_number() const {
  return static_cast<long>(edges_.size()) - static_cast<long>(order_) + 1;
}

Graph Graph::with_edges_added(const std::vector<Edge>& extra) const {
  auto edges = edges_;
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(order_, std::move(edges));
}

Graph Graph::with_edges_removed(const std::vector<Edge>& removed) const {
  std::vector<Edge> gone;
  gone.reserve(removed.size());
  for (const auto& e : removed) gone.push_back(make_edge(e.u, e.v));
  std::sort(gone.begin(), gone.end());
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (const auto& e : edges_) {
    if (!std::binary_search(gone.begin(), gone.end(), e)) kept.push_back(e);
  }
  if (kept.size() + gone.size() != edges_.size()) {
    throw std::invalid_argument("graph: removing an edge that is not present");
  }
  return Graph(order_, std::move(kept));
}

Graph Graph::relabeled(const std::vector<Vertex>& perm) const {
  if (perm.size() != order_) throw std::invalid_argument("graph: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const auto& e : edges_) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return Graph(order_, std::move(edges));
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<long> index(order_, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<long>(i);
  std::vector<Edge> edges;
  for (const auto& e : edges_) {
    if (index[e.u] >= 0 && index[e.v] >= 0) {
      edges.push_back(make_edge(static_cast<Vertex>(index[e.u]), static_cast<Vertex>(index[e.v])));
    }
  }
  return Graph(keep.size(), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 62) throw std::invalid_argument("graph6: only n <= 62 is supported");
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("graph6: empty string");
  for (char c : text) {
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
  }
  const int n = text[0] - 63;
  if (n > 62) throw std::invalid_argument("graph6: only n <= 62 is supported");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + (pairs + 5) / 6;
  if (text.size() != expected) {
    throw std::invalid_argument("graph6: length " + std::to_string(text.size()) +
                                " does not match order " + std::to_string(n));
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "# n " << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph from_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string line;
  std::size_t order = 0;
  bool have_order = false;
  std::vector<Edge> edges;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (line[0] == '#') {
      std::string hash, key;
      ls >> hash >> key;
      if (key == "n" && (ls >> order)) have_order = true;
      continue;
    }
    long a = -1, b = -1;
    if (!(ls >> a >> b) || a < 0 || b < 0) {
      throw std::invalid_argument("edge list: malformed line '" + line + "'");
    }
    edges.push_back(make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  }
  if (!have_order) {
    for (const auto& e : edges) order = std::max<std::size_t>(order, e.v + 1);
  }
  return Graph(order, std::move(edges));
}

std::ostream& operator<<(std::ostream& os, const Graph& g) {
  os << "Graph(n=" << g.order() << ", edges=[";
  bool first = true;
  for (const auto& e : g.edges()) {
    if (!first) os << ", ";
    os << e.u << '-' << e.v;
    first = false;
  }
  return os << "])";
}

}  // namespace wadj
