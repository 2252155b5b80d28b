#include "wadj/families.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>

namespace wadj {

namespace {

void add_cycle(std::vector<Edge>& edges, const std::vector<Vertex>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    edges.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
  }
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("family: expected an integer, got '" + std::string(s) + "'");
  }
  return value;
}

std::vector<int> parse_int_list(std::string_view s) {
  std::vector<int> out;
  while (true) {
    auto comma = s.find(',');
    out.push_back(parse_int(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph make_infinity(int p, int l, int q) {
  if (p < 3 || q < 3) throw std::invalid_argument("make_infinity: cycle lengths must be >= 3");
  if (l < 1) throw std::invalid_argument("make_infinity: path parameter l must be >= 1");

  const auto n = static_cast<std::size_t>(p + q + l - 2);
  std::vector<Edge> edges;
  std::vector<Vertex> first(p);
  for (int i = 0; i < p; ++i) first[i] = static_cast<Vertex>(i);
  add_cycle(edges, first);

  Vertex next = static_cast<Vertex>(p);
  Vertex prev = 0;
  for (int i = 1; i < l; ++i) {
    edges.push_back(make_edge(prev, next));
    prev = next++;
  }
  std::vector<Vertex> second{prev};
  for (int i = 1; i < q; ++i) second.push_back(next++);
  add_cycle(edges, second);
  return Graph(n, std::move(edges));
}

Graph make_theta(int p, int l, int q) {
  if (p < 2 || q < 2) throw std::invalid_argument("make_theta: p and q must be >= 2 (no multi-edges)");
  if (l < 1) throw std::invalid_argument("make_theta: l must be >= 1");

  const auto n = static_cast<std::size_t>(p + l + q - 1);
  std::vector<Edge> edges;
  Vertex next = 2;
  for (int len : {p, l, q}) {
    Vertex prev = 0;
    for (int i = 1; i < len; ++i) {
      edges.push_back(make_edge(prev, next));
      prev = next++;
    }
    edges.push_back(make_edge(prev, 1));
  }
  return Graph(n, std::move(edges));
}

NamedFamily NamedFamily::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("family: expected TAG:ARGS, got '" + std::string(text) + "'");
  }
  auto tag = text.substr(0, colon);
  auto args = parse_int_list(text.substr(colon + 1));
  auto need = [&](std::size_t count) {
    if (args.size() != count) {
      throw std::invalid_argument("family: wrong argument count in '" + std::string(text) + "'");
    }
  };
  if (tag == "G1" || tag == "G2" || tag == "G3" || tag == "G4") {
    need(1);
    const std::array tags{FamilyTag::G1, FamilyTag::G2, FamilyTag::G3, FamilyTag::G4};
    return {tags[tag[1] - '1'], args[0]};
  }
  if (tag == "B") {
    need(3);
    return infinity(args[0], args[1], args[2]);
  }
  if (tag == "P") {
    need(3);
    return theta(args[0], args[1], args[2]);
  }
  throw std::invalid_argument("family: unknown tag '" + std::string(tag) + "'");
}

std::string NamedFamily::name() const {
  auto params = [&] {
    return std::to_string(p) + "," + std::to_string(l) + "," + std::to_string(q);
  };
  switch (tag) {
    case FamilyTag::G1: return "G1:" + std::to_string(n);
    case FamilyTag::G2: return "G2:" + std::to_string(n);
    case FamilyTag::G3: return "G3:" + std::to_string(n);
    case FamilyTag::G4: return "G4:" + std::to_string(n);
    case FamilyTag::Infinity: return "B:" + params();
    case FamilyTag::Theta: return "P:" + params();
  }
  return {};
}

Graph make_named(const NamedFamily& family) {
  auto require = [&](int min_n) {
    if (family.n < min_n) {
      throw std::invalid_argument("make_named: " + family.name() + " requires n >= " +
                                  std::to_string(min_n));
    }
  };
  const auto n = static_cast<std::size_t>(std::max(family.n, 0));
  switch (family.tag) {
    case FamilyTag::G1:
      require(4);
      return attach_pendants(make_theta(2, 1, 2), 0, n - 4);
    case FamilyTag::G2:
      require(5);
      return attach_pendants(make_infinity(3, 1, 3), 0, n - 5);
    case FamilyTag::G3:
      require(5);
      return attach_pendants(make_theta(2, 1, 2), 2, n - 4);
    case FamilyTag::G4:
      require(6);
      return attach_pendants(attach_pendants(make_theta(2, 1, 2), 0, n - 5), 1, 1);
    case FamilyTag::Infinity:
      return make_infinity(family.p, family.l, family.q);
    case FamilyTag::Theta:
      return make_theta(family.p, family.l, family.q);
  }
  throw std::logic_error("make_named: unhandled family");
}

Graph attach_pendants(const Graph& g, Vertex v, std::size_t k) {
  if (v >= g.order()) throw std::invalid_argument("attach_pendants: vertex out of range");
  auto edges = g.edges();
  for (std::size_t i = 0; i < k; ++i) {
    edges.push_back(make_edge(v, static_cast<Vertex>(g.order() + i)));
  }
  return Graph(g.order() + k, std::move(edges));
}

std::string BaseGraph::name() const {
  const std::string params =
      std::to_string(p) + "," + std::to_string(l) + "," + std::to_string(q);
  return (kind == BaseKind::Infinity ? "B(" : "P(") + params + ")";
}

BaseGraph base_graph(const Graph& g) {
  if (!g.is_bicyclic()) throw std::invalid_argument("base_graph: input is not a connected bicyclic graph");

  const std::size_t n = g.order();
  std::vector<std::size_t> deg = g.degrees();
  std::vector<bool> removed(n, false);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < n; ++v) {
    if (deg[v] == 1) queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.back();
    queue.pop_back();
    if (removed[v]) continue;
    removed[v] = true;
    for (Vertex w : g.neighbors(v)) {
      if (!removed[w] && --deg[w] == 1) queue.push_back(w);
    }
  }

  BaseGraph out;
  for (Vertex v = 0; v < n; ++v) {
    if (!removed[v]) out.original.push_back(v);
  }
  out.base = g.induced(out.original);
  const Graph& b = out.base;

  std::vector<Vertex> branch;
  for (Vertex v = 0; v < b.order(); ++v) {
    if (b.degree(v) >= 3) branch.push_back(v);
  }

  // Walk from a branch vertex through degree-2 vertices; returns (end, length).
  auto walk = [&](Vertex start, Vertex first) {
    Vertex prev = start;
    Vertex cur = first;
    int length = 1;
    while (b.degree(cur) == 2) {
      const auto& nb = b.neighbors(cur);
      Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
      ++length;
    }
    return std::pair{cur, length};
  };

  if (branch.size() == 1) {
    // Two cycles sharing one vertex of degree 4; each cycle is seen twice.
    std::vector<int> lengths;
    for (Vertex w : b.neighbors(branch[0])) lengths.push_back(walk(branch[0], w).second);
    std::sort(lengths.begin(), lengths.end());
    out.kind = BaseKind::Infinity;
    out.p = lengths[0];
    out.l = 1;
    out.q = lengths[2];
    return out;
  }
  if (branch.size() != 2) throw std::logic_error("base_graph: unexpected bicyclic core");

  const Vertex a = branch[0];
  std::vector<int> to_other;
  std::vector<int> loops;
  for (Vertex w : b.neighbors(a)) {
    auto [end, length] = walk(a, w);
    (end == a ? loops : to_other).push_back(length);
  }
  if (to_other.size() == 3) {
    std::sort(to_other.begin(), to_other.end());
    out.kind = BaseKind::Theta;
    out.l = to_other[0];
    out.p = to_other[1];
    out.q = to_other[2];
    return out;
  }

  // ∞-graph with a connecting path: the loop at a is seen twice.
  const Vertex c = branch[1];
  int other_loop = 0;
  for (Vertex w : b.neighbors(c)) {
    auto [end, length] = walk(c, w);
    if (end == c) other_loop = length;
  }
  out.kind = BaseKind::Infinity;
  out.p = std::min(loops.front(), other_loop);
  out.q = std::max(loops.front(), other_loop);
  out.l = to_other.front() + 1;
  return out;
}

Graph make_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("make_cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, static_cast<Vertex>((i + 1) % n)));
  return Graph(n, std::move(edges));
}

Graph make_path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph make_star(std::size_t n) {
  if (n == 0) throw std::invalid_argument("make_star: n must be >= 1");
  return attach_pendants(Graph(1), 0, n - 1);
}

Graph make_complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph make_double_star(std::size_t a, std::size_t b) {
  Graph g(2, {{0, 1}});
  return attach_pendants(attach_pendants(g, 0, a), 1, b);
}

}  // namespace wadj
