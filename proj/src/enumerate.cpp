#include "wadj/enumerate.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "wadj/families.hpp"
#include "wadj/parallel.hpp"

namespace wadj {

namespace {

using ClassMap = std::map<CanonicalForm, Graph>;

void insert_class(ClassMap& classes, const Graph& g) {
  auto [canonical, cert] = canonicalize(g);
  classes.try_emplace(std::move(cert), std::move(canonical));
}

EnumerationReport make_report(int n, EnumerationMethod method, ClassMap classes) {
  EnumerationReport report;
  report.n = n;
  report.method = method;
  report.count = classes.size();
  for (auto& [cert, g] : classes) {
    report.certificates.push_back(cert);
    report.graphs.push_back(std::move(g));
  }
  return report;
}

ClassMap merge(std::vector<ClassMap>& parts) {
  ClassMap out;
  for (auto& part : parts) out.merge(part);
  return out;
}

std::string ahu(const std::vector<std::vector<Vertex>>& children, Vertex v) {
  std::vector<std::string> parts;
  for (Vertex c : children[v]) parts.push_back(ahu(children, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

/// Calls fn(parts) for every composition of total into `slots` non-negative parts.
void for_each_composition(int total, std::size_t slots, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> parts(slots, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == slots) {
      parts[i] = left;
      fn(parts);
      return;
    }
    for (int s = 0; s <= left; ++s) {
      parts[i] = s;
      rec(i + 1, left - s);
    }
  };
  if (slots == 0) {
    if (total == 0) fn(parts);
    return;
  }
  rec(0, total);
}

std::vector<Graph> bases_up_to(int n) {
  std::vector<Graph> out;
  for (int p = 3; p <= n; ++p) {
    for (int q = p; p + q - 1 <= n; ++q) {
      for (int l = 1; p + q + l - 2 <= n; ++l) out.push_back(make_infinity(p, l, q));
    }
  }
  for (int l = 1; l <= n; ++l) {
    for (int p = std::max(2, l); p + l + p - 1 <= n; ++p) {
      for (int q = p; p + l + q - 1 <= n; ++q) out.push_back(make_theta(p, l, q));
    }
  }
  return out;
}

ClassMap complete_base(const Graph& base, int n, const std::vector<std::vector<std::vector<Vertex>>>& rooted) {
  ClassMap classes;
  const int extra = n - static_cast<int>(base.order());
  for_each_composition(extra, base.order(), [&](const std::vector<int>& sizes) {
    // Mixed-radix walk over the rooted-tree choice at each base vertex.
    std::vector<std::size_t> choice(sizes.size(), 0);
    while (true) {
      std::vector<Edge> edges = base.edges();
      Vertex next = static_cast<Vertex>(base.order());
      for (std::size_t v = 0; v < sizes.size(); ++v) {
        if (sizes[v] == 0) continue;
        const auto& parent = rooted[sizes[v] + 1][choice[v]];
        std::vector<Vertex> label(parent.size());
        label[0] = static_cast<Vertex>(v);
        for (std::size_t t = 1; t < parent.size(); ++t) label[t] = next++;
        for (std::size_t t = 1; t < parent.size(); ++t) edges.push_back(make_edge(label[t], label[parent[t]]));
      }
      insert_class(classes, Graph(static_cast<std::size_t>(n), std::move(edges)));

      std::size_t pos = 0;
      while (pos < sizes.size()) {
        const auto options = rooted[sizes[pos] + 1].size();
        if (++choice[pos] < options) break;
        choice[pos] = 0;
        ++pos;
      }
      if (pos == sizes.size()) break;
    }
  });
  return classes;
}

void check_order(int n, EnumerationMethod method, const EnumerationOptions& opts) {
  if (n < 4 || n > kMaxEnumerationOrder) {
    throw std::out_of_range("enumerate: n=" + std::to_string(n) + " outside 4.." +
                            std::to_string(kMaxEnumerationOrder));
  }
  if (method == EnumerationMethod::edge_subset && n > kMaxEdgeSubsetOrder && !opts.allow_large_edge_subset) {
    throw std::out_of_range("enumerate: edge_subset method is bounded to n <= " +
                            std::to_string(kMaxEdgeSubsetOrder));
  }
}

}  // namespace

std::string to_string(EnumerationMethod method) {
  return method == EnumerationMethod::constructive ? "constructive" : "edge_subset";
}

EnumerationMethod parse_method(const std::string& text) {
  if (text == "constructive") return EnumerationMethod::constructive;
  if (text == "edge_subset" || text == "edge-subset") return EnumerationMethod::edge_subset;
  throw std::invalid_argument("enumerate: unknown method '" + text + "'");
}

std::vector<std::vector<Vertex>> enumerate_rooted_trees(int size) {
  if (size < 1) return {};
  std::vector<std::vector<Vertex>> level{{0}};
  for (int s = 2; s <= size; ++s) {
    std::map<std::string, std::vector<Vertex>> unique;
    for (const auto& parent : level) {
      for (Vertex attach = 0; attach < parent.size(); ++attach) {
        auto grown = parent;
        grown.push_back(attach);
        std::vector<std::vector<Vertex>> children(grown.size());
        for (Vertex t = 1; t < grown.size(); ++t) children[grown[t]].push_back(t);
        unique.try_emplace(ahu(children, 0), std::move(grown));
      }
    }
    level.clear();
    for (auto& [key, parent] : unique) level.push_back(std::move(parent));
  }
  return level;
}

std::vector<Graph> enumerate_trees(int n) {
  if (n < 1 || n > static_cast<int>(kDefaultCanonicalBound)) {
    throw std::out_of_range("enumerate_trees: n outside 1..16");
  }
  ClassMap level;
  insert_class(level, Graph(1));
  for (int size = 2; size <= n; ++size) {
    ClassMap next;
    for (const auto& [cert, tree] : level) {
      for (Vertex v = 0; v < tree.order(); ++v) insert_class(next, attach_pendants(tree, v, 1));
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (auto& [cert, tree] : level) out.push_back(tree);
  return out;
}

EnumerationReport enumerate_bicyclic(int n, EnumerationMethod method, const EnumerationOptions& opts) {
  check_order(n, method, opts);

  if (method == EnumerationMethod::constructive) {
    const auto bases = bases_up_to(n);
    std::vector<std::vector<std::vector<Vertex>>> rooted(n + 1);
    for (int s = 1; s <= n; ++s) rooted[s] = enumerate_rooted_trees(s);
    std::vector<ClassMap> parts(bases.size());
    parallel_for(bases.size(), [&](std::size_t i) { parts[i] = complete_base(bases[i], n, rooted); });
    return make_report(n, method, merge(parts));
  }

  const auto trees = enumerate_trees(n);
  std::vector<ClassMap> parts(trees.size());
  parallel_for(trees.size(), [&](std::size_t i) {
    const Graph& tree = trees[i];
    std::vector<Edge> missing;
    for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
      for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b) {
        if (!tree.has_edge(a, b)) missing.push_back({a, b});
      }
    }
    for (std::size_t x = 0; x < missing.size(); ++x) {
      for (std::size_t y = x + 1; y < missing.size(); ++y) {
        insert_class(parts[i], tree.with_edges_added({missing[x], missing[y]}));
      }
    }
  });
  return make_report(n, method, merge(parts));
}

EnumerationReport enumerate_with_max_degree(int n, int delta, EnumerationMethod method,
                                            const EnumerationOptions& opts) {
  if (delta > n - 1) throw std::invalid_argument("enumerate_with_max_degree: delta must be <= n-1");
  auto all = enumerate_bicyclic(n, method, opts);
  EnumerationReport out;
  out.n = n;
  out.method = method;
  for (std::size_t i = 0; i < all.graphs.size(); ++i) {
    if (static_cast<int>(all.graphs[i].max_degree()) == delta) {
      out.certificates.push_back(all.certificates[i]);
      out.graphs.push_back(all.graphs[i]);
    }
  }
  out.count = out.graphs.size();
  return out;
}

EnumerationReport enumerate_max_degree_n_minus_2(int n) {
  if (n < 5 || n > static_cast<int>(kDefaultCanonicalBound)) {
    throw std::out_of_range("enumerate_max_degree_n_minus_2: n outside 5..16");
  }
  // Vertex 0 is the centre, vertex n-1 the non-neighbour z.
  const auto z = static_cast<Vertex>(n - 1);
  std::vector<Edge> star;
  for (Vertex v = 1; v < z; ++v) star.push_back({0, v});
  std::vector<Edge> pairs;
  for (Vertex a = 1; a <= z; ++a) {
    for (Vertex b = a + 1; b <= z; ++b) pairs.push_back({a, b});
  }

  ClassMap classes;
  const std::size_t m = pairs.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (pairs[i].v != z && pairs[j].v != z && pairs[k].v != z) continue;
        auto edges = star;
        edges.insert(edges.end(), {pairs[i], pairs[j], pairs[k]});
        Graph g(static_cast<std::size_t>(n), std::move(edges));
        if (!g.is_bicyclic() || static_cast<int>(g.max_degree()) != n - 2) continue;
        insert_class(classes, g);
      }
    }
  }
  return make_report(n, EnumerationMethod::constructive, std::move(classes));
}

}  // namespace wadj
