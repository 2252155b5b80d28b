#include "wadj/quotient.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace wadj {

namespace {

/// Weighted row sums of every vertex into every block.
template <class T>
std::vector<std::vector<T>> block_sums(const Graph& g, const std::vector<std::size_t>& block_of, std::size_t k,
                                       const std::map<std::pair<std::size_t, std::size_t>, T>& weight) {
  std::vector<std::vector<T>> sums(g.order(), std::vector<T>(k, T(0)));
  for (const auto& e : g.edges()) {
    const auto du = g.degree(e.u);
    const auto dv = g.degree(e.v);
    const T& w = weight.at({std::min(du, dv), std::max(du, dv)});
    sums[e.u][block_of[e.v]] += w;
    sums[e.v][block_of[e.u]] += w;
  }
  return sums;
}

template <class T>
std::map<std::pair<std::size_t, std::size_t>, T> degree_pair_weights(const Graph& g, const WeightFunction& f);

template <>
std::map<std::pair<std::size_t, std::size_t>, double> degree_pair_weights(const Graph& g, const WeightFunction& f) {
  std::map<std::pair<std::size_t, std::size_t>, double> out;
  for (const auto& e : g.edges()) {
    const auto a = std::min(g.degree(e.u), g.degree(e.v));
    const auto b = std::max(g.degree(e.u), g.degree(e.v));
    out.try_emplace({a, b}, f(static_cast<double>(a), static_cast<double>(b)));
  }
  return out;
}

std::optional<std::map<std::pair<std::size_t, std::size_t>, Rational>> exact_weights(const Graph& g,
                                                                                      const WeightFunction& f) {
  std::map<std::pair<std::size_t, std::size_t>, Rational> out;
  for (const auto& e : g.edges()) {
    const auto a = std::min(g.degree(e.u), g.degree(e.v));
    const auto b = std::max(g.degree(e.u), g.degree(e.v));
    if (out.count({a, b})) continue;
    auto value = f.evaluate_exact(static_cast<long>(a), static_cast<long>(b));
    if (!value) return std::nullopt;
    out.emplace(std::make_pair(a, b), std::move(*value));
  }
  return out;
}

bool close(const std::vector<double>& a, const std::vector<double>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double scale = std::max({1.0, std::abs(a[i]), std::abs(b[i])});
    if (std::abs(a[i] - b[i]) > 1e-12 * scale) return false;
  }
  return true;
}

bool close(const std::vector<Rational>& a, const std::vector<Rational>& b) { return a == b; }

template <class T>
Partition refine(const Graph& g, const Partition& seed, const std::map<std::pair<std::size_t, std::size_t>, T>& weight) {
  Partition current = seed;
  while (true) {
    const auto block_of = current.block_of(g.order());
    const auto sums = block_sums<T>(g, block_of, current.size(), weight);
    Partition next;
    for (const auto& block : current.blocks) {
      std::vector<std::vector<Vertex>> groups;
      std::vector<Vertex> representative;
      for (Vertex v : block) {
        std::size_t slot = 0;
        while (slot < groups.size() && !close(sums[representative[slot]], sums[v])) ++slot;
        if (slot == groups.size()) {
          groups.emplace_back();
          representative.push_back(v);
        }
        groups[slot].push_back(v);
      }
      for (auto& group : groups) next.blocks.push_back(std::move(group));
    }
    if (next.size() == current.size()) return next;
    current = std::move(next);
  }
}

}  // namespace

std::vector<std::size_t> Partition::block_of(std::size_t order) const {
  validate(order);
  std::vector<std::size_t> out(order);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (Vertex v : blocks[b]) out[v] = b;
  }
  return out;
}

void Partition::validate(std::size_t order) const {
  std::vector<char> seen(order, 0);
  std::size_t covered = 0;
  for (const auto& block : blocks) {
    if (block.empty()) throw std::invalid_argument("partition: empty block");
    for (Vertex v : block) {
      if (v >= order) throw std::invalid_argument("partition: vertex out of range");
      if (seen[v]) throw std::invalid_argument("partition: vertex in two blocks");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != order) throw std::invalid_argument("partition: blocks do not cover every vertex");
}

Partition Partition::trivial(std::size_t order) {
  Partition p;
  if (order == 0) return p;
  p.blocks.emplace_back();
  for (Vertex v = 0; v < order; ++v) p.blocks[0].push_back(v);
  return p;
}

Partition Partition::singletons(std::size_t order) {
  Partition p;
  for (Vertex v = 0; v < order; ++v) p.blocks.push_back({v});
  return p;
}

Partition degree_partition(const Graph& g) {
  std::map<std::size_t, std::vector<Vertex>, std::greater<>> by_degree;
  for (Vertex v = 0; v < g.order(); ++v) by_degree[g.degree(v)].push_back(v);
  Partition p;
  for (auto& [d, block] : by_degree) p.blocks.push_back(std::move(block));
  return p;
}

Partition named_partition(FamilyTag tag, int n) {
  auto range = [](int from, int to) {
    std::vector<Vertex> out;
    for (int v = from; v < to; ++v) out.push_back(static_cast<Vertex>(v));
    return out;
  };
  Partition p;
  switch (tag) {
    case FamilyTag::G2:
      if (n < 6) break;
      p.blocks = {{0}, {1, 2, 3, 4}, range(5, n)};
      return p;
    case FamilyTag::G4:
      if (n < 6) break;
      p.blocks = {{0}, {2, 3}, {1}, {static_cast<Vertex>(n - 1)}, range(4, n - 1)};
      return p;
    case FamilyTag::G3:
      if (n < 5) break;
      p.blocks = {{2}, {0, 1}, {3}, range(4, n)};
      return p;
    default:
      throw std::invalid_argument("named_partition: only G2, G3 and G4 have block partitions");
  }
  throw std::out_of_range("named_partition: order too small for the block partition");
}

Partition equitable_refine(const Graph& g, const WeightFunction& f, const Partition& seed) {
  seed.validate(g.order());
  if (auto exact = exact_weights(g, f)) return refine<Rational>(g, seed, *exact);
  return refine<double>(g, seed, degree_pair_weights<double>(g, f));
}

Partition equitable_refine(const Graph& g, const WeightFunction& f) {
  return equitable_refine(g, f, degree_partition(g));
}

QuotientMatrix quotient_matrix(const Graph& g, const WeightFunction& f, const Partition& p) {
  const auto block_of = p.block_of(g.order());
  const std::size_t k = p.size();
  QuotientMatrix q;
  q.k = k;
  q.entries.assign(k, std::vector<double>(k, 0.0));

  if (auto exact = exact_weights(g, f)) {
    const auto sums = block_sums<Rational>(g, block_of, k, *exact);
    DenseMatrix<Rational> b(k, std::vector<Rational>(k, Rational(0)));
    q.equitable = true;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& block = p.blocks[i];
      for (std::size_t j = 0; j < k; ++j) {
        Rational total(0);
        for (Vertex v : block) {
          total += sums[v][j];
          if (sums[v][j] != sums[block[0]][j]) q.equitable = false;
        }
        b[i][j] = total / Rational(static_cast<long>(block.size()));
        q.entries[i][j] = to_double(b[i][j]);
      }
    }
    q.exact = std::move(b);
    return q;
  }

  const auto sums = block_sums<double>(g, block_of, k, degree_pair_weights<double>(g, f));
  q.equitable = true;
  for (std::size_t i = 0; i < k; ++i) {
    const auto& block = p.blocks[i];
    for (Vertex v : block) {
      if (!close(sums[v], sums[block[0]])) q.equitable = false;
    }
    for (std::size_t j = 0; j < k; ++j) {
      double total = 0.0;
      for (Vertex v : block) total += sums[v][j];
      q.entries[i][j] = total / static_cast<double>(block.size());
    }
  }
  return q;
}

HighPolynomial quotient_char_poly(const QuotientMatrix& q) {
  if (q.exact) return char_poly<Rational>(*q.exact).cast<HighReal>();
  DenseMatrix<HighReal> m(q.k, std::vector<HighReal>(q.k));
  for (std::size_t i = 0; i < q.k; ++i) {
    for (std::size_t j = 0; j < q.k; ++j) m[i][j] = HighReal(q.entries[i][j]);
  }
  return char_poly<HighReal>(std::move(m));
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& q) {
  if (q.k == 0) return {};
  const auto p = quotient_char_poly(q);
  const HighReal bound = root_bound(p);
  std::vector<double> out;
  for (const auto& r : real_roots(p, -bound, bound)) {
    for (int m = 0; m < r.multiplicity; ++m) out.push_back(to_double(r.value));
  }
  return out;
}

double quotient_spectral_radius(const QuotientMatrix& q) {
  if (q.k == 0) return 0.0;
  return to_double(max_real_root(quotient_char_poly(q)));
}

}  // namespace wadj
