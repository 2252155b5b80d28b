#include "wadj/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace wadj {

namespace {

using Row = std::uint64_t;
using Cells = std::vector<std::vector<Vertex>>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), rows_(g.order(), 0) {
    for (const auto& e : g.edges()) {
      rows_[e.u] |= Row{1} << e.v;
      rows_[e.v] |= Row{1} << e.u;
    }
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Cells start(1);
    for (Vertex v = 0; v < n_; ++v) start[0].push_back(v);
    search(std::move(start));
    return best_labeling_;
  }

 private:
  bool twins(Vertex a, Vertex b) const {
    const Row ma = Row{1} << a;
    const Row mb = Row{1} << b;
    return (rows_[a] & ~mb) == (rows_[b] & ~ma);
  }

  // Split every cell by the number of neighbours each vertex has in every
  // cell, until stable. New cells are ordered by signature, so the result
  // does not depend on vertex names.
  Cells refine(Cells cells) const {
    std::vector<std::size_t> cell_of(n_);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_of[v] = c;
      }
      Cells next;
      next.reserve(n_);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<Vertex>> groups;
        for (Vertex v : cell) {
          std::vector<int> signature(cells.size(), 0);
          Row r = rows_[v];
          while (r) {
            const int w = __builtin_ctzll(r);
            r &= r - 1;
            ++signature[cell_of[w]];
          }
          groups[std::move(signature)].push_back(v);
        }
        for (auto& [sig, members] : groups) next.push_back(std::move(members));
      }
      if (next.size() == cells.size()) return next;
      cells = std::move(next);
    }
  }

  void search(Cells cells) {
    cells = refine(std::move(cells));
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1) {
        target = c;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      const bool redundant = std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); });
      if (redundant) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> label(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = static_cast<Vertex>(i);
    std::vector<Row> permuted(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      Row r = rows_[v];
      Row out = 0;
      while (r) {
        const int w = __builtin_ctzll(r);
        r &= r - 1;
        out |= Row{1} << (n_ - 1 - label[w]);
      }
      permuted[label[v]] = out;
    }
    if (best_rows_.empty() || permuted < best_rows_) {
      best_rows_ = std::move(permuted);
      best_labeling_ = std::move(label);
    }
  }

  std::size_t n_;
  std::vector<Row> rows_;
  std::vector<Row> best_rows_;
  std::vector<Vertex> best_labeling_;
};

void check_bound(const Graph& g, std::size_t max_order) {
  if (g.order() > max_order || g.order() > 64) {
    throw std::length_error("canonical_form: order " + std::to_string(g.order()) +
                            " exceeds bound " + std::to_string(std::min<std::size_t>(max_order, 64)));
  }
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(certificate.size() * 2);
  for (unsigned char c : certificate) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 15]);
  }
  return out;
}

std::vector<Vertex> canonical_labeling(const Graph& g, std::size_t max_order) {
  check_bound(g, max_order);
  return Canonizer(g).run();
}

CanonicalForm canonical_form(const Graph& g, std::size_t max_order) {
  return canonicalize(g, max_order).second;
}

std::pair<Graph, CanonicalForm> canonicalize(const Graph& g, std::size_t max_order) {
  Graph c = canonical_graph(g, max_order);
  const std::size_t n = c.order();
  CanonicalForm form;
  form.certificate.push_back(static_cast<char>(n));
  // Upper triangle, row by row, packed 8 bits per byte.
  unsigned acc = 0;
  int bits = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      acc = (acc << 1) | (c.has_edge(i, j) ? 1U : 0U);
      if (++bits == 8) {
        form.certificate.push_back(static_cast<char>(acc));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) form.certificate.push_back(static_cast<char>(acc << (8 - bits)));
  return {std::move(c), std::move(form)};
}

Graph canonical_graph(const Graph& g, std::size_t max_order) {
  return g.relabeled(canonical_labeling(g, max_order));
}

bool isomorphic(const Graph& a, const Graph& b, std::size_t max_order) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (a.degree_sequence() != b.degree_sequence()) return false;
  return canonical_form(a, max_order) == canonical_form(b, max_order);
}

}  // namespace wadj
