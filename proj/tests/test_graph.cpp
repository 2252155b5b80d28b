#include <doctest.h>

#include <algorithm>
#include <random>

#include "wadj/families.hpp"
#include "wadj/graph.hpp"

using namespace wadj;

namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  auto d = g.degree_sequence();
  std::sort(d.rbegin(), d.rend());
  return d;
}

void check_bicyclic(const Graph& g) {
  CHECK(g.connected());
  CHECK(g.size() == g.order() + 1);
  CHECK(g.cyclomatic_number() == 2);
  CHECK(g.is_bicyclic());
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("graph rejects loops, repeats and out-of-range endpoints") {
    CHECK_THROWS(Graph(3, {{0, 0}}));
    CHECK_THROWS(Graph(3, {{0, 1}, {1, 0}}));
    CHECK_THROWS(Graph(3, {{0, 3}}));
    const Graph g(4, {{2, 1}, {0, 1}});
    CHECK(g.edges().front().u == 0);
    CHECK(g.edges().back().u == 1);
    CHECK(g.edges().back().v == 2);
  }

  TEST_CASE("infinity graphs") {
    const Graph b313 = make_infinity(3, 1, 3);
    CHECK(b313.order() == 5);
    CHECK(b313.size() == 6);
    CHECK(sorted_degrees(b313) == std::vector<std::size_t>{4, 2, 2, 2, 2});

    const Graph b323 = make_infinity(3, 2, 3);
    CHECK(b323.order() == 6);
    CHECK(b323.size() == 7);
    std::vector<Vertex> deg3;
    for (Vertex v = 0; v < b323.order(); ++v) {
      if (b323.degree(v) == 3) deg3.push_back(v);
    }
    REQUIRE(deg3.size() == 2);
    CHECK(b323.has_edge(deg3[0], deg3[1]));

    const Graph b413 = make_infinity(4, 1, 3);
    CHECK(b413.order() == 6);
    CHECK(b413.size() == 7);
    // Cyclomatic number from an independent count: m - n + components.
    CHECK(static_cast<long>(b413.size()) - static_cast<long>(b413.order()) + 1 == 2);

    CHECK_THROWS(make_infinity(2, 1, 3));
    CHECK_THROWS(make_infinity(3, 0, 3));
    CHECK_THROWS(make_infinity(3, 1, 2));
    for (int p = 3; p <= 6; ++p) {
      for (int l = 1; l <= 3; ++l) {
        for (int q = 3; q <= 6; ++q) {
          const Graph g = make_infinity(p, l, q);
          CHECK(g.order() == static_cast<std::size_t>(p + q + l - 2));
          check_bicyclic(g);
        }
      }
    }
  }

  TEST_CASE("theta graphs") {
    const Graph p212 = make_theta(2, 1, 2);
    CHECK(p212.order() == 4);
    CHECK(p212.size() == 5);
    CHECK(sorted_degrees(p212) == std::vector<std::size_t>{3, 3, 2, 2});

    const Graph k23 = make_theta(2, 2, 2);
    CHECK(k23.order() == 5);
    CHECK(k23.size() == 6);
    CHECK(sorted_degrees(k23) == std::vector<std::size_t>{3, 3, 2, 2, 2});
    // Bipartite with parts {x, y} and the three interior vertices.
    CHECK_FALSE(k23.has_edge(0, 1));

    const Graph p312 = make_theta(3, 1, 2);
    CHECK(p312.order() == 5);
    CHECK(p312.size() == 6);
    check_bicyclic(p312);

    CHECK_THROWS(make_theta(1, 1, 2));
    CHECK_THROWS(make_theta(2, 0, 2));
    for (int p = 2; p <= 5; ++p) {
      for (int l = 1; l <= p; ++l) {
        for (int q = p; q <= 5; ++q) {
          const Graph g = make_theta(p, l, q);
          CHECK(g.order() == static_cast<std::size_t>(p + q + l - 1));
          check_bicyclic(g);
        }
      }
    }
  }

  TEST_CASE("named families") {
    CHECK(sorted_degrees(make_named(NamedFamily::g2(6))) == std::vector<std::size_t>{5, 2, 2, 2, 2, 1});
    CHECK(make_named(NamedFamily::g2(6)).size() == 7);
    CHECK(sorted_degrees(make_named(NamedFamily::g4(6))) == std::vector<std::size_t>{4, 4, 2, 2, 1, 1});
    CHECK(sorted_degrees(make_named(NamedFamily::g3(6))) == std::vector<std::size_t>{4, 3, 3, 2, 1, 1});

    for (int n = 6; n <= 14; ++n) {
      const Graph g1 = make_named(NamedFamily::g1(n));
      const Graph g2 = make_named(NamedFamily::g2(n));
      const Graph g3 = make_named(NamedFamily::g3(n));
      const Graph g4 = make_named(NamedFamily::g4(n));
      for (const Graph* g : {&g1, &g2, &g3, &g4}) {
        CHECK(g->order() == static_cast<std::size_t>(n));
        check_bicyclic(*g);
      }
      auto d1 = sorted_degrees(g1);
      CHECK(std::vector<std::size_t>(d1.begin(), d1.begin() + 4) ==
            std::vector<std::size_t>{static_cast<std::size_t>(n - 1), 3, 2, 2});
      auto d3 = sorted_degrees(g3);
      CHECK(d3[0] == static_cast<std::size_t>(n - 2));
      // G3: the two degree-3 vertices are adjacent.
      std::vector<Vertex> deg3;
      for (Vertex v = 0; v < g3.order(); ++v) {
        if (g3.degree(v) == 3) deg3.push_back(v);
      }
      REQUIRE(deg3.size() == 2);
      CHECK(g3.has_edge(deg3[0], deg3[1]));
      auto d4 = sorted_degrees(g4);
      CHECK(d4[0] == static_cast<std::size_t>(n - 2));
      CHECK(d4[1] == 4);
    }

    CHECK_THROWS(make_named(NamedFamily::g1(3)));
    CHECK_THROWS(make_named(NamedFamily::g2(4)));
    CHECK_THROWS(make_named(NamedFamily::g3(4)));
    CHECK_THROWS(make_named(NamedFamily::g4(5)));
    CHECK(NamedFamily::parse("G2:9").n == 9);
    CHECK(NamedFamily::parse("B:3,1,3").tag == FamilyTag::Infinity);
    CHECK(NamedFamily::parse("P:2,1,2").tag == FamilyTag::Theta);
  }

  TEST_CASE("base graph extraction") {
    const auto b1 = base_graph(make_named(NamedFamily::g1(8)));
    CHECK(b1.kind == BaseKind::Theta);
    CHECK((b1.p == 2 && b1.l == 1 && b1.q == 2));
    CHECK(b1.base.order() == 4);

    const auto b2 = base_graph(make_named(NamedFamily::g2(9)));
    CHECK(b2.kind == BaseKind::Infinity);
    CHECK((b2.p == 3 && b2.l == 1 && b2.q == 3));
    CHECK(b2.base.order() == 5);

    const Graph b423 = make_infinity(4, 2, 3);
    const auto fixed = base_graph(b423);
    CHECK(fixed.base == b423);
    CHECK((fixed.p == 3 && fixed.l == 2 && fixed.q == 4));

    // Idempotent.
    for (int n = 6; n <= 10; ++n) {
      const auto once = base_graph(make_named(NamedFamily::g4(n)));
      const auto twice = base_graph(once.base);
      CHECK(twice.base == once.base);
      CHECK(base_graph(make_named(NamedFamily::g1(n))).base.order() == 4);
      CHECK(base_graph(make_named(NamedFamily::g2(n))).base.order() == 5);
    }
    CHECK_THROWS(base_graph(make_cycle(5)));
    CHECK_THROWS(base_graph(make_star(5)));
  }

  TEST_CASE("attach pendants") {
    const Graph p212 = make_theta(2, 1, 2);
    for (int n = 4; n <= 9; ++n) {
      CHECK(attach_pendants(p212, 0, static_cast<std::size_t>(n - 4)) == make_named(NamedFamily::g1(n)));
    }
    CHECK(attach_pendants(p212, 2, 0) == p212);
    CHECK(attach_pendants(make_infinity(3, 1, 3), 0, 2) == make_named(NamedFamily::g2(7)));
    const Graph g = attach_pendants(p212, 1, 3);
    CHECK(g.order() == 7);
    CHECK(g.size() == 8);
    CHECK(g.degree(1) == 6);
    CHECK_THROWS(attach_pendants(p212, 4, 1));
  }

  TEST_CASE("graph6 and edge list round trips") {
    // Known encodings.
    CHECK(to_graph6(make_complete(4)) == "C~");
    CHECK(to_graph6(make_path(3)) == "Bg");
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 40;
      std::vector<Edge> edges;
      for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
          if (rng() % 4 == 0) edges.push_back({a, b});
        }
      }
      const Graph g(n, edges);
      CHECK(from_graph6(to_graph6(g)) == g);
      CHECK(from_edge_list(to_edge_list(g)) == g);
    }
    CHECK_THROWS(from_graph6(""));
  }
}
