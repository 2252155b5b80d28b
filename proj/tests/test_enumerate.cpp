#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wadj/canonical.hpp"
#include "wadj/enumerate.hpp"
#include "wadj/families.hpp"
#include "wadj/verify.hpp"

using namespace wadj;

TEST_SUITE("enumerate") {
  TEST_CASE("canonical form is invariant under every relabeling of the theta graph") {
    const Graph p212 = make_theta(2, 1, 2);
    const auto ref = canonical_form(p212);
    std::vector<Vertex> perm{0, 1, 2, 3};
    int count = 0;
    do {
      CHECK(canonical_form(p212.relabeled(perm)) == ref);
      ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(count == 24);
  }

  TEST_CASE("canonical form separates and identifies classes") {
    CHECK(canonical_form(make_named(NamedFamily::g1(6))) != canonical_form(make_named(NamedFamily::g2(6))));
    const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(canonical_form(make_cycle(6)) != canonical_form(two_triangles));
    CHECK_FALSE(two_triangles.connected());
    CHECK_THROWS(canonical_form(make_path(17)));

    // Against the permutation brute force on random small graphs.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 2 + rng() % 6;
      const Graph a = oracle::random_connected(rng, n, rng() % 6);
      const Graph b = oracle::random_connected(rng, n, rng() % 6);
      CHECK((canonical_form(a) == canonical_form(b)) == (oracle::brute_canonical(a) == oracle::brute_canonical(b)));
      CHECK(canonical_form(oracle::random_relabel(rng, a)) == canonical_form(a));
    }
    // Relabelings of larger graphs, including many twins.
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_connected(rng, 10 + rng() % 7, rng() % 12);
      CHECK(canonical_form(oracle::random_relabel(rng, g)) == canonical_form(g));
      CHECK(canonical_graph(g) == canonical_graph(oracle::random_relabel(rng, g)));
    }
    CHECK(isomorphic(make_named(NamedFamily::g4(9)), oracle::random_relabel(rng, make_named(NamedFamily::g4(9)))));
  }

  TEST_CASE("counts against the brute-force oracle for n = 4..6") {
    for (int n = 4; n <= 6; ++n) {
      const auto brute = oracle::brute_bicyclic_classes(n);
      const auto cons = enumerate_bicyclic(n, EnumerationMethod::constructive);
      const auto edge = enumerate_bicyclic(n, EnumerationMethod::edge_subset);
      CAPTURE(n);
      CHECK(cons.count == brute.size());
      CHECK(edge.count == brute.size());
      std::set<std::string> mapped;
      for (const auto& g : cons.graphs) mapped.insert(oracle::brute_canonical(g));
      CHECK(mapped == brute);
    }
    CHECK(enumerate_bicyclic(4).count == 1);
    CHECK(canonical_form(enumerate_bicyclic(4).graphs.front()) == canonical_form(make_theta(2, 1, 2)));
  }

  TEST_CASE("both methods give identical certificate sets for n = 4..9") {
    for (int n = 4; n <= 9; ++n) {
      const auto cons = enumerate_bicyclic(n, EnumerationMethod::constructive);
      const auto edge = enumerate_bicyclic(n, EnumerationMethod::edge_subset);
      CAPTURE(n);
      CHECK(cons.count == edge.count);
      CHECK(cons.certificates == edge.certificates);
      CHECK(cons.count == *golden_bicyclic_count(n));
      std::size_t infinity = 0;
      std::size_t theta = 0;
      for (const auto& g : cons.graphs) {
        CHECK(g.is_bicyclic());
        CHECK(g.size() == static_cast<std::size_t>(n + 1));
        (base_graph(g).kind == BaseKind::Infinity ? infinity : theta) += 1;
      }
      CHECK(infinity + theta == cons.count);
    }
    CHECK_THROWS(enumerate_bicyclic(10, EnumerationMethod::edge_subset));
    CHECK_THROWS(enumerate_bicyclic(11));
    CHECK_THROWS(enumerate_bicyclic(3));
  }

  TEST_CASE("n = 6 contains the four named graphs") {
    const auto rep = enumerate_bicyclic(6);
    std::set<CanonicalForm> certs(rep.certificates.begin(), rep.certificates.end());
    std::set<CanonicalForm> named;
    for (auto tag : {FamilyTag::G1, FamilyTag::G2, FamilyTag::G3, FamilyTag::G4}) {
      const auto c = canonical_form(make_named({tag, 6}));
      CHECK(certs.count(c) == 1);
      named.insert(c);
    }
    CHECK(named.size() == 4);
  }

  TEST_CASE("maximum degree filters") {
    for (int n = 6; n <= 10; ++n) {
      const auto full = enumerate_with_max_degree(n, n - 1);
      REQUIRE(full.count == 2);
      std::set<CanonicalForm> want{canonical_form(make_named(NamedFamily::g1(n))),
                                   canonical_form(make_named(NamedFamily::g2(n)))};
      CHECK(std::set<CanonicalForm>(full.certificates.begin(), full.certificates.end()) == want);
    }
    for (int n = 4; n <= 9; ++n) CHECK(enumerate_with_max_degree(n, 2).count == 0);
    CHECK_THROWS(enumerate_with_max_degree(6, 6));
  }

  TEST_CASE("targeted max degree n-2 generator") {
    for (int n = 6; n <= 10; ++n) {
      const auto targeted = enumerate_max_degree_n_minus_2(n);
      const auto filtered = enumerate_with_max_degree(n, n - 2);
      CAPTURE(n);
      CHECK(targeted.certificates == filtered.certificates);
    }
    const auto twelve = enumerate_max_degree_n_minus_2(12);
    CHECK(twelve.count == 9);
    bool has_d1 = false;
    const auto d1 = canonical_form(make_d1(12));
    for (const auto& c : twelve.certificates) has_d1 = has_d1 || c == d1;
    CHECK(has_d1);
    for (const auto& g : twelve.graphs) {
      CHECK(g.is_bicyclic());
      CHECK(g.max_degree() == 10);
    }
  }

  TEST_CASE("rooted and free tree counts") {
    const std::size_t rooted[] = {1, 1, 2, 4, 9, 20, 48, 115};
    for (int s = 1; s <= 8; ++s) CHECK(enumerate_rooted_trees(s).size() == rooted[s - 1]);
    const std::size_t free_trees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_trees(n).size() == free_trees[n - 1]);
  }
}
