#include <doctest.h>

#include "wadj/families.hpp"
#include "wadj/quotient.hpp"
#include "wadj/spectral.hpp"

using namespace wadj;

namespace {

std::vector<std::size_t> block_sizes(const Partition& p) {
  std::vector<std::size_t> out;
  for (const auto& b : p.blocks) out.push_back(b.size());
  return out;
}

}  // namespace

TEST_SUITE("quotient") {
  TEST_CASE("partition validation") {
    CHECK_NOTHROW(Partition::trivial(4).validate(4));
    CHECK_THROWS(Partition{{{0, 1}, {1, 2}}}.validate(3));
    CHECK_THROWS(Partition{{{0, 1}}}.validate(3));
    CHECK_THROWS(Partition{{{0, 1, 2}, {}}}.validate(3));
    CHECK(Partition::singletons(5).size() == 5);
  }

  TEST_CASE("equitable refinement from the degree partition") {
    const auto z = WeightFunction::parse("zagreb1");
    for (int n = 6; n <= 12; ++n) {
      const auto p2 = equitable_refine(make_named(NamedFamily::g2(n)), z);
      CHECK(block_sizes(p2) == std::vector<std::size_t>{1, 4, static_cast<std::size_t>(n - 5)});
      const auto p4 = equitable_refine(make_named(NamedFamily::g4(n)), z);
      // G4(6) has an automorphism swapping x and y, so only n >= 7 splits into five.
      CHECK(p4.size() == (n == 6 ? 3u : 5u));
    }
    for (std::size_t n = 3; n <= 9; ++n) {
      const auto p = equitable_refine(make_cycle(n), z, Partition::trivial(n));
      CHECK(p.size() == 1);
      CHECK(quotient_matrix(make_cycle(n), z, p).equitable);
    }
  }

  TEST_CASE("quotient of G2 matches the closed 3x3 form") {
    const char* specs[] = {"zagreb1", "hyper_zagreb", "forgotten", "extended", "constant_one"};
    for (const char* spec : specs) {
      const auto f = WeightFunction::parse(spec);
      for (int n = 6; n <= 12; ++n) {
        const auto q = quotient_matrix(make_named(NamedFamily::g2(n)), f, named_partition(FamilyTag::G2, n));
        REQUIRE(q.exact);
        const auto& a = *q.exact;
        const auto F = [&](long x, long y) { return *f.evaluate_exact(x, y); };
        CHECK(q.equitable);
        CHECK(a[0][0] == 0);
        CHECK(a[0][1] == 4 * F(n - 1, 2));
        CHECK(a[0][2] == (n - 5) * F(n - 1, 1));
        CHECK(a[1][0] == F(n - 1, 2));
        CHECK(a[1][1] == F(2, 2));
        CHECK(a[1][2] == 0);
        CHECK(a[2][0] == F(n - 1, 1));
        CHECK(a[2][1] == 0);
        CHECK(a[2][2] == 0);
      }
    }
  }

  TEST_CASE("quotient of G3 has f(3,3) on the degree-3 block") {
    const auto f = WeightFunction::parse("forgotten");
    for (int n = 6; n <= 10; ++n) {
      const auto p = named_partition(FamilyTag::G3, n);
      const Graph g = make_named(NamedFamily::g3(n));
      const auto q = quotient_matrix(g, f, p);
      CHECK(q.equitable);
      CHECK(q.k == 4);
      for (Vertex v : p.blocks[1]) CHECK(g.degree(v) == 3);
      CHECK((*q.exact)[1][1] == 18);
    }
  }

  TEST_CASE("singleton partition reproduces the matrix") {
    const auto f = WeightFunction::parse("exp_zagreb1");
    const Graph g = make_named(NamedFamily::g4(7));
    const auto q = quotient_matrix(g, f, Partition::singletons(7));
    const auto m = build_matrix(g, f);
    CHECK(q.equitable);
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 7; ++j) CHECK(q.entries[i][j] == m.entries(i, j));
    }
  }

  TEST_CASE("non-equitable partitions are flagged") {
    const auto z = WeightFunction::parse("zagreb1");
    const Graph g = make_named(NamedFamily::g4(8));
    CHECK_FALSE(quotient_matrix(g, z, degree_partition(g)).equitable);
    CHECK_FALSE(quotient_matrix(g, z, Partition::trivial(8)).equitable);
  }

  TEST_CASE("quotient eigenvalues are eigenvalues of the full matrix") {
    const auto f = WeightFunction::parse("hyper_zagreb");
    for (int n = 6; n <= 12; ++n) {
      for (auto tag : {FamilyTag::G2, FamilyTag::G3, FamilyTag::G4}) {
        const Graph g = make_named({tag, n});
        const auto q = quotient_matrix(g, f, named_partition(tag, n));
        const auto full = full_spectrum(build_matrix(g, f));
        for (double lambda : quotient_eigenvalues(q)) {
          double best = 1e300;
          for (double mu : full) best = std::min(best, std::abs(mu - lambda));
          CHECK(best <= 1e-8);
        }
        CHECK(std::abs(quotient_spectral_radius(q) - full.back()) <= 1e-8);
      }
    }
  }
}
