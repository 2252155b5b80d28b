#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wadj/families.hpp"
#include "wadj/spectral.hpp"

using namespace wadj;

TEST_SUITE("spectral") {
  TEST_CASE("matrix construction") {
    const auto m = build_matrix(make_cycle(3), WeightFunction::parse("zagreb1"));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) CHECK(m.entries(i, j) == (i == j ? 0.0 : 4.0));
    }

    const Graph g2 = make_named(NamedFamily::g2(6));
    const auto a = build_matrix(g2, WeightFunction::builtin(WeightKind::constant_one));
    for (Vertex i = 0; i < 6; ++i) {
      for (Vertex j = 0; j < 6; ++j) CHECK(a.entries(i, j) == (g2.has_edge(i, j) ? 1.0 : 0.0));
    }
    CHECK(a.entries.is_symmetric());

    // θ(2,1,2): x = 0, y = 1 of degree 3, interior vertices of degree 2.
    const auto ext = build_matrix(make_theta(2, 1, 2), WeightFunction::builtin(WeightKind::extended));
    CHECK(ext.entries(0, 1) == 1.0);
    CHECK(ext.entries(0, 2) == doctest::Approx(13.0 / 12.0).epsilon(1e-15));
  }

  TEST_CASE("spectral radius examples") {
    const auto z = WeightFunction::parse("zagreb1");
    CHECK(std::abs(rho_f(make_named(NamedFamily::g2(6)), z) - 17.0855) <= 5e-4);
    CHECK(std::abs(rho_f(make_named(NamedFamily::g4(6)), WeightFunction::parse("constant_one")) - 2.7913) <= 5e-4);
    CHECK(std::abs(rho_f(make_path(2), z) - 2.0) <= 1e-14);
    CHECK(std::abs(rho_f(make_named(NamedFamily::g2(12)), WeightFunction::parse("extended")) - 15.8028) <= 5e-4);
    CHECK(rho_f(Graph(1), z) == 0.0);
  }

  TEST_CASE("full spectrum") {
    const auto c4 = full_spectrum(build_matrix(make_cycle(4), WeightFunction::parse("constant_one")));
    REQUIRE(c4.size() == 4);
    CHECK(c4[0] == doctest::Approx(-2.0));
    CHECK(std::abs(c4[1]) < 1e-12);
    CHECK(std::abs(c4[2]) < 1e-12);
    CHECK(c4[3] == doctest::Approx(2.0));

    // A_ex(G2(6)) has eigenvalue 1 once and -1 twice.
    const auto ext = full_spectrum(build_matrix(make_named(NamedFamily::g2(6)), WeightFunction::parse("extended")));
    int ones = 0;
    int minus = 0;
    for (double x : ext) {
      ones += std::abs(x - 1) < 1e-9;
      minus += std::abs(x + 1) < 1e-9;
    }
    CHECK(ones == 1);
    CHECK(minus == 2);
  }

  TEST_CASE("agreement with an independent Jacobi solver") {
    std::mt19937_64 rng(11);
    const char* specs[] = {"constant_one", "zagreb1", "hyper_zagreb", "forgotten", "extended", "exp_zagreb1",
                           "sombor:a=2,b=1.5"};
    for (int trial = 0; trial < 60; ++trial) {
      const Graph g = oracle::random_connected(rng, 2 + rng() % 14, rng() % 20);
      for (const char* spec : specs) {
        const auto f = WeightFunction::parse(spec);
        const auto m = build_matrix(g, f);
        const auto res = spectral_radius(m, {1e-10, true});
        const auto ref = oracle::jacobi_eigenvalues(oracle::weighted(g, f));
        CAPTURE(spec);
        CAPTURE(to_graph6(g));
        CHECK(std::abs(res.rho - ref.back()) <= 1e-10 * std::max(1.0, ref.back()));
        REQUIRE(res.spectrum->size() == ref.size());
        for (std::size_t i = 0; i < ref.size(); ++i) {
          CHECK(std::abs((*res.spectrum)[i] - ref[i]) <= 1e-9 * std::max(1.0, ref.back()));
        }
      }
    }
  }

  TEST_CASE("Perron vector, trace, Rayleigh bound and scaling") {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> normal;
    const auto f = WeightFunction::parse("hyper_zagreb");
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = oracle::random_connected(rng, 3 + rng() % 12, rng() % 15);
      const auto m = build_matrix(g, f);
      const auto res = spectral_radius(m, {1e-10, true});
      CHECK(res.residual <= 1e-10 * std::max(1.0, res.rho));
      double norm = 0.0;
      for (double v : res.perron) {
        CHECK(v > 0.0);
        norm += v * v;
      }
      CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
      const auto& sp = *res.spectrum;
      CHECK(std::abs(std::accumulate(sp.begin(), sp.end(), 0.0)) <= 1e-8 * std::max(1.0, res.rho));
      CHECK(sp.back() == doctest::Approx(res.rho).epsilon(1e-12));
      CHECK(sp.back() - sp[sp.size() - 2] > 1e-9);

      for (int k = 0; k < 10; ++k) {
        std::vector<double> v(g.order());
        double s = 0.0;
        for (double& x : v) {
          x = normal(rng);
          s += x * x;
        }
        double q = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
          for (std::size_t j = 0; j < v.size(); ++j) q += v[i] * m.entries(i, j) * v[j];
        }
        CHECK(q / s <= res.rho * (1 + 1e-12));
      }
      const double c = 0.5 + static_cast<double>(rng() % 100) / 10.0;
      CHECK(spectral_radius(m.entries.scaled(c)).rho == doctest::Approx(c * res.rho).epsilon(1e-10));
    }
  }

  TEST_CASE("extended index sandwich") {
    std::mt19937_64 rng(5);
    const auto one = WeightFunction::parse("constant_one");
    const auto ext = WeightFunction::parse("extended");
    for (int trial = 0; trial < 100; ++trial) {
      const Graph g = oracle::random_connected(rng, 2 + rng() % 14, rng() % 20);
      const double rho = rho_f(g, one);
      const double rho_ex = rho_f(g, ext);
      const double big = static_cast<double>(g.max_degree());
      const double small = static_cast<double>(g.min_degree());
      CHECK(rho <= rho_ex + 1e-10);
      CHECK(rho_ex <= 0.5 * (big / small + small / big) * rho + 1e-10);
    }
    for (std::size_t n = 3; n <= 10; ++n) {
      CHECK(rho_f(make_cycle(n), ext) == doctest::Approx(rho_f(make_cycle(n), one)).epsilon(1e-12));
      CHECK(rho_f(make_complete(n), ext) == doctest::Approx(static_cast<double>(n - 1)).epsilon(1e-12));
    }
  }
}
