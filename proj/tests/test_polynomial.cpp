#include <doctest.h>

#include <cmath>
#include <random>

#include "wadj/families.hpp"
#include "wadj/named_polys.hpp"
#include "wadj/polynomial.hpp"
#include "wadj/quotient.hpp"
#include "wadj/spectral.hpp"

using namespace wadj;

namespace {

RationalPolynomial rp(std::vector<long> descending) {
  std::vector<Rational> c;
  for (long v : descending) c.emplace_back(v);
  return RationalPolynomial::from_descending(std::move(c));
}

std::vector<double> root_values(const RationalPolynomial& p, double lo, double hi) {
  std::vector<double> out;
  for (const auto& r : real_roots(p, HighReal(lo), HighReal(hi))) {
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(to_double(r.value));
  }
  return out;
}

}  // namespace

TEST_SUITE("polynomial") {
  TEST_CASE("arithmetic and printing") {
    const auto p = rp({1, -4, -1089, 2420});
    CHECK(p.degree() == 3);
    CHECK(p.to_string() == "x^3 - 4*x^2 - 1089*x + 2420");
    CHECK(p.evaluate(Rational(2)) == Rational(8 - 16 - 2178 + 2420));
    CHECK((p - p).is_zero());
    CHECK((p * rp({1, 1})).degree() == 4);
    CHECK(p.derivative() == rp({3, -8, -1089}));
    CHECK(p.reflected() == rp({-1, -4, 1089, 2420}));
  }

  TEST_CASE("characteristic polynomials") {
    CHECK(char_poly<Rational>({{Rational(7)}}) == rp({1, -7}));

    // Quotient of G2(10) under x+y: f(9,2) = 11, f(9,1) = 10, f(2,2) = 4, so
    // x^3 - 4x^2 - (4*121 + 5*100)x + 5*100*4.
    const auto z = WeightFunction::parse("zagreb1");
    const auto q = quotient_matrix(make_named(NamedFamily::g2(10)), z, named_partition(FamilyTag::G2, 10));
    REQUIRE(q.exact);
    CHECK(char_poly<Rational>(*q.exact) == rp({1, -4, -984, 2000}));

    // The 5-block quotient of G4 has no x^4 term and no constant term.
    for (const char* spec : {"zagreb1", "hyper_zagreb", "forgotten", "constant_one", "extended"}) {
      const auto f = WeightFunction::parse(spec);
      for (int n = 6; n <= 10; ++n) {
        const auto q4 = quotient_matrix(make_named(NamedFamily::g4(n)), f, named_partition(FamilyTag::G4, n));
        REQUIRE(q4.exact);
        const auto c = char_poly<Rational>(*q4.exact);
        CHECK(c.degree() == 5);
        CHECK(c.coefficient(4) == 0);
        CHECK(c.coefficient(0) == 0);
      }
    }
  }

  TEST_CASE("Hessenberg and Faddeev-LeVerrier agree on random rational matrices") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t k = 1 + rng() % 8;
      DenseMatrix<Rational> m(k, std::vector<Rational>(k));
      for (auto& row : m) {
        for (auto& x : row) x = rng() % 3 == 0 ? Rational(0) : Rational(static_cast<long>(rng() % 19) - 9, 1 + rng() % 5);
      }
      const auto a = char_poly(m);
      CHECK(a == char_poly_faddeev(m));
      CHECK(a.degree() == static_cast<int>(k));
      // Point evaluation by elimination.
      DenseMatrix<HighReal> mh(k, std::vector<HighReal>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) mh[i][j] = to_high(m[i][j]);
      }
      const HighReal x("1.375");
      CHECK(abs(characteristic_value(mh, x) - a.cast<HighReal>().evaluate(x)) < HighReal("1e-35"));
    }
  }

  TEST_CASE("Descartes bounds") {
    const auto b = descartes_bounds(rp({1, 0, -1}));
    CHECK(b.max_positive == 1);
    CHECK(b.max_negative == 1);
    CHECK_THROWS(descartes_bounds(RationalPolynomial()));

    const auto z = WeightFunction::parse("zagreb1");
    CHECK(descartes_bounds(named_polynomial_exact(NamedPoly::phi1, 10, &z)).max_positive == 2);
    const auto b2 = descartes_bounds(named_polynomial_exact(NamedPoly::phi2, 10, &z));
    CHECK(b2.max_positive == 2);
    CHECK(b2.max_negative == 2);
  }

  TEST_CASE("Descartes bound dominates the true count with even difference") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 200; ++trial) {
      // Known roots: distinct integers times irreducible quadratics.
      RationalPolynomial p = rp({1});
      int positive = 0;
      int negative = 0;
      std::vector<long> used;
      const int linear = static_cast<int>(rng() % 5);
      while (static_cast<int>(used.size()) < linear) {
        const long r = static_cast<long>(rng() % 21) - 10;
        if (r == 0 || std::find(used.begin(), used.end(), r) != used.end()) continue;
        used.push_back(r);
        p = p * rp({1, -r});
        (r > 0 ? positive : negative) += 1;
      }
      const int quadratics = static_cast<int>(rng() % 3);
      for (int q = 0; q < quadratics; ++q) {
        const long shift = static_cast<long>(rng() % 7) - 3;
        const long c = 1 + static_cast<long>(rng() % 9);
        p = p * rp({1, -2 * shift, shift * shift + c});
      }
      if (p.degree() == 0) continue;
      const auto bounds = descartes_bounds(p);
      CHECK(bounds.max_positive >= positive);
      CHECK((bounds.max_positive - positive) % 2 == 0);
      CHECK(bounds.max_negative >= negative);
      CHECK((bounds.max_negative - negative) % 2 == 0);
      const auto found = root_values(p, -50, 50);
      CHECK(found.size() == used.size());
      std::sort(used.begin(), used.end());
      for (std::size_t i = 0; i < std::min(found.size(), used.size()); ++i) {
        CHECK(std::abs(found[i] - static_cast<double>(used[i])) < 1e-10);
      }
    }
  }

  TEST_CASE("real roots") {
    const auto r = root_values(rp({1, 0, -1, 0}), -2, 2);
    REQUIRE(r.size() == 3);
    CHECK(std::abs(r[0] + 1) < 1e-10);
    CHECK(std::abs(r[1]) < 1e-10);
    CHECK(std::abs(r[2] - 1) < 1e-10);

    // (x - 1)^2 (x + 2) gives one entry of multiplicity 2.
    const auto clustered = real_roots(rp({1, 0, -3, 2}), HighReal(-5), HighReal(5));
    REQUIRE(clustered.size() == 2);
    CHECK(clustered[1].multiplicity == 2);
    CHECK(abs(clustered[1].value - 1) < HighReal("1e-10"));

    const auto z = WeightFunction::parse("zagreb1");
    CHECK(std::abs(to_double(max_real_root(named_polynomial_exact(NamedPoly::phi1, 6, &z))) - 17.0855) <= 5e-4);
    for (int n = 6; n <= 30; ++n) {
      CHECK(max_real_root(named_polynomial_exact(NamedPoly::phi1, n, &z)) > n * sqrt(HighReal(n - 1)));
    }
    CHECK_THROWS_AS(max_real_root(rp({1, 0, 1})), std::domain_error);
  }

  TEST_CASE("certified signs") {
    const auto p = rp({1, 0, -2});
    const auto below = certified_sign(p, HighReal("1.41421356"));
    CHECK(below.certified);
    CHECK(below.sign == -1);
    const auto above = certified_sign(p, HighReal("1.41421357"));
    CHECK(above.sign == 1);
    const auto exact_zero = certified_sign(p, sqrt(HighReal(2)));
    CHECK_FALSE(exact_zero.certified);
  }
}

TEST_SUITE("named-polys") {
  TEST_CASE("closed forms") {
    const auto h = named_polynomial(NamedPoly::h_n, 12);
    CHECK(to_double(h.evaluate(sqrt(HighReal(12)))) == doctest::Approx(16 - 4 * std::sqrt(12.0)).epsilon(1e-14));
    CHECK(named_polynomial_exact(NamedPoly::h_n, 12) == rp({1, 0, -13, -4, 28}));
    CHECK(named_polynomial_exact(NamedPoly::h_n1, 12).leading() == 288 * 121);
    CHECK(named_polynomial_exact(NamedPoly::h_n3, 12).leading() == 2304 * 100);

    const auto z = WeightFunction::parse("hyper_zagreb");
    for (int n = 6; n <= 12; ++n) {
      const auto full = named_polynomial_exact(NamedPoly::phi2_full, n, &z);
      CHECK(full == rp({1, 0}) * named_polynomial_exact(NamedPoly::phi2, n, &z));
    }
    CHECK_THROWS_AS(named_polynomial_exact(NamedPoly::phi1, 5, &z), std::out_of_range);
    CHECK_THROWS_AS(named_polynomial_exact(NamedPoly::phi3, 4, &z), std::out_of_range);
    CHECK_THROWS_AS(named_polynomial_exact(NamedPoly::h_n2, 11), std::out_of_range);
    CHECK_THROWS_AS(named_polynomial_exact(NamedPoly::phi1, 8), std::invalid_argument);
    const auto e = WeightFunction::parse("exp_zagreb1");
    CHECK_THROWS_AS(named_polynomial_exact(NamedPoly::phi1, 8, &e), std::invalid_argument);
    CHECK_NOTHROW(named_polynomial(NamedPoly::phi1, 8, &e));
    for (auto name : {NamedPoly::phi1, NamedPoly::phi2, NamedPoly::phi2_full, NamedPoly::phi3, NamedPoly::h_n,
                      NamedPoly::h_n1, NamedPoly::h_n2, NamedPoly::h_n3}) {
      CHECK(parse_named_poly(to_string(name)) == name);
    }
  }

  TEST_CASE("phi polynomials for irrational weights agree with the quotient numerically") {
    const auto e = WeightFunction::parse("sum_connectivity:a=1.5");
    for (int n = 6; n <= 10; ++n) {
      const auto q = quotient_matrix(make_named(NamedFamily::g2(n)), e, named_partition(FamilyTag::G2, n));
      const double rho = rho_f(make_named(NamedFamily::g2(n)), e);
      CHECK(to_double(max_real_root(named_polynomial(NamedPoly::phi1, n, &e))) == doctest::Approx(rho).epsilon(1e-10));
      CHECK(quotient_spectral_radius(q) == doctest::Approx(rho).epsilon(1e-10));
    }
  }
}
