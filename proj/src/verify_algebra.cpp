#include <algorithm>
#include <cmath>
#include <functional>

#include "verify_common.hpp"
#include "wadj/named_polys.hpp"
#include "wadj/parallel.hpp"
#include "wadj/quotient.hpp"
#include "wadj/spectral.hpp"

namespace wadj {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::pow;
using boost::multiprecision::sqrt;

struct QuotientCase {
  FamilyTag tag;
  NamedPoly poly;
  const char* label;
};

constexpr QuotientCase kQuotientCases[] = {{FamilyTag::G2, NamedPoly::phi1, "G2"},
                                           {FamilyTag::G4, NamedPoly::phi2_full, "G4"},
                                           {FamilyTag::G3, NamedPoly::phi3, "G3"}};

Graph tagged_graph(FamilyTag tag, int n) { return make_named({tag, n}); }

DenseMatrix<Rational> exact_matrix(const Graph& g, const WeightFunction& f) {
  DenseMatrix<Rational> m(g.order(), std::vector<Rational>(g.order(), Rational(0)));
  for (const auto& e : g.edges()) {
    const auto w = f.evaluate_exact(static_cast<long>(g.degree(e.u)), static_cast<long>(g.degree(e.v)));
    if (!w) throw std::invalid_argument("exact_matrix: weight is not rational on these degrees");
    m[e.u][e.v] = *w;
    m[e.v][e.u] = *w;
  }
  return m;
}

RationalPolynomial x_power(std::size_t k) { return RationalPolynomial::monomial(Rational(1), k); }
RationalPolynomial linear(long root) { return RationalPolynomial(std::vector<Rational>{Rational(-root), Rational(1)}); }

HighReal max_abs_coefficient(const HighPolynomial& p) {
  HighReal out(0);
  for (const auto& c : p.coefficients()) out = std::max(out, HighReal(abs(c)));
  return out;
}

bool close_polynomials(const HighPolynomial& a, const HighPolynomial& b, const HighReal& rel) {
  if (a.degree() != b.degree()) return false;
  const HighReal scale = std::max(max_abs_coefficient(a), max_abs_coefficient(b));
  for (int k = 0; k <= a.degree(); ++k) {
    if (abs(a.coefficient(k) - b.coefficient(k)) > rel * scale) return false;
  }
  return true;
}

int positive_root_count(const HighPolynomial& p) {
  const HighReal bound = root_bound(p);
  int count = 0;
  for (const auto& r : real_roots(p, -bound, bound)) {
    if (r.value > HighReal(kRootClusterWidth)) count += r.multiplicity;
  }
  return count;
}

int negative_root_count(const HighPolynomial& p) {
  const HighReal bound = root_bound(p);
  int count = 0;
  for (const auto& r : real_roots(p, -bound, bound)) {
    if (r.value < -HighReal(kRootClusterWidth)) count += r.multiplicity;
  }
  return count;
}

CaseRecord quotient_identity(const QuotientCase& qc, int n, const WeightFunction& f) {
  CaseRecord c;
  c.id = "n=" + std::to_string(n) + " f=" + f.label() + " " + to_string(qc.poly) + " vs quotient of " + qc.label;
  c.inputs = {{"n", n}, {"f", f.spec()}, {"graph", qc.label}, {"polynomial", to_string(qc.poly)}};
  const Graph g = tagged_graph(qc.tag, n);
  const auto q = quotient_matrix(g, f, named_partition(qc.tag, n));

  bool identical = false;
  HighPolynomial closed = named_polynomial(qc.poly, n, &f);
  if (q.exact) {
    const auto direct = char_poly<Rational>(*q.exact);
    const auto faddeev = char_poly_faddeev<Rational>(*q.exact);
    const auto formula = named_polynomial_exact(qc.poly, n, &f);
    identical = direct == formula && faddeev == direct;
    c.values["char_poly"] = direct.to_string("x");
    Json ascending = Json::array();
    for (const auto& a : direct.coefficients()) ascending.push_back(a.str());
    c.values["coefficients_ascending"] = ascending;
    c.values["exact"] = true;
    if (faddeev != direct) c.note = "Hessenberg and Faddeev-LeVerrier routes disagree";
  } else {
    const auto direct = quotient_char_poly(q);
    identical = close_polynomials(direct, closed, HighReal("1e-12"));
    c.values["char_poly"] = direct.to_string("x");
    c.values["exact"] = false;
  }
  c.values["formula"] = closed.to_string("x");

  // The closed form after dropping the factor x, and the sign pattern of roots.
  HighPolynomial reduced = closed;
  if (qc.poly == NamedPoly::phi2_full) {
    reduced = named_polynomial(NamedPoly::phi2, n, &f);
    const bool factor = RationalPolynomial(std::vector<Rational>{0, 1}).cast<HighReal>() * reduced == closed;
    const HighReal r_full = max_real_root(closed);
    const HighReal r_reduced = max_real_root(reduced);
    const bool same_root = abs(r_full - r_reduced) <= HighReal("1e-30") * r_full;
    c.values["phi2_max_root_matches"] = same_root;
    if (!factor || !same_root) {
      identical = false;
      c.note = "phi2 is not phi2_full / x";
    }
  }
  const auto bounds = descartes_bounds(reduced);
  const int positive = positive_root_count(reduced);
  const int negative = negative_root_count(reduced);
  c.values["descartes"] = {{"max_positive", bounds.max_positive}, {"max_negative", bounds.max_negative}};
  c.values["roots"] = {{"positive", positive}, {"negative", negative}};
  c.values["rho_quotient"] = to_double(max_real_root(reduced));
  const bool sign_pattern = positive == 2 && bounds.max_positive == 2 && negative == reduced.degree() - 2;
  if (!sign_pattern) c.note = "root sign pattern differs from two positive roots and the rest negative";
  c.status = detail::pass_if(identical && sign_pattern);
  return c;
}

struct Factorisation {
  const char* id;
  NamedPoly poly;
  std::function<Graph(int)> graph;
  std::function<RationalPolynomial(int)> cofactor;  // multiplies h
  std::function<Rational(int)> denominator;
};

CaseRecord factorisation_case(const Factorisation& fz, int n) {
  const auto ext = detail::extended_weight();
  const Graph g = fz.graph(n);
  const auto m = exact_matrix(g, ext);
  const auto direct = char_poly<Rational>(m);
  const auto h = named_polynomial_exact(fz.poly, n);
  const auto expected = (Rational(1) / fz.denominator(n)) * (fz.cofactor(n) * h);

  // Sample-point route: det(xI - A) in high precision against the closed form.
  DenseMatrix<HighReal> mh(g.order(), std::vector<HighReal>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) mh[i][j] = to_high(m[i][j]);
  }
  const HighReal radius = HighReal(rho_f(g, ext) + 1.0);
  const auto expected_high = expected.cast<HighReal>();
  HighReal worst(0);
  for (int k = 0; k < 20; ++k) {
    const HighReal x = -radius + 2 * radius * (HighReal(k) + HighReal("0.5")) / 20;
    const HighReal lhs = characteristic_value(mh, x);
    const HighReal rhs = expected_high.evaluate(x);
    const HighReal scale = std::max(HighReal(1), HighReal(abs(rhs)));
    worst = std::max(worst, HighReal(abs(lhs - rhs) / scale));
  }

  CaseRecord c;
  c.id = "n=" + std::to_string(n) + " " + fz.id;
  c.inputs = {{"n", n}, {"graph6", to_graph6(g)}, {"polynomial", to_string(fz.poly)}};
  c.values = {{"coefficients_equal", direct == expected}, {"max_relative_sample_error", to_double(worst)}};
  c.computed = to_double(worst);
  c.tolerance = 1e-25;
  c.status = detail::pass_if(direct == expected && worst <= HighReal("1e-25"));
  return c;
}

// ---------------------------------------------------------------------------
// Sign ledger.

struct LedgerCondition {
  std::string id;
  int n_min;
  int expected;
  std::function<HighPolynomial(int)> poly;
  std::function<HighReal(int)> point;
};

struct ClosedForm {
  std::string id;
  int n_min;
  std::function<HighPolynomial(int)> poly;
  std::function<HighReal(int)> point;
  std::function<HighReal(int)> value;
};

HighReal root_of(int value) { return sqrt(HighReal(value)); }

std::vector<LedgerCondition> ledger_conditions() {
  std::vector<LedgerCondition> out;
  for (const auto& f : pstar_weight_set()) {
    out.push_back({"phi1(sqrt(n-1) f(n-1,1)) < 0, f=" + f.label(), 6, -1,
                   [f](int n) { return named_polynomial(NamedPoly::phi1, n, &f); },
                   [f](int n) { return root_of(n - 1) * f.evaluate_high(HighReal(n - 1), HighReal(1)); }});
  }
  const auto z = WeightFunction::builtin(WeightKind::zagreb1);
  auto phi = [z](NamedPoly p) { return [z, p](int n) { return named_polynomial(p, n, &z); }; };
  auto n_root = [](int n) { return HighReal(n) * root_of(n - 1); };
  auto n5_root = [](int n) { return HighReal(n - 5) * root_of(n - 1); };
  auto h = [](NamedPoly p) { return [p](int n) { return named_polynomial(p, n); }; };
  auto half = [](int tenths) { return [tenths](int n) { return detail::half_n_minus_09_sqrt(n, tenths); }; };

  out.push_back({"phi2(n sqrt(n-1)) > 0, f=x+y", 10, 1, phi(NamedPoly::phi2), n_root});
  out.push_back({"phi2((n-5) sqrt(n-1)) < 0, f=x+y", 7, -1, phi(NamedPoly::phi2), n5_root});
  out.push_back({"phi3(n sqrt(n-1)) > 0, f=x+y", 9, 1, phi(NamedPoly::phi3), n_root});
  out.push_back({"phi3((n-5) sqrt(n-1)) < 0, f=x+y", 8, -1, phi(NamedPoly::phi3), n5_root});
  out.push_back({"h_n(sqrt(n-3)) < 0", 12, -1, h(NamedPoly::h_n), [](int n) { return root_of(n - 3); }});
  out.push_back({"h_n(sqrt(n)) > 0", 12, 1, h(NamedPoly::h_n), [](int n) { return root_of(n); }});
  out.push_back({"h_n(sqrt(n-1.2)) > 0", 20, 1, h(NamedPoly::h_n),
                 [](int n) { return sqrt(HighReal(10 * n - 12) / 10); }});
  out.push_back({"h_n1(0.5(n-0.9)sqrt(n-3.8)) < 0", 12, -1, h(NamedPoly::h_n1), half(38)});
  out.push_back({"h_n2(0.5(n-0.9)sqrt(n-3.8)) > 0", 12, 1, h(NamedPoly::h_n2), half(38)});
  out.push_back({"h_n2(0.5(n-0.9)sqrt(n-5)) < 0", 12, -1, h(NamedPoly::h_n2), half(50)});
  out.push_back({"h_n3(0.5(n-0.9)sqrt(n-5)) > 0", 12, 1, h(NamedPoly::h_n3), half(50)});
  out.push_back({"h_n3(0.5(n-0.9)sqrt(n-7)) < 0", 12, -1, h(NamedPoly::h_n3), half(70)});
  return out;
}

HighReal poly_in(const HighReal& n, std::initializer_list<long long> descending) {
  HighReal acc(0);
  for (long long c : descending) acc = acc * n + HighReal(c);
  return acc;
}

std::vector<ClosedForm> closed_forms() {
  const auto z = WeightFunction::builtin(WeightKind::zagreb1);
  auto phi = [z](NamedPoly p) { return [z, p](int n) { return named_polynomial(p, n, &z); }; };
  auto h = [](NamedPoly p) { return [p](int n) { return named_polynomial(p, n); }; };
  auto half = [](int tenths) { return [tenths](int n) { return detail::half_n_minus_09_sqrt(n, tenths); }; };
  std::vector<ClosedForm> out;

  out.push_back({"phi2(n sqrt(n-1)) expanded, f=x+y", 6, phi(NamedPoly::phi2),
                 [](int n) { return HighReal(n) * root_of(n - 1); },
                 [](int n) {
                   const HighReal N(n);
                   const HighReal s = root_of(n - 1);
                   return 1067 * N - 48 * N * N * s - 24 * pow(N, 3) * s - 533 * N * N + 16 * pow(N, 3) -
                          18 * pow(N, 4) + 3 * pow(N, 5) - 485;
                 }});
  out.push_back({"phi2((n-5) sqrt(n-1)) expanded, f=x+y", 6, phi(NamedPoly::phi2),
                 [](int n) { return HighReal(n - 5) * root_of(n - 1); },
                 [](int n) {
                   const HighReal N(n);
                   const HighReal s = root_of(n - 1);
                   return 240 * N * s + 72 * N * N * s - 24 * pow(N, 3) * s - 3668 * N + 1577 * N * N -
                          489 * pow(N, 3) + 97 * pow(N, 4) - 7 * pow(N, 5) + 2540;
                 }});
  out.push_back({"phi3(n sqrt(n-1)) expanded, f=x+y", 6, phi(NamedPoly::phi3),
                 [](int n) { return HighReal(n) * root_of(n - 1); },
                 [](int n) {
                   const HighReal N(n);
                   const HighReal s = root_of(n - 1);
                   return (N - 1) * (2 * N * N - 30 * N * N * s - 250 * N - 13 * pow(N, 3) + 3 * pow(N, 4) +
                                     24 * N * s + 200);
                 }});
  out.push_back({"phi3((n-5) sqrt(n-1)) expanded, f=x+y", 6, phi(NamedPoly::phi3),
                 [](int n) { return HighReal(n - 5) * root_of(n - 1); },
                 [](int n) {
                   const HighReal N(n);
                   const HighReal s = root_of(n - 1);
                   const HighReal m1 = N - 1;
                   const HighReal m5 = N - 5;
                   return 50 * (N - 4) * m1 * m1 + m1 * m1 * pow(m5, 4) - 6 * m1 * s * pow(m5, 3) -
                          m1 * m5 * m5 * (2 * (N + 1) * (N + 1) + m1 * m1 * (N - 4) + 50) +
                          6 * m1 * m1 * s * (N - 4) * m5;
                 }});
  out.push_back({"h_n(sqrt(n-3)) expanded", 12, h(NamedPoly::h_n), [](int n) { return root_of(n - 3); },
                 [](int n) {
                   const HighReal N(n);
                   return 4 * N + (N - 3) * (N - 3) - 4 * root_of(n - 3) - (N + 1) * (N - 3) - 20;
                 }});
  out.push_back({"h_n(sqrt(n)) expanded", 12, h(NamedPoly::h_n), [](int n) { return root_of(n); },
                 [](int n) {
                   const HighReal N(n);
                   return 4 * N - N * (N + 1) + N * N - 4 * root_of(n) - 20;
                 }});
  out.push_back({"h_n(sqrt(n-1.2)) expanded", 12, h(NamedPoly::h_n),
                 [](int n) { return sqrt(HighReal(10 * n - 12) / 10); },
                 [](int n) {
                   const HighReal N(n);
                   const HighReal a = HighReal(10 * n - 12) / 10;
                   return 4 * N + a * a - 4 * sqrt(a) - (N + 1) * a - 20;
                 }});
  out.push_back({"h_n1(0.5(n-0.9)sqrt(n-3.8)) expanded", 12, h(NamedPoly::h_n1), half(38), [](int n) {
                   const HighReal N(n);
                   const HighReal s = sqrt(HighReal(10 * n - 38) / 10);
                   return s / 5 * poly_in(N, {-130, 637, -2938, 6123, -10010, 5850}) +
                          poly_in(N, {-475000, -1177500, 32155750, -133858525, 282465650, -381185036, 338531472,
                                      -198949811}) /
                              125000;
                 }});
  out.push_back({"h_n3(0.5(n-0.9)sqrt(n-7)) expanded", 12, h(NamedPoly::h_n3), half(70), [](int n) {
                   return poly_in(HighReal(n), {-49500, -229500, 9823185, -58733106, 167513583, -286491054,
                                                305387712, -157410096}) /
                          625;
                 }});
  out.push_back({"h_n3(0.5(n-0.9)sqrt(n-5)) expanded", 12, h(NamedPoly::h_n3), half(50), [](int n) {
                   return poly_in(HighReal(n), {130500, -2596500, 19697985, -77235816, 185131179, -298187244,
                                                312906240, -160065600}) /
                          625;
                 }});
  return out;
}

}  // namespace

VerificationReport verify_equitable(int n_lo, int n_hi, const std::vector<WeightFunction>& fs, double tolerance) {
  if (n_lo < 6 || n_lo > n_hi) throw std::out_of_range("verify_equitable: order range must start at 6 or later");
  detail::Stopwatch clock;
  VerificationReport report;
  report.campaign = "equitable";
  Json specs = Json::array();
  for (const auto& f : fs) specs.push_back(f.spec());
  report.parameters = {{"n", {n_lo, n_hi}}, {"f", specs}, {"tolerance", tolerance}};

  struct Task {
    const WeightFunction* f;
    int n;
    const QuotientCase* qc;
  };
  std::vector<Task> tasks;
  for (const auto& f : fs) {
    for (int n = n_lo; n <= n_hi; ++n) {
      for (const auto& qc : kQuotientCases) tasks.push_back({&f, n, &qc});
    }
  }
  std::vector<CaseRecord> records(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    const auto& [f, n, qc] = tasks[i];
    const Graph g = tagged_graph(qc->tag, n);
    const auto matrix = build_matrix(g, *f);
    const auto full = spectral_radius(matrix, {1e-10, true});
    const auto q = quotient_matrix(g, *f, named_partition(qc->tag, n));
    const auto refined = equitable_refine(g, *f);
    const auto q2 = quotient_matrix(g, *f, refined);
    const double rho_q = quotient_spectral_radius(q);
    const double rho_q2 = quotient_spectral_radius(q2);

    double worst_eigen = 0.0;
    for (double lambda : quotient_eigenvalues(q)) {
      double nearest = std::numeric_limits<double>::infinity();
      for (double mu : *full.spectrum) nearest = std::min(nearest, std::abs(lambda - mu));
      worst_eigen = std::max(worst_eigen, nearest);
    }
    const double diff = std::max(std::abs(rho_q - full.rho), std::abs(rho_q2 - full.rho));

    CaseRecord& c = records[i];
    c.id = "n=" + std::to_string(n) + " f=" + f->label() + " " + qc->label;
    c.inputs = {{"n", n}, {"f", f->spec()}, {"graph", qc->label}};
    c.values = {{"rho", full.rho},
                {"rho_quotient", rho_q},
                {"rho_refined_quotient", rho_q2},
                {"refined_blocks", refined.size()},
                {"equitable", q.equitable && q2.equitable},
                {"max_eigenvalue_distance", worst_eigen}};
    c.computed = diff;
    c.tolerance = tolerance;
    c.status = detail::pass_if(q.equitable && q2.equitable && diff <= tolerance && worst_eigen <= tolerance);
  });
  report.cases = std::move(records);
  report.runtime_seconds = clock.seconds();
  return report;
}

VerificationReport verify_polynomials(int n_lo, int n_hi, const std::vector<WeightFunction>& fs) {
  if (n_lo < 6 || n_lo > n_hi) throw std::out_of_range("verify_polynomials: order range must start at 6 or later");
  detail::Stopwatch clock;
  VerificationReport report;
  report.campaign = "polynomials";
  Json specs = Json::array();
  for (const auto& f : fs) specs.push_back(f.spec());
  const int h_lo = 12;
  const int h_hi = std::max(20, n_hi);
  report.parameters = {{"n", {n_lo, n_hi}}, {"f", specs}, {"factorisation_n", {h_lo, h_hi}}};

  struct Task {
    const WeightFunction* f;
    int n;
    const QuotientCase* qc;
  };
  std::vector<Task> tasks;
  for (const auto& f : fs) {
    for (int n = n_lo; n <= n_hi; ++n) {
      for (const auto& qc : kQuotientCases) tasks.push_back({&f, n, &qc});
    }
  }
  std::vector<CaseRecord> records(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) { records[i] = quotient_identity(*tasks[i].qc, tasks[i].n, *tasks[i].f); });

  const std::vector<Factorisation> factorisations{
      {"G1 extended char poly = x^(n-4) h_n1 / (288(n-1)^2)", NamedPoly::h_n1,
       [](int n) { return detail::named_graph(0, n); }, [](int n) { return x_power(n - 4); },
       [](int n) { return Rational(288L * (n - 1) * (n - 1)); }},
      {"G2 extended char poly = x^(n-6)(x-1)(x+1)^2 h_n2 / (4(n-1)^2)", NamedPoly::h_n2,
       [](int n) { return detail::named_graph(1, n); },
       [](int n) { return x_power(n - 6) * linear(1) * linear(-1) * linear(-1); },
       [](int n) { return Rational(4L * (n - 1) * (n - 1)); }},
      {"K_{2,3} member extended char poly = x^(n-4) h_n3 / (2304(n-2)^2)", NamedPoly::h_n3,
       [](int n) { return make_d1(n); }, [](int n) { return x_power(n - 4); },
       [](int n) { return Rational(2304L * (n - 2) * (n - 2)); }}};
  std::vector<std::pair<const Factorisation*, int>> ftasks;
  for (const auto& fz : factorisations) {
    for (int n = h_lo; n <= h_hi; ++n) ftasks.push_back({&fz, n});
  }
  std::vector<CaseRecord> frecords(ftasks.size());
  parallel_for(ftasks.size(), [&](std::size_t i) { frecords[i] = factorisation_case(*ftasks[i].first, ftasks[i].second); });

  report.cases = std::move(records);
  report.cases.insert(report.cases.end(), frecords.begin(), frecords.end());
  report.runtime_seconds = clock.seconds();
  return report;
}

VerificationReport verify_sign_ledger(int n_max) {
  if (n_max < 20) throw std::out_of_range("verify_sign_ledger: n_max must be at least 20");
  detail::Stopwatch clock;
  VerificationReport report;
  report.campaign = "sign_ledger";
  report.parameters = {{"n_max", n_max}};

  const auto conditions = ledger_conditions();
  std::vector<CaseRecord> records(conditions.size());
  parallel_for(conditions.size(), [&](std::size_t i) {
    const auto& cond = conditions[i];
    std::vector<int> failing;
    std::vector<int> uncertified;
    double closest = std::numeric_limits<double>::infinity();
    for (int n = cond.n_min; n <= n_max; ++n) {
      const auto s = certified_sign(cond.poly(n), cond.point(n));
      if (!s.certified) uncertified.push_back(n);
      if (s.sign != cond.expected) failing.push_back(n);
      closest = std::min(closest, std::abs(to_double(s.value)));
    }
    CaseRecord& c = records[i];
    c.id = cond.id;
    c.inputs = {{"n", {cond.n_min, n_max}}, {"expected_sign", cond.expected}};
    c.values = {{"wrong_sign_at", failing}, {"uncertified_at", uncertified}, {"min_abs_value", closest}};
    c.computed = static_cast<double>(failing.size());
    c.status = detail::pass_if(failing.empty() && uncertified.empty());
  });

  // phi1 at sqrt(n-1) f(n-1,1) is also bounded by -4 f(2,2) f(n-1,1)^2.
  for (const auto& f : pstar_weight_set()) {
    std::vector<int> failing;
    for (int n = 6; n <= n_max; ++n) {
      const HighReal b = f.evaluate_high(HighReal(n - 1), HighReal(1));
      const HighReal c22 = f.evaluate_high(HighReal(2), HighReal(2));
      const auto s = certified_sign(named_polynomial(NamedPoly::phi1, n, &f), root_of(n - 1) * b);
      if (s.value > -4 * c22 * b * b + s.margin) failing.push_back(n);
    }
    CaseRecord c;
    c.id = "phi1(sqrt(n-1) f(n-1,1)) <= -4 f(2,2) f(n-1,1)^2, f=" + f.label();
    c.inputs = {{"n", {6, n_max}}, {"f", f.spec()}};
    c.values = {{"violated_at", failing}};
    c.status = detail::pass_if(failing.empty());
    records.push_back(std::move(c));
  }

  for (const auto& form : closed_forms()) {
    std::vector<int> failing;
    double worst = 0.0;
    for (int n = form.n_min; n <= n_max; ++n) {
      const auto direct = certified_sign(form.poly(n), form.point(n));
      const HighReal closed = form.value(n);
      const HighReal diff = abs(direct.value - closed);
      const HighReal allowed = 10 * direct.margin + HighReal("1e-30") * (1 + abs(closed));
      worst = std::max(worst, to_double(diff));
      if (diff > allowed) failing.push_back(n);
    }
    CaseRecord c;
    c.id = form.id;
    c.inputs = {{"n", {form.n_min, n_max}}};
    c.values = {{"mismatch_at", failing}, {"max_abs_difference", worst}};
    c.computed = worst;
    c.status = detail::pass_if(failing.empty());
    records.push_back(std::move(c));
  }
  report.cases = std::move(records);
  report.runtime_seconds = clock.seconds();
  return report;
}

}  // namespace wadj
