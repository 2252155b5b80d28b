#include <cmath>

#include "verify_common.hpp"
#include "wadj/canonical.hpp"
#include "wadj/named_polys.hpp"
#include "wadj/parallel.hpp"
#include "wadj/spectral.hpp"

namespace wadj {

namespace {

struct ChainRow {
  int n{0};
  double rho1{0}, rho2{0}, upper{0}, lower{0};
  double root1{0}, root2{0};
};

ChainRow chain_row(int n) {
  const auto ext = detail::extended_weight();
  ChainRow r;
  r.n = n;
  r.rho1 = rho_f(detail::named_graph(0, n), ext);
  r.rho2 = rho_f(detail::named_graph(1, n), ext);
  r.upper = to_double(detail::half_n_minus_09_sqrt(n, 38));
  r.lower = to_double(detail::half_n_minus_09_sqrt(n, 50));
  r.root1 = to_double(max_real_root(named_polynomial(NamedPoly::h_n1, n)));
  r.root2 = to_double(max_real_root(named_polynomial(NamedPoly::h_n2, n)));
  return r;
}

}  // namespace

VerificationReport verify_theorem41(int n_lo, int n_hi, const Theorem41Options& opts) {
  if (n_lo < 12 || n_hi > 60 || n_lo > n_hi) {
    throw std::out_of_range("verify_theorem41: order range must lie within 12..60");
  }
  detail::Stopwatch clock;
  VerificationReport report;
  report.campaign = "theorem41";
  report.parameters = {{"n", {n_lo, n_hi}}, {"d_family_max_n", opts.d_family_max_n}, {"slack", opts.slack}};

  std::vector<ChainRow> rows(static_cast<std::size_t>(n_hi - n_lo + 1));
  parallel_for(rows.size(), [&](std::size_t i) { rows[i] = chain_row(n_lo + static_cast<int>(i)); });

  for (const auto& r : rows) {
    CaseRecord c;
    c.id = "n=" + std::to_string(r.n) + " chain";
    c.inputs = {{"n", r.n}};
    c.values = {{"rho_ex_G1", r.rho1},
                {"upper", r.upper},
                {"rho_ex_G2", r.rho2},
                {"lower", r.lower},
                {"h_n1_root", r.root1},
                {"h_n2_root", r.root2}};
    c.computed = r.rho2;
    c.tolerance = opts.slack;
    const bool chain = r.rho1 > r.upper - opts.slack && r.upper > r.rho2 - opts.slack && r.rho2 > r.lower - opts.slack;
    const bool roots = std::abs(r.root1 - r.rho1) <= 1e-8 * r.rho1 && std::abs(r.root2 - r.rho2) <= 1e-8 * r.rho2;
    c.status = detail::pass_if(chain && roots);
    if (!chain) c.note = "inequality chain broken";
    if (!roots) c.note = "largest roots of h_n1/h_n2 disagree with the eigensolver";
    report.cases.push_back(std::move(c));

    if (r.n <= 20) {
      const double bound = 0.5 * (r.n - 3 + 1.0 / (r.n - 3)) * std::sqrt(static_cast<double>(r.n));
      CaseRecord t;
      t.id = "n=" + std::to_string(r.n) + " regular-graph bound below rho_ex(G2)";
      t.inputs = {{"n", r.n}};
      t.values = {{"bound", bound}, {"rho_ex_G2", r.rho2}};
      t.computed = r.rho2 - bound;
      t.coordinate = "extended_table1[n=" + std::to_string(r.n) + "]";
      t.status = detail::pass_if(bound < r.rho2);
      report.cases.push_back(std::move(t));
    }
  }

  const auto ext = detail::extended_weight();
  for (int n = n_lo; n <= std::min(n_hi, opts.d_family_max_n); ++n) {
    const auto family = enumerate_max_degree_n_minus_2(n);
    const double lower = to_double(detail::half_n_minus_09_sqrt(n, 50));
    std::vector<double> rho(family.graphs.size());
    parallel_for(rho.size(), [&](std::size_t i) { rho[i] = rho_f(family.graphs[i], ext); });

    CaseRecord c;
    c.id = "n=" + std::to_string(n) + " max degree n-2 family";
    c.inputs = {{"n", n}};
    Json members = Json::array();
    double worst = 0.0;
    for (std::size_t i = 0; i < rho.size(); ++i) {
      members.push_back({{"graph6", to_graph6(family.graphs[i])}, {"rho_ex", rho[i]}});
      worst = std::max(worst, rho[i]);
    }
    c.values = {{"classes", family.count}, {"lower", lower}, {"max_rho_ex", worst}, {"members", members}};
    c.computed = worst;
    c.tolerance = opts.slack;
    const bool below = worst < lower + opts.slack;
    c.status = detail::pass_if(family.count == 9 && below);
    if (family.count != 9) c.note = "expected 9 classes, found " + std::to_string(family.count);
    if (!below) c.note = "a member reaches the lower bound";
    report.cases.push_back(std::move(c));

    const Graph d1 = make_d1(n);
    const double rho_d1 = rho_f(d1, ext);
    const double root = to_double(max_real_root(named_polynomial(NamedPoly::h_n3, n)));
    const auto cert = canonical_form(d1);
    const bool member =
        std::binary_search(family.certificates.begin(), family.certificates.end(), cert);
    CaseRecord d;
    d.id = "n=" + std::to_string(n) + " K_{2,3} member matches h_n3";
    d.inputs = {{"n", n}, {"graph6", to_graph6(d1)}};
    d.values = {{"rho_ex", rho_d1}, {"h_n3_root", root}, {"in_family", member}};
    d.computed = rho_d1;
    d.status = detail::pass_if(member && std::abs(rho_d1 - root) <= 1e-8 * rho_d1);
    report.cases.push_back(std::move(d));
  }
  report.runtime_seconds = clock.seconds();
  return report;
}

}  // namespace wadj
