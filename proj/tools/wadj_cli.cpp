#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "wadj/enumerate.hpp"
#include "wadj/families.hpp"
#include "wadj/graph.hpp"
#include "wadj/spectral.hpp"
#include "wadj/verify.hpp"
#include "wadj/weights.hpp"

namespace {

using namespace wadj;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Range {
  int lo{0};
  int hi{0};
};

/// "A..B" or a single integer.
Range parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    Range r{std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty range");
    return r;
  } catch (const std::logic_error&) {
    throw std::invalid_argument("bad range '" + text + "', expected A..B or an integer");
  }
}

ExtremalRank parse_rank(const std::string& text) {
  if (text == "1" || text == "first") return ExtremalRank::first;
  if (text == "2" || text == "second") return ExtremalRank::second;
  throw std::invalid_argument("bad rank '" + text + "'");
}

ExtremalMode parse_mode(const std::string& text) {
  if (text == "exhaustive") return ExtremalMode::exhaustive;
  if (text == "candidate") return ExtremalMode::candidate;
  throw std::invalid_argument("bad mode '" + text + "'");
}

/// Named families ("G2:9", "B:3,1,3", "P:2,1,2", "D1:12") or graph6.
Graph parse_graph(const std::string& text) {
  if (text.rfind("D1:", 0) == 0) return make_d1(std::stoi(text.substr(3)));
  if (text.find(':') != std::string::npos) return make_named(NamedFamily::parse(text));
  return from_graph6(text);
}

struct Output {
  std::string format{"json"};
  std::string path;

  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
  }

  int report(const VerificationReport& r) const {
    write(format == "csv" ? r.to_csv() : r.to_json().dump(2));
    const auto s = r.summary();
    std::cerr << r.campaign << ": " << s.pass << " pass, " << s.fail << " fail, " << s.info << " info, "
              << s.not_applicable << " not applicable (" << r.runtime_seconds << " s)\n";
    return r.passed() ? 0 : kExitFail;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree-weighted adjacency matrices of bicyclic graphs: spectra and verification campaigns"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", out.path, "Write the report to this file instead of stdout");

  std::optional<int> exit_code;

  // tables
  auto* tables = app.add_subcommand("tables", "Reproduce a published table");
  std::string table_id;
  tables->add_option("id", table_id, "appendix_n6, appendix_n7 or extended_table1")->required();
  tables->callback([&] { exit_code = out.report(run_table(parse_table_id(table_id))); });

  // extremal
  auto* extremal = app.add_subcommand("extremal", "Largest and second-largest spectral radius");
  std::string ext_n = "4..9", ext_f = "zagreb1", ext_rank = "1", ext_mode = "exhaustive";
  extremal->add_option("--n", ext_n, "Order range A..B");
  extremal->add_option("--f", ext_f, "Comma-separated weight specs");
  extremal->add_option("--rank", ext_rank, "1 or 2");
  extremal->add_option("--mode", ext_mode, "exhaustive or candidate");
  extremal->callback([&] {
    const auto r = parse_range(ext_n);
    exit_code = out.report(
        verify_extremal(r.lo, r.hi, parse_weight_list(ext_f), parse_rank(ext_rank), parse_mode(ext_mode)));
  });

  // kelmans
  auto* kelmans = app.add_subcommand("kelmans", "Randomized Kelmans and pendant-shift monotonicity");
  KelmansOptions kopts;
  std::string kel_f = "zagreb1,hyper_zagreb,forgotten,constant_one";
  std::string kel_n = "5..8";
  bool no_pendant = false;
  kelmans->add_option("--samples", kopts.samples, "Applications per weight")->check(CLI::PositiveNumber);
  kelmans->add_option("--seed", kopts.seed, "Random seed")->required();
  kelmans->add_option("--f", kel_f, "Comma-separated weight specs");
  kelmans->add_option("--n", kel_n, "Order range A..B");
  kelmans->add_flag("--no-pendant-shift", no_pendant, "Skip the pendant-shift samples");
  kelmans->callback([&] {
    const auto r = parse_range(kel_n);
    kopts.n_lo = r.lo;
    kopts.n_hi = r.hi;
    kopts.pendant_shift = !no_pendant;
    exit_code = out.report(verify_kelmans(parse_weight_list(kel_f), kopts));
  });

  // theorem41
  auto* t41 = app.add_subcommand("theorem41", "Extended-index bounds for G1, G2 and the max-degree n-2 family");
  std::string t41_n = "12..60";
  Theorem41Options topts;
  t41->add_option("--n", t41_n, "Order range within 12..60");
  t41->add_option("--d-family-max-n", topts.d_family_max_n, "Largest order for the max-degree n-2 check");
  t41->callback([&] {
    const auto r = parse_range(t41_n);
    exit_code = out.report(verify_theorem41(r.lo, r.hi, topts));
  });

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Connected bicyclic graphs up to isomorphism");
  int en_n = 0;
  std::optional<int> en_delta;
  std::string en_method = "constructive";
  bool en_graph6 = false;
  enumerate->add_option("--n", en_n, "Order")->required();
  enumerate->add_option("--max-degree", en_delta, "Keep classes with this maximum degree");
  enumerate->add_option("--method", en_method, "constructive or edge_subset");
  enumerate->add_flag("--graph6", en_graph6, "Print one graph6 line per class");
  enumerate->callback([&] {
    const auto method = parse_method(en_method);
    EnumerationReport rep;
    if (en_delta && *en_delta == en_n - 2 && en_n > kMaxEnumerationOrder) {
      rep = enumerate_max_degree_n_minus_2(en_n);
    } else if (en_delta) {
      rep = enumerate_with_max_degree(en_n, *en_delta, method);
    } else {
      rep = enumerate_bicyclic(en_n, method);
    }
    std::string text;
    if (en_graph6) {
      for (const auto& g : rep.graphs) text += to_graph6(g) + "\n";
    } else {
      Json j = {{"n", rep.n}, {"method", to_string(rep.method)}, {"count", rep.count}};
      if (en_delta) j["max_degree"] = *en_delta;
      Json list = Json::array();
      for (const auto& g : rep.graphs) list.push_back(to_graph6(g));
      j["graph6"] = list;
      text = j.dump(2);
    }
    out.write(text);
    exit_code = 0;
  });

  // spectral
  auto* spectral = app.add_subcommand("spectral", "Spectral radius of A_f(G)");
  std::string sp_graph, sp_f = "constant_one";
  bool sp_full = false;
  spectral->add_option("--graph", sp_graph, "graph6 string or family such as G2:9, B:3,1,3, P:2,1,2")->required();
  spectral->add_option("--f", sp_f, "Weight spec");
  spectral->add_flag("--spectrum", sp_full, "Include the full spectrum");
  spectral->callback([&] {
    const Graph g = parse_graph(sp_graph);
    const auto f = WeightFunction::parse(sp_f);
    const auto res = spectral_radius(build_matrix(g, f), {1e-10, sp_full});
    Json j = {{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"f", f.spec()},
              {"rho", res.rho},        {"residual", res.residual}, {"perron", res.perron}};
    if (res.spectrum) j["spectrum"] = *res.spectrum;
    out.write(j.dump(2));
    exit_code = 0;
  });

  // equitable
  auto* equitable = app.add_subcommand("equitable", "Quotient spectral radius against the full matrix");
  std::string eq_n = "6..14", eq_f;
  double eq_tol = 1e-8;
  equitable->add_option("--n", eq_n, "Order range A..B");
  equitable->add_option("--f", eq_f, "Comma-separated weight specs (default: the P* set)");
  equitable->add_option("--tolerance", eq_tol, "Absolute tolerance");
  equitable->callback([&] {
    const auto r = parse_range(eq_n);
    const auto fs = eq_f.empty() ? pstar_weight_set() : parse_weight_list(eq_f);
    exit_code = out.report(verify_equitable(r.lo, r.hi, fs, eq_tol));
  });

  // polys
  auto* polys = app.add_subcommand("polys", "Closed-form characteristic polynomials against direct ones");
  std::string po_n = "6..12", po_f;
  polys->add_option("--n", po_n, "Order range A..B");
  polys->add_option("--f", po_f, "Comma-separated weight specs (default: the P* set)");
  polys->callback([&] {
    const auto r = parse_range(po_n);
    const auto fs = po_f.empty() ? pstar_weight_set() : parse_weight_list(po_f);
    exit_code = out.report(verify_polynomials(r.lo, r.hi, fs));
  });

  // ledger
  auto* ledger = app.add_subcommand("ledger", "Sign conditions of the closed-form polynomials");
  int ledger_n = 60;
  ledger->add_option("--n-max", ledger_n, "Largest order checked");
  ledger->callback([&] { exit_code = out.report(verify_sign_ledger(ledger_n)); });

  // enumeration oracle
  auto* oracle = app.add_subcommand("enumeration-check", "Constructive and edge-subset enumeration agree");
  std::string or_n = "4..9";
  oracle->add_option("--n", or_n, "Order range A..B");
  oracle->callback([&] {
    const auto r = parse_range(or_n);
    exit_code = out.report(verify_enumeration(r.lo, r.hi));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return exit_code.value_or(0);
}
