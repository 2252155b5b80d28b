#include <algorithm>
#include <random>

#include "verify_common.hpp"
#include "wadj/parallel.hpp"
#include "wadj/spectral.hpp"
#include "wadj/transforms.hpp"

namespace wadj {

namespace {

struct Sample {
  Graph before;
  Graph after;
  std::string move;  // e.g. "kelmans u=1 v=3"
  bool disconnected{false};
};

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Random recursive tree plus a random number of extra edges.
Graph random_connected(Rng& rng, int n) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back(make_edge(static_cast<Vertex>(uniform(rng, 0, v - 1)), v));
  Graph tree(static_cast<std::size_t>(n), edges);
  std::vector<Edge> missing;
  for (Vertex a = 0; a < static_cast<Vertex>(n); ++a) {
    for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b) {
      if (!tree.has_edge(a, b)) missing.push_back({a, b});
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  const int extra = uniform(rng, 0, std::min<int>(static_cast<int>(missing.size()), 2 * n));
  missing.resize(static_cast<std::size_t>(extra));
  return tree.with_edges_added(missing);
}

/// Random connected core in which two vertices a, b share their core
/// neighbourhood, with pendants hung on both. Such graphs admit pendant
/// shifts between a and b.
Graph random_twin_pendant_graph(Rng& rng, int n) {
  const int pendants = uniform(rng, 2, std::max(2, n - 3));
  const int core_order = n - pendants;
  Graph core = random_connected(rng, core_order);
  const auto a = static_cast<Vertex>(uniform(rng, 0, core_order - 1));
  auto b = static_cast<Vertex>(uniform(rng, 0, core_order - 2));
  if (b >= a) ++b;
  std::vector<Edge> edges;
  for (const auto& e : core.edges()) {
    if (e.u != b && e.v != b) edges.push_back(e);
  }
  for (Vertex w : core.neighbors(a)) {
    if (w != b) edges.push_back(make_edge(b, w));
  }
  if (core.has_edge(a, b) || uniform(rng, 0, 1) == 1) edges.push_back(make_edge(a, b));
  const int on_a = uniform(rng, 1, pendants - 1);
  Vertex next = static_cast<Vertex>(core_order);
  for (int i = 0; i < pendants; ++i) edges.push_back(make_edge(i < on_a ? a : b, next++));
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

std::vector<Sample> kelmans_samples(Rng& rng, const KelmansOptions& opts, std::size_t& attempts) {
  std::vector<Sample> out;
  const std::size_t max_attempts = 200 * opts.samples + 1000;
  while (out.size() < opts.samples && attempts < max_attempts) {
    ++attempts;
    const int n = uniform(rng, opts.n_lo, opts.n_hi);
    Graph g = random_connected(rng, n);
    const auto u = static_cast<Vertex>(uniform(rng, 0, n - 1));
    auto v = static_cast<Vertex>(uniform(rng, 0, n - 2));
    if (v >= u) ++v;
    auto outcome = kelmans(g, u, v);
    if (!outcome.changed) continue;
    out.push_back({std::move(g), std::move(outcome.result), "kelmans u=" + std::to_string(u) + " v=" +
                   std::to_string(v), outcome.disconnected});
  }
  return out;
}

std::vector<Sample> pendant_samples(Rng& rng, const KelmansOptions& opts, std::size_t& attempts) {
  std::vector<Sample> out;
  const std::size_t max_attempts = 200 * opts.samples + 1000;
  const int lo = std::max(opts.n_lo, 5);
  if (lo > opts.n_hi) return out;
  while (out.size() < opts.samples && attempts < max_attempts) {
    ++attempts;
    const int n = uniform(rng, lo, opts.n_hi);
    Graph g = random_twin_pendant_graph(rng, n);
    if (!g.connected()) continue;
    struct Move {
      Vertex v, u, w;
    };
    std::vector<Move> moves;
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex u = 0; u < g.order(); ++u) {
        if (u == v) continue;
        for (Vertex w : g.neighbors(v)) {
          if (pendant_shift_violations(g, v, u, w).empty()) moves.push_back({v, u, w});
        }
      }
    }
    if (moves.empty()) continue;
    const auto& m = moves[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(moves.size()) - 1))];
    Graph after = pendant_shift(g, m.v, m.u, m.w);
    if (compare_isomorphism(g, after).isomorphic) continue;
    out.push_back({std::move(g), std::move(after),
                   "pendant_shift v=" + std::to_string(m.v) + " u=" + std::to_string(m.u) + " w=" +
                       std::to_string(m.w),
                   false});
  }
  return out;
}

void evaluate(VerificationReport& report, const std::string& what, const std::vector<Sample>& samples,
              std::size_t requested, std::size_t attempts, const WeightFunction& f, bool pstar,
              const KelmansOptions& opts) {
  std::vector<double> diff(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    diff[i] = rho_f(samples[i].after, f) - rho_f(samples[i].before, f);
  });

  std::size_t violations = 0;
  std::size_t ties = 0;
  std::size_t disconnected = 0;
  std::size_t disconnected_violations = 0;
  double worst = samples.empty() ? 0.0 : diff[0];
  std::optional<std::size_t> first_violation;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    worst = std::min(worst, diff[i]);
    if (samples[i].disconnected) ++disconnected;
    if (std::abs(diff[i]) <= opts.slack) ++ties;
    if (diff[i] < -opts.slack) {
      ++violations;
      if (samples[i].disconnected) ++disconnected_violations;
      if (!first_violation) first_violation = i;
    }
  }

  CaseRecord c;
  c.id = what + " f=" + f.label();
  c.inputs = {{"f", f.spec()}, {"n", {opts.n_lo, opts.n_hi}}, {"seed", opts.seed}, {"requested", requested}};
  c.values = {{"applications", samples.size()},
              {"attempts", attempts},
              {"violations", violations},
              {"ties_within_slack", ties},
              {"disconnected_results", disconnected},
              {"violations_on_disconnected", disconnected_violations},
              {"min_increase", worst}};
  c.computed = static_cast<double>(violations);
  c.tolerance = opts.slack;
  if (first_violation) {
    const auto& s = samples[*first_violation];
    c.values["first_violation"] = {{"before", to_graph6(s.before)},
                                   {"after", to_graph6(s.after)},
                                   {"move", s.move},
                                   {"increase", diff[*first_violation]}};
  }
  if (!pstar) {
    c.status = CaseStatus::info;
    c.note = "weight lacks property P*; violations are informative";
  } else {
    c.status = detail::pass_if(violations == 0 && samples.size() >= requested);
    if (samples.size() < requested) c.note = "could not draw enough non-isomorphic applications";
    if (violations > 0) c.note = std::to_string(violations) + " decreases beyond slack";
  }
  report.cases.push_back(std::move(c));
}

}  // namespace

VerificationReport verify_kelmans(const std::vector<WeightFunction>& fs, const KelmansOptions& opts) {
  if (opts.samples < 1) throw std::invalid_argument("verify_kelmans: samples must be >= 1");
  if (opts.n_lo < 2 || opts.n_lo > opts.n_hi) throw std::invalid_argument("verify_kelmans: bad order range");
  if (opts.n_hi > static_cast<int>(kExactIsomorphismOrder)) {
    throw std::out_of_range("verify_kelmans: orders above " + std::to_string(kExactIsomorphismOrder) +
                            " would only give probable isomorphism verdicts");
  }
  detail::Stopwatch clock;
  VerificationReport report;
  report.campaign = "kelmans";
  Json specs = Json::array();
  for (const auto& f : fs) specs.push_back(f.spec());
  report.parameters = {{"samples", opts.samples},
                       {"n", {opts.n_lo, opts.n_hi}},
                       {"seed", opts.seed},
                       {"slack", opts.slack},
                       {"f", specs},
                       {"pendant_shift", opts.pendant_shift}};

  // Samples are drawn once, serially, so the campaign is reproducible
  // whatever the thread count.
  Rng rng(opts.seed);
  std::size_t kelmans_attempts = 0;
  const auto kel = kelmans_samples(rng, opts, kelmans_attempts);
  std::size_t pendant_attempts = 0;
  std::vector<Sample> pend;
  if (opts.pendant_shift) pend = pendant_samples(rng, opts, pendant_attempts);

  for (const auto& f : fs) {
    const bool pstar = detail::has_pstar(f, opts.n_hi);
    evaluate(report, "kelmans", kel, opts.samples, kelmans_attempts, f, pstar, opts);
    if (opts.pendant_shift) evaluate(report, "pendant_shift", pend, opts.samples, pendant_attempts, f, pstar, opts);
  }
  report.runtime_seconds = clock.seconds();
  return report;
}

}  // namespace wadj
