#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wadj/enumerate.hpp"
#include "wadj/graph.hpp"
#include "wadj/weights.hpp"

namespace wadj {

using Json = nlohmann::ordered_json;

enum class CaseStatus { pass, fail, info, not_applicable };

std::string to_string(CaseStatus status);

struct CaseRecord {
  std::string id;
  Json inputs = Json::object();
  /// Named computed quantities.
  Json values = Json::object();
  /// Headline number for CSV output.
  std::optional<double> computed;
  /// Published value, verbatim, with its table coordinate.
  std::optional<std::string> reference;
  std::optional<std::string> coordinate;
  std::optional<double> tolerance;
  CaseStatus status{CaseStatus::info};
  std::string note;
};

struct ReportSummary {
  std::size_t pass{0};
  std::size_t fail{0};
  std::size_t info{0};
  std::size_t not_applicable{0};
};

struct VerificationReport {
  std::string campaign;
  Json parameters = Json::object();
  std::vector<CaseRecord> cases;
  double runtime_seconds{0.0};

  ReportSummary summary() const;
  /// True when no case failed (informational and not-applicable cases do
  /// not count against the campaign).
  bool passed() const;

  Json to_json() const;
  std::string to_csv() const;
};

/// Combines reports into one campaign, keeping case order.
VerificationReport merge_reports(std::string campaign, const std::vector<VerificationReport>& parts);

// ---------------------------------------------------------------------------
// Published tables.

enum class TableId { appendix_n6, appendix_n7, extended_table1 };

std::string to_string(TableId id);
TableId parse_table_id(const std::string& text);

/// Half a unit in the last printed place, never below 5e-4.
double printed_tolerance(const std::string& printed);

VerificationReport run_table(TableId id);

// ---------------------------------------------------------------------------
// Extremal graphs.

enum class ExtremalRank { first, second };
enum class ExtremalMode { exhaustive, candidate };

/// Order from which G2 is the second-largest for the given weight
/// (x+y: 10, (x+y)^2: 9, x^2+y^2: 8); nullopt for other weights.
std::optional<int> second_rank_threshold(const WeightFunction& f);

struct ExtremalOptions {
  /// Required gap between the winner and the runner-up.
  double winning_gap{1e-6};
  /// Values closer than this are a tie and fail the campaign.
  double tie_tolerance{1e-9};
};

VerificationReport verify_extremal(int n_lo, int n_hi, const std::vector<WeightFunction>& fs, ExtremalRank rank,
                                   ExtremalMode mode, const ExtremalOptions& opts = {});

// ---------------------------------------------------------------------------
// Kelmans and pendant-shift monotonicity.

struct KelmansOptions {
  std::size_t samples{1000};
  int n_lo{5};
  int n_hi{8};
  std::uint64_t seed{0};
  double slack{1e-9};
  bool pendant_shift{true};
};

/// Random connected graphs, random vertex pairs; only applications whose
/// result is not isomorphic to the input are kept until `samples` of them
/// exist. Samples are drawn serially from the seed, then evaluated for each
/// weight. A decrease beyond `slack` is a violation; it fails the campaign
/// when the weight has property P* and is informational otherwise.
VerificationReport verify_kelmans(const std::vector<WeightFunction>& fs, const KelmansOptions& opts);

// ---------------------------------------------------------------------------
// Extended-index bounds for n in 12..60.

struct Theorem41Options {
  /// Orders at which every Δ = n-2 bicyclic graph is generated and checked.
  int d_family_max_n{14};
  double slack{1e-9};
};

VerificationReport verify_theorem41(int n_lo, int n_hi, const Theorem41Options& opts = {});

// ---------------------------------------------------------------------------
// Quotient and polynomial campaigns.

/// Weights with property P* used by the property campaigns.
std::vector<WeightFunction> pstar_weight_set();

/// |rho(quotient) - rho(A_f)| and quotient eigenvalue containment for G2,
/// G3, G4 with their block partitions.
VerificationReport verify_equitable(int n_lo, int n_hi, const std::vector<WeightFunction>& fs,
                                    double tolerance = 1e-8);

/// Closed-form phi1/phi2/phi3 against the characteristic polynomials of the
/// block quotients, plus the factorisations of the extended characteristic
/// polynomials of G1, G2 and the K_{2,3}-based Δ = n-2 graph.
VerificationReport verify_polynomials(int n_lo, int n_hi, const std::vector<WeightFunction>& fs);

/// Every sign condition with its stated order range, for n up to n_max, plus
/// the expanded closed forms evaluated against the polynomials.
VerificationReport verify_sign_ledger(int n_max);

/// Constructive and edge-subset enumeration agree for every n in range.
VerificationReport verify_enumeration(int n_lo, int n_hi);

/// Class counts of connected bicyclic graphs for n = 4..10.
std::optional<std::size_t> golden_bicyclic_count(int n);

// ---------------------------------------------------------------------------
// Shared helpers.

/// K_{2,3} with n-5 pendants on one degree-3 vertex.
Graph make_d1(int n);

/// Index into {G1, G2, G3, G4} of the named graph isomorphic to g, if any.
std::optional<int> named_index(const Graph& g);

}  // namespace wadj
