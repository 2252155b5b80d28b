#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wadj/numeric.hpp"

namespace wadj {

namespace detail {
struct Expr;
}

enum class WeightKind {
  constant_one,
  zagreb1,
  hyper_zagreb,
  forgotten,
  sum_connectivity,
  platt,
  sombor,
  exp_zagreb1,
  exp_sum_connectivity,
  exp_sombor,
  extended,
  custom,
};

/// A symmetric bivariate weight f(x, y) evaluated at endpoint degrees.
///
/// Text syntax: a kind name optionally followed by parameters, e.g.
/// "zagreb1", "sum_connectivity:a=2", "sombor:a=2,b=1", "custom:(x+y)^3".
/// Custom expressions understand + - * / ^, parentheses, x, y, decimal
/// literals and exp/log/sqrt/abs; they are checked for symmetry, finiteness
/// and positivity on the integer grid 1..32 when parsed.
class WeightFunction {
 public:
  static WeightFunction parse(std::string_view spec);
  static WeightFunction builtin(WeightKind kind, double alpha = 1.0, double beta = 1.0);
  static WeightFunction custom(std::string_view expression);

  WeightKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }

  /// Canonical text form; parse(spec()) reproduces the function.
  std::string spec() const;
  /// Short mathematical label such as "x+y" or "(x+y)^2".
  std::string label() const;

  /// f(x, y); throws std::domain_error unless x, y >= 1.
  double operator()(double x, double y) const;
  HighReal evaluate_high(const HighReal& x, const HighReal& y) const;
  /// Exact value at integer degrees when f is rational there, otherwise nullopt.
  std::optional<Rational> evaluate_exact(long x, long y) const;
  bool exact_on_integers() const;

  /// True when the parameters fall in the range for which the kind is
  /// listed as having property P* (alpha >= 1, beta >= 1 where relevant).
  bool nominal_pstar() const;

 private:
  WeightKind kind_{WeightKind::constant_one};
  double alpha_{1.0};
  double beta_{1.0};
  std::string source_;
  std::shared_ptr<const detail::Expr> expr_;
};

double evaluate(const WeightFunction& f, double x, double y);

std::string to_string(WeightKind kind);

/// Comma-separated list of specs; "sombor:a=2,b=1" keeps its parameters.
std::vector<WeightFunction> parse_weight_list(std::string_view text);

// ---------------------------------------------------------------------------
// Property P* on the integer degree grid.

enum class PStarCondition { i_monotone, ii_convex, iii_spread };

std::string to_string(PStarCondition condition);

struct PStarWitness {
  PStarCondition condition{PStarCondition::i_monotone};
  /// Grid points involved: (x,y),(x+1,y) for i; (x,y),(x+1,y),(x+2,y) for ii;
  /// (x1,y1),(x2,y2) with |x1-y1| > |x2-y2| for iii.
  std::vector<std::pair<int, int>> points;
  std::vector<double> values;

  std::string describe() const;
};

struct PStarReport {
  bool passes{true};
  std::optional<PStarCondition> failed_condition;
  /// First violation found for each failing condition, in condition order.
  std::vector<PStarWitness> witnesses;
  bool strict_monotone{true};
  bool strict_convex{true};
  bool strict_spread{true};

  bool only_non_strict() const {
    return passes && !(strict_monotone && strict_convex && strict_spread);
  }
};

PStarReport check_pstar(const WeightFunction& f, int d_max);

}  // namespace wadj
