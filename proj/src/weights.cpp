#include "wadj/weights.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wadj {

namespace detail {

enum class Op { number, var_x, var_y, neg, add, sub, mul, div, pow, exp, log, sqrt, abs };

struct Expr {
  Op op{Op::number};
  double number{0.0};
  Rational exact;
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;
};

namespace {

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr node(Op op, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->op = op;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    auto e = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("custom weight: " + what + " at position " + std::to_string(pos_) +
                                " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expression() {
    auto lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = node(Op::add, lhs, term());
      } else if (accept('-')) {
        lhs = node(Op::sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    auto lhs = unary();
    while (true) {
      if (accept('*')) {
        lhs = node(Op::mul, lhs, unary());
      } else if (accept('/')) {
        lhs = node(Op::div, lhs, unary());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (accept('-')) return node(Op::neg, unary());
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    auto base = primary();
    if (accept('^')) return node(Op::pow, base, unary());
    return base;
  }

  ExprPtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "x") return node(Op::var_x);
      if (name == "y") return node(Op::var_y);
      Op op;
      if (name == "exp") {
        op = Op::exp;
      } else if (name == "log") {
        op = Op::log;
      } else if (name == "sqrt") {
        op = Op::sqrt;
      } else if (name == "abs") {
        op = Op::abs;
      } else {
        pos_ = start;
        fail("unknown identifier '" + std::string(name) + "'");
      }
      if (!accept('(')) fail("expected '(' after " + std::string(name));
      auto arg = expression();
      if (!accept(')')) fail("expected ')'");
      return node(op, arg);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExprPtr number() {
    std::size_t start = pos_;
    BigInt digits = 0;
    BigInt scale = 1;
    bool seen_point = false;
    bool seen_digit = false;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        digits = digits * 10 + (c - '0');
        if (seen_point) scale *= 10;
        seen_digit = true;
      } else if (c == '.' && !seen_point) {
        seen_point = true;
      } else {
        break;
      }
      ++pos_;
    }
    if (!seen_digit) fail("malformed number");
    auto e = std::make_shared<Expr>();
    e->op = Op::number;
    e->exact = Rational(digits, scale);
    e->number = std::stod(std::string(text_.substr(start, pos_ - start)));
    return e;
  }

  std::string_view text_;
  std::size_t pos_{0};
};

template <class T>
T eval(const Expr& e, const T& x, const T& y) {
  using std::abs;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sqrt;
  switch (e.op) {
    case Op::number:
      if constexpr (std::is_same_v<T, double>) {
        return e.number;
      } else {
        return to_high(e.exact);
      }
    case Op::var_x: return x;
    case Op::var_y: return y;
    case Op::neg: return -eval(*e.lhs, x, y);
    case Op::add: return eval(*e.lhs, x, y) + eval(*e.rhs, x, y);
    case Op::sub: return eval(*e.lhs, x, y) - eval(*e.rhs, x, y);
    case Op::mul: return eval(*e.lhs, x, y) * eval(*e.rhs, x, y);
    case Op::div: return eval(*e.lhs, x, y) / eval(*e.rhs, x, y);
    case Op::pow: return T(pow(eval(*e.lhs, x, y), eval(*e.rhs, x, y)));
    case Op::exp: return T(exp(eval(*e.lhs, x, y)));
    case Op::log: return T(log(eval(*e.lhs, x, y)));
    case Op::sqrt: return T(sqrt(eval(*e.lhs, x, y)));
    case Op::abs: return T(abs(eval(*e.lhs, x, y)));
  }
  return T(0);
}

std::optional<Rational> eval_exact(const Expr& e, const Rational& x, const Rational& y) {
  auto both = [&](auto combine) -> std::optional<Rational> {
    auto a = eval_exact(*e.lhs, x, y);
    auto b = eval_exact(*e.rhs, x, y);
    if (!a || !b) return std::nullopt;
    return combine(*a, *b);
  };
  switch (e.op) {
    case Op::number: return e.exact;
    case Op::var_x: return x;
    case Op::var_y: return y;
    case Op::neg: {
      auto a = eval_exact(*e.lhs, x, y);
      if (!a) return std::nullopt;
      return Rational(-*a);
    }
    case Op::add: return both([](const Rational& a, const Rational& b) { return Rational(a + b); });
    case Op::sub: return both([](const Rational& a, const Rational& b) { return Rational(a - b); });
    case Op::mul: return both([](const Rational& a, const Rational& b) { return Rational(a * b); });
    case Op::div: {
      auto a = eval_exact(*e.lhs, x, y);
      auto b = eval_exact(*e.rhs, x, y);
      if (!a || !b || *b == 0) return std::nullopt;
      return Rational(*a / *b);
    }
    case Op::pow: {
      auto a = eval_exact(*e.lhs, x, y);
      auto b = eval_exact(*e.rhs, x, y);
      if (!a || !b || boost::multiprecision::denominator(*b) != 1) return std::nullopt;
      if (abs(*b) > 256 || (*a == 0 && *b < 0)) return std::nullopt;
      return ipow(*a, boost::multiprecision::numerator(*b).convert_to<long>());
    }
    default: return std::nullopt;
  }
}

bool has_transcendental(const Expr& e) {
  switch (e.op) {
    case Op::exp:
    case Op::log:
    case Op::sqrt:
    case Op::abs: return true;
    default: break;
  }
  return (e.lhs && has_transcendental(*e.lhs)) || (e.rhs && has_transcendental(*e.rhs));
}

}  // namespace
}  // namespace detail

namespace {

struct KindName {
  WeightKind kind;
  const char* name;
  int params;  // number of parameters: 0, 1 (a) or 2 (a, b)
};

constexpr KindName kKinds[] = {
    {WeightKind::constant_one, "constant_one", 0},
    {WeightKind::zagreb1, "zagreb1", 0},
    {WeightKind::hyper_zagreb, "hyper_zagreb", 0},
    {WeightKind::forgotten, "forgotten", 0},
    {WeightKind::sum_connectivity, "sum_connectivity", 1},
    {WeightKind::platt, "platt", 1},
    {WeightKind::sombor, "sombor", 2},
    {WeightKind::exp_zagreb1, "exp_zagreb1", 0},
    {WeightKind::exp_sum_connectivity, "exp_sum_connectivity", 1},
    {WeightKind::exp_sombor, "exp_sombor", 2},
    {WeightKind::extended, "extended", 0},
    {WeightKind::custom, "custom", 0},
};

const KindName& kind_info(WeightKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw std::logic_error("weights: unknown kind");
}

bool is_integral(double v) { return std::floor(v) == v && std::abs(v) <= 256; }

std::string format_param(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

double parse_double(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("weights: bad numeric parameter '" + std::string(s) + "'");
  }
  return v;
}

template <class T>
T evaluate_builtin(WeightKind kind, const T& alpha, const T& beta, const T& x, const T& y) {
  using std::exp;
  using std::pow;
  switch (kind) {
    case WeightKind::constant_one: return T(1);
    case WeightKind::zagreb1: return x + y;
    case WeightKind::hyper_zagreb: return (x + y) * (x + y);
    case WeightKind::forgotten: return x * x + y * y;
    case WeightKind::sum_connectivity: return T(pow(x + y, alpha));
    case WeightKind::platt: return T(pow(x + y - 2, alpha));
    case WeightKind::sombor: return T(pow(T(pow(x, alpha)) + T(pow(y, alpha)), beta));
    case WeightKind::exp_zagreb1: return T(exp(x + y));
    case WeightKind::exp_sum_connectivity: return T(exp(T(pow(x + y, alpha))));
    case WeightKind::exp_sombor: return T(exp(T(pow(T(pow(x, alpha)) + T(pow(y, alpha)), beta))));
    case WeightKind::extended: return (x / y + y / x) / 2;
    case WeightKind::custom: break;
  }
  throw std::logic_error("weights: builtin evaluation of custom kind");
}

}  // namespace

std::string to_string(WeightKind kind) { return kind_info(kind).name; }

WeightFunction WeightFunction::builtin(WeightKind kind, double alpha, double beta) {
  if (kind == WeightKind::custom) throw std::invalid_argument("weights: use WeightFunction::custom");
  if (!std::isfinite(alpha) || !std::isfinite(beta)) {
    throw std::invalid_argument("weights: parameters must be finite");
  }
  WeightFunction f;
  f.kind_ = kind;
  const int params = kind_info(kind).params;
  f.alpha_ = params >= 1 ? alpha : 1.0;
  f.beta_ = params >= 2 ? beta : 1.0;
  return f;
}

WeightFunction WeightFunction::custom(std::string_view expression) {
  WeightFunction f;
  f.kind_ = WeightKind::custom;
  f.source_ = std::string(expression);
  f.expr_ = detail::Parser(expression).parse();

  constexpr int kGrid = 32;
  for (int x = 1; x <= kGrid; ++x) {
    for (int y = 1; y <= x; ++y) {
      const double a = detail::eval<double>(*f.expr_, x, y);
      const double b = detail::eval<double>(*f.expr_, y, x);
      if (!std::isfinite(a) || !std::isfinite(b) || a <= 0 || b <= 0) {
        throw std::invalid_argument("custom weight '" + f.source_ +
                                    "' is not finite and positive at (" + std::to_string(x) + "," +
                                    std::to_string(y) + ")");
      }
      if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b))) {
        throw std::invalid_argument("custom weight '" + f.source_ + "' is not symmetric at (" +
                                    std::to_string(x) + "," + std::to_string(y) + ")");
      }
    }
  }
  return f;
}

WeightFunction WeightFunction::parse(std::string_view spec) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  spec = trim(spec);
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);

  if (name == "custom") {
    if (rest.empty()) throw std::invalid_argument("weights: custom requires an expression");
    return custom(rest);
  }
  if (name == "1" || name == "one") return builtin(WeightKind::constant_one);

  for (const auto& k : kKinds) {
    if (name != k.name || k.kind == WeightKind::custom) continue;
    double alpha = 1.0;
    double beta = 1.0;
    std::string_view params = rest;
    while (!params.empty()) {
      auto comma = params.find(',');
      auto item = trim(params.substr(0, comma));
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw std::invalid_argument("weights: expected key=value in '" + std::string(spec) + "'");
      }
      auto key = trim(item.substr(0, eq));
      double value = parse_double(trim(item.substr(eq + 1)));
      if ((key == "a" || key == "alpha") && k.params >= 1) {
        alpha = value;
      } else if ((key == "b" || key == "beta") && k.params >= 2) {
        beta = value;
      } else {
        throw std::invalid_argument("weights: unknown parameter '" + std::string(key) + "' for " + k.name);
      }
      if (comma == std::string_view::npos) break;
      params.remove_prefix(comma + 1);
    }
    return builtin(k.kind, alpha, beta);
  }
  throw std::invalid_argument("weights: unknown weight function '" + std::string(name) + "'");
}

std::string WeightFunction::spec() const {
  const auto& info = kind_info(kind_);
  std::string out = info.name;
  if (kind_ == WeightKind::custom) return out + ":" + source_;
  if (info.params >= 1) out += ":a=" + format_param(alpha_);
  if (info.params >= 2) out += ",b=" + format_param(beta_);
  return out;
}

std::string WeightFunction::label() const {
  const std::string a = format_param(alpha_);
  const std::string b = format_param(beta_);
  switch (kind_) {
    case WeightKind::constant_one: return "1";
    case WeightKind::zagreb1: return "x+y";
    case WeightKind::hyper_zagreb: return "(x+y)^2";
    case WeightKind::forgotten: return "x^2+y^2";
    case WeightKind::sum_connectivity: return "(x+y)^" + a;
    case WeightKind::platt: return "(x+y-2)^" + a;
    case WeightKind::sombor: return "(x^" + a + "+y^" + a + ")^" + b;
    case WeightKind::exp_zagreb1: return "e^(x+y)";
    case WeightKind::exp_sum_connectivity: return "e^((x+y)^" + a + ")";
    case WeightKind::exp_sombor: return "e^((x^" + a + "+y^" + a + ")^" + b + ")";
    case WeightKind::extended: return "(x/y+y/x)/2";
    case WeightKind::custom: return source_;
  }
  return {};
}

double WeightFunction::operator()(double x, double y) const {
  if (!(x >= 1.0) || !(y >= 1.0)) {
    throw std::domain_error("weights: degrees must be >= 1");
  }
  if (kind_ == WeightKind::custom) return detail::eval<double>(*expr_, x, y);
  return evaluate_builtin<double>(kind_, alpha_, beta_, x, y);
}

HighReal WeightFunction::evaluate_high(const HighReal& x, const HighReal& y) const {
  if (x < 1 || y < 1) throw std::domain_error("weights: degrees must be >= 1");
  if (kind_ == WeightKind::custom) return detail::eval<HighReal>(*expr_, x, y);
  return evaluate_builtin<HighReal>(kind_, HighReal(alpha_), HighReal(beta_), x, y);
}

bool WeightFunction::exact_on_integers() const {
  switch (kind_) {
    case WeightKind::constant_one:
    case WeightKind::zagreb1:
    case WeightKind::hyper_zagreb:
    case WeightKind::forgotten:
    case WeightKind::extended: return true;
    case WeightKind::sum_connectivity:
    case WeightKind::platt: return is_integral(alpha_);
    case WeightKind::sombor: return is_integral(alpha_) && is_integral(beta_);
    case WeightKind::exp_zagreb1:
    case WeightKind::exp_sum_connectivity:
    case WeightKind::exp_sombor: return false;
    case WeightKind::custom: return !detail::has_transcendental(*expr_);
  }
  return false;
}

std::optional<Rational> WeightFunction::evaluate_exact(long x, long y) const {
  if (x < 1 || y < 1) throw std::domain_error("weights: degrees must be >= 1");
  if (!exact_on_integers()) return std::nullopt;
  const Rational rx(x);
  const Rational ry(y);
  const auto a = static_cast<long>(alpha_);
  const auto b = static_cast<long>(beta_);
  switch (kind_) {
    case WeightKind::constant_one: return Rational(1);
    case WeightKind::zagreb1: return Rational(rx + ry);
    case WeightKind::hyper_zagreb: return Rational((rx + ry) * (rx + ry));
    case WeightKind::forgotten: return Rational(rx * rx + ry * ry);
    case WeightKind::sum_connectivity: return ipow(Rational(rx + ry), a);
    case WeightKind::platt: {
      Rational base = rx + ry - 2;
      if (base == 0 && a <= 0) return std::nullopt;
      return ipow(base, a);
    }
    case WeightKind::sombor: return ipow(Rational(ipow(rx, a) + ipow(ry, a)), b);
    case WeightKind::extended: return Rational((rx / ry + ry / rx) / 2);
    case WeightKind::custom: return detail::eval_exact(*expr_, rx, ry);
    default: return std::nullopt;
  }
}

bool WeightFunction::nominal_pstar() const {
  switch (kind_) {
    case WeightKind::constant_one:
    case WeightKind::zagreb1:
    case WeightKind::hyper_zagreb:
    case WeightKind::forgotten:
    case WeightKind::exp_zagreb1: return true;
    case WeightKind::sum_connectivity:
    case WeightKind::platt:
    case WeightKind::exp_sum_connectivity: return alpha_ >= 1.0;
    case WeightKind::sombor:
    case WeightKind::exp_sombor: return alpha_ >= 1.0 && beta_ >= 1.0;
    case WeightKind::extended:
    case WeightKind::custom: return false;
  }
  return false;
}

double evaluate(const WeightFunction& f, double x, double y) { return f(x, y); }

std::vector<WeightFunction> parse_weight_list(std::string_view text) {
  std::vector<std::string> items;
  std::string_view rest = text;
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string token(rest.substr(0, comma));
    const bool is_param = token.find('=') != std::string::npos && token.find(':') == std::string::npos;
    if (is_param && !items.empty()) {
      items.back() += "," + token;
    } else if (!token.empty()) {
      items.push_back(token);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  std::vector<WeightFunction> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(WeightFunction::parse(item));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(PStarCondition condition) {
  switch (condition) {
    case PStarCondition::i_monotone: return "i_monotone";
    case PStarCondition::ii_convex: return "ii_convex";
    case PStarCondition::iii_spread: return "iii_spread";
  }
  return {};
}

std::string PStarWitness::describe() const {
  std::ostringstream os;
  os << to_string(condition) << ":";
  for (std::size_t i = 0; i < points.size(); ++i) {
    os << " f(" << points[i].first << "," << points[i].second << ")=" << values[i];
  }
  return os.str();
}

namespace {

/// Grid values with an exact comparison when f is rational on integers.
class GridValues {
 public:
  GridValues(const WeightFunction& f, int d_max) : d_max_(d_max), exact_(f.exact_on_integers()) {
    const auto count = static_cast<std::size_t>(d_max) * d_max;
    approx_.resize(count);
    if (exact_) rational_.resize(count);
    for (int x = 1; x <= d_max; ++x) {
      for (int y = 1; y <= d_max; ++y) {
        const auto k = index(x, y);
        if (exact_) {
          rational_[k] = *f.evaluate_exact(x, y);
          approx_[k] = to_double(rational_[k]);
        } else {
          approx_[k] = f(x, y);
        }
      }
    }
  }

  double value(int x, int y) const { return approx_[index(x, y)]; }

  /// sign of (sum of coeff * f(point)); the tolerance only applies on the double path.
  int sign_of_combination(const std::vector<std::pair<int, std::pair<int, int>>>& terms) const {
    if (exact_) {
      Rational acc = 0;
      for (const auto& [c, p] : terms) acc += c * rational_[index(p.first, p.second)];
      return sign_of(acc);
    }
    double acc = 0;
    double scale = 0;
    for (const auto& [c, p] : terms) {
      const double v = approx_[index(p.first, p.second)];
      acc += c * v;
      scale = std::max(scale, std::abs(c * v));
    }
    if (std::abs(acc) <= 1e-12 * std::max(scale, 1e-300)) return 0;
    return acc > 0 ? 1 : -1;
  }

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(x - 1) * d_max_ + static_cast<std::size_t>(y - 1);
  }

  int d_max_;
  bool exact_;
  std::vector<double> approx_;
  std::vector<Rational> rational_;
};

}  // namespace

PStarReport check_pstar(const WeightFunction& f, int d_max) {
  if (d_max < 2) throw std::invalid_argument("check_pstar: d_max must be >= 2");
  const GridValues grid(f, d_max);
  PStarReport report;

  auto record = [&](PStarWitness w) {
    report.passes = false;
    if (!report.failed_condition) report.failed_condition = w.condition;
    report.witnesses.push_back(std::move(w));
  };

  // (i) f(x+1,y) >= f(x,y)
  bool found = false;
  for (int y = 1; y <= d_max && !found; ++y) {
    for (int x = 1; x + 1 <= d_max; ++x) {
      const int s = grid.sign_of_combination({{1, {x + 1, y}}, {-1, {x, y}}});
      if (s == 0) report.strict_monotone = false;
      if (s < 0) {
        record({PStarCondition::i_monotone, {{x, y}, {x + 1, y}}, {grid.value(x, y), grid.value(x + 1, y)}});
        found = true;
        break;
      }
    }
  }

  // (ii) f(x+2,y) - 2 f(x+1,y) + f(x,y) >= 0
  found = false;
  for (int y = 1; y <= d_max && !found; ++y) {
    for (int x = 1; x + 2 <= d_max; ++x) {
      const int s = grid.sign_of_combination({{1, {x + 2, y}}, {-2, {x + 1, y}}, {1, {x, y}}});
      if (s == 0) report.strict_convex = false;
      if (s < 0) {
        record({PStarCondition::ii_convex,
                {{x, y}, {x + 1, y}, {x + 2, y}},
                {grid.value(x, y), grid.value(x + 1, y), grid.value(x + 2, y)}});
        found = true;
        break;
      }
    }
  }

  // (iii) equal sums, larger spread never loses. Symmetry lets us take x >= y.
  found = false;
  for (int sum = 2; sum <= 2 * d_max && !found; ++sum) {
    for (int x1 = std::min(d_max, sum - 1); x1 >= (sum + 1) / 2 && !found; --x1) {
      const int y1 = sum - x1;
      for (int x2 = x1 - 1; x2 >= (sum + 1) / 2; --x2) {
        const int y2 = sum - x2;
        const int s = grid.sign_of_combination({{1, {x1, y1}}, {-1, {x2, y2}}});
        if (s == 0) report.strict_spread = false;
        if (s < 0) {
          record({PStarCondition::iii_spread, {{x1, y1}, {x2, y2}}, {grid.value(x1, y1), grid.value(x2, y2)}});
          found = true;
          break;
        }
      }
    }
  }

  if (!report.passes) {
    report.strict_monotone = report.strict_convex = report.strict_spread = false;
  }
  return report;
}

}  // namespace wadj
