#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "wadj/numeric.hpp"

namespace wadj {

template <class T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Univariate polynomial with coefficients in ascending degree order.
/// Trailing zero coefficients are trimmed, so the zero polynomial has an
/// empty coefficient list and degree -1.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

  static Polynomial monomial(const T& coefficient, std::size_t power) {
    std::vector<T> c(power + 1, T(0));
    c[power] = coefficient;
    return Polynomial(std::move(c));
  }

  /// Coefficients listed from the highest power down.
  static Polynomial from_descending(std::vector<T> descending) {
    std::reverse(descending.begin(), descending.end());
    return Polynomial(std::move(descending));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }

  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(0); }
  T leading() const { return c_.empty() ? T(0) : c_.back(); }

  template <class U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + convert<U>(*it);
    return acc;
  }
  T operator()(const T& x) const { return evaluate<T>(x); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<T> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * T(static_cast<long>(k));
    return Polynomial(std::move(d));
  }

  /// p(-x)
  Polynomial reflected() const {
    std::vector<T> c = c_;
    for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
    return Polynomial(std::move(c));
  }

  template <class U>
  Polynomial<U> cast() const {
    std::vector<U> c;
    c.reserve(c_.size());
    for (const auto& a : c_) c.push_back(convert<U>(a));
    return Polynomial<U>(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<T> c = a.c_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> c = p.c_;
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form, highest power first, e.g. "x^3 - 4*x^2 - 1089*x + 2420".
  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const T& a = c_[static_cast<std::size_t>(k)];
      if (a == T(0)) continue;
      const bool negative = a < T(0);
      const T mag = negative ? T(-a) : a;
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const bool unit = mag == T(1);
      if (!unit || k == 0) os << format(mag);
      if (k > 0) {
        if (!unit) os << "*";
        os << var;
        if (k > 1) os << "^" << k;
      }
    }
    return os.str();
  }

 private:
  template <class U, class V>
  static U convert(const V& v) {
    if constexpr (std::is_same_v<U, V>) {
      return v;
    } else if constexpr (std::is_same_v<V, Rational> && std::is_same_v<U, HighReal>) {
      return to_high(v);
    } else if constexpr (std::is_same_v<U, double>) {
      return to_double(v);
    } else {
      return U(v);
    }
  }

  static std::string format(const T& v) {
    if constexpr (std::is_same_v<T, Rational>) {
      return v.str();
    } else if constexpr (std::is_same_v<T, HighReal>) {
      return v.str(20);
    } else {
      std::ostringstream os;
      os.precision(17);
      os << v;
      return os.str();
    }
  }

  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }

  std::vector<T> c_;
};

using RationalPolynomial = Polynomial<Rational>;
using HighPolynomial = Polynomial<HighReal>;

namespace detail {

inline bool is_zero_entry(const Rational& v) { return v == 0; }
inline bool is_zero_entry(const HighReal& v) { return v == 0; }

inline HighReal magnitude(const HighReal& v) { return boost::multiprecision::abs(v); }
inline Rational magnitude(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace detail

/// det(xI - M) by similarity reduction to upper Hessenberg form followed by
/// the Hessenberg determinant recurrence; O(k^3) field operations. Exact for
/// Rational; for HighReal the pivot is the largest entry in the column.
template <class T>
Polynomial<T> char_poly(DenseMatrix<T> h) {
  const std::size_t k = h.size();
  for (const auto& row : h) {
    if (row.size() != k) throw std::invalid_argument("char_poly: matrix is not square");
  }
  for (std::size_t m = 1; m + 1 < k; ++m) {
    std::size_t pivot = k;
    if constexpr (std::is_same_v<T, Rational>) {
      for (std::size_t i = m; i < k; ++i) {
        if (!detail::is_zero_entry(h[i][m - 1])) {
          pivot = i;
          break;
        }
      }
    } else {
      T best(0);
      for (std::size_t i = m; i < k; ++i) {
        const T mag = detail::magnitude(h[i][m - 1]);
        if (mag > best) {
          best = mag;
          pivot = i;
        }
      }
    }
    if (pivot == k) continue;
    if (pivot != m) {
      std::swap(h[pivot], h[m]);
      for (auto& row : h) std::swap(row[pivot], row[m]);
    }
    const T p = h[m][m - 1];
    for (std::size_t i = m + 1; i < k; ++i) {
      if (detail::is_zero_entry(h[i][m - 1])) continue;
      const T t = h[i][m - 1] / p;
      for (std::size_t j = 0; j < k; ++j) h[i][j] -= t * h[m][j];
      for (std::size_t r = 0; r < k; ++r) h[r][m] += t * h[r][i];
    }
  }

  // p_0 = 1, p_{j+1} = (x - h_jj) p_j - sum_i h_ij * prod(h_{l,l-1}) * p_i
  std::vector<Polynomial<T>> p;
  p.reserve(k + 1);
  p.emplace_back(std::vector<T>{T(1)});
  const Polynomial<T> x(std::vector<T>{T(0), T(1)});
  for (std::size_t j = 0; j < k; ++j) {
    Polynomial<T> next = (x - Polynomial<T>(std::vector<T>{h[j][j]})) * p[j];
    T product(1);
    for (std::size_t i = j; i-- > 0;) {
      product *= h[i + 1][i];
      next = next - T(product * h[i][j]) * p[i];
    }
    p.push_back(std::move(next));
  }
  return p[k];
}

/// det(xI - M) by the Faddeev-LeVerrier recurrence; O(k^4). Kept as an
/// independent route for cross-checking char_poly.
template <class T>
Polynomial<T> char_poly_faddeev(const DenseMatrix<T>& a) {
  const std::size_t k = a.size();
  std::vector<T> c(k + 1, T(0));
  c[k] = T(1);
  DenseMatrix<T> m(k, std::vector<T>(k, T(0)));
  for (std::size_t s = 1; s <= k; ++s) {
    // m <- a*m + c_{k-s+1} I, then c_{k-s} = -tr(a*m)/s
    DenseMatrix<T> am(k, std::vector<T>(k, T(0)));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t l = 0; l < k; ++l) {
        if (detail::is_zero_entry(a[i][l])) continue;
        for (std::size_t j = 0; j < k; ++j) am[i][j] += a[i][l] * m[l][j];
      }
    }
    for (std::size_t i = 0; i < k; ++i) am[i][i] += c[k - s + 1];
    m = std::move(am);
    T trace(0);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t l = 0; l < k; ++l) trace += a[i][l] * m[l][i];
    }
    c[k - s] = -trace / T(static_cast<long>(s));
  }
  return Polynomial<T>(std::move(c));
}

/// det(xI - M) at a single point by Gaussian elimination with partial pivoting.
HighReal characteristic_value(const DenseMatrix<HighReal>& m, const HighReal& x);

struct DescartesBounds {
  int max_positive{0};
  int max_negative{0};
};

template <class T>
int sign_variations(const Polynomial<T>& p) {
  int variations = 0;
  int last = 0;
  for (const auto& a : p.coefficients()) {
    const int s = sign_of(a);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

/// Sign variations of p(x) and p(-x); zero coefficients are skipped.
template <class T>
DescartesBounds descartes_bounds(const Polynomial<T>& p) {
  if (p.is_zero()) throw std::invalid_argument("descartes_bounds: zero polynomial");
  return {sign_variations(p), sign_variations(p.reflected())};
}

struct RealRoot {
  HighReal value;
  int multiplicity{1};
};

inline constexpr double kRootClusterWidth = 1e-9;

/// Real roots in [lo, hi], ascending, each located to well below 1e-10.
/// Roots of p' split the interval into monotone pieces, each bisected when
/// p changes sign; critical points where p vanishes become multiple roots.
/// Roots closer than kRootClusterWidth are merged into one entry whose
/// multiplicity is the sum.
std::vector<RealRoot> real_roots(const HighPolynomial& p, const HighReal& lo, const HighReal& hi);
std::vector<RealRoot> real_roots(const RationalPolynomial& p, const HighReal& lo, const HighReal& hi);

/// Cauchy bound: every root satisfies |r| <= bound.
HighReal root_bound(const HighPolynomial& p);

/// Largest real root; throws std::domain_error when p has none.
HighReal max_real_root(const HighPolynomial& p);
HighReal max_real_root(const RationalPolynomial& p);

/// p(x) evaluated in high precision with a conservative rounding margin.
/// certified means |value| > margin, so the sign is exact.
struct SignEvaluation {
  HighReal value;
  HighReal margin;
  int sign{0};
  bool certified{false};
};

SignEvaluation certified_sign(const HighPolynomial& p, const HighReal& x);
SignEvaluation certified_sign(const RationalPolynomial& p, const HighReal& x);

}  // namespace wadj
