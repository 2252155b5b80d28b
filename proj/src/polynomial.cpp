#include "wadj/polynomial.hpp"

#include <boost/multiprecision/number.hpp>

namespace wadj {

namespace {

using boost::multiprecision::abs;

// Rounding scale for cpp_bin_float_50 (about 1e-50 unit roundoff), with
// generous headroom for accumulated error in Horner evaluation.
const HighReal kRelativeMargin("1e-40");

HighReal absolute_sum(const HighPolynomial& p, const HighReal& x) {
  HighReal acc(0);
  const HighReal ax = abs(x);
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) acc = acc * ax + abs(*it);
  return acc;
}

bool vanishes(const HighPolynomial& p, const HighReal& x) {
  const HighReal scale = absolute_sum(p, x);
  return abs(p.evaluate(x)) <= scale * kRelativeMargin * HighReal(p.degree() + 1);
}

HighReal bisect(const HighPolynomial& p, HighReal a, HighReal b, int sign_a) {
  for (int iter = 0; iter < 400; ++iter) {
    const HighReal mid = (a + b) / 2;
    if (mid == a || mid == b) break;
    const int s = sign_of(p.evaluate(mid));
    if (s == 0) return mid;
    if (s == sign_a) {
      a = mid;
    } else {
      b = mid;
    }
    if (b - a <= HighReal("1e-45") * (HighReal(1) + abs(a))) break;
  }
  return (a + b) / 2;
}

std::vector<RealRoot> cluster(std::vector<RealRoot> roots) {
  std::sort(roots.begin(), roots.end(), [](const RealRoot& a, const RealRoot& b) { return a.value < b.value; });
  std::vector<RealRoot> out;
  const HighReal width(kRootClusterWidth);
  for (auto& r : roots) {
    if (!out.empty() && r.value - out.back().value < width) {
      // Keep the multiplicity-weighted centre of the cluster.
      auto& last = out.back();
      last.value = (last.value * last.multiplicity + r.value * r.multiplicity) / (last.multiplicity + r.multiplicity);
      last.multiplicity += r.multiplicity;
    } else {
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<RealRoot> isolate(const HighPolynomial& p, const HighReal& lo, const HighReal& hi) {
  const int d = p.degree();
  if (d <= 0) return {};
  if (d == 1) {
    HighReal r = -p.coefficient(0) / p.coefficient(1);
    if (r < lo || r > hi) return {};
    return {{r, 1}};
  }
  const auto critical = isolate(p.derivative(), lo, hi);

  std::vector<RealRoot> roots;
  std::vector<HighReal> breaks{lo};
  for (const auto& c : critical) {
    breaks.push_back(c.value);
    if (vanishes(p, c.value)) roots.push_back({c.value, c.multiplicity + 1});
  }
  breaks.push_back(hi);

  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const HighReal& a = breaks[i];
    const HighReal& b = breaks[i + 1];
    if (!(a < b)) continue;
    if (vanishes(p, a) || vanishes(p, b)) continue;
    const int sa = sign_of(p.evaluate(a));
    const int sb = sign_of(p.evaluate(b));
    if (sa * sb < 0) roots.push_back({bisect(p, a, b, sa), 1});
  }
  // Endpoints of the search range are roots only when p vanishes there and
  // they were not already reported as critical points.
  for (const HighReal& end : {lo, hi}) {
    if (!vanishes(p, end)) continue;
    const bool known = std::any_of(roots.begin(), roots.end(), [&](const RealRoot& r) {
      return abs(r.value - end) < HighReal(kRootClusterWidth);
    });
    if (!known) roots.push_back({end, 1});
  }
  return cluster(std::move(roots));
}

}  // namespace

HighReal characteristic_value(const DenseMatrix<HighReal>& m, const HighReal& x) {
  const std::size_t k = m.size();
  DenseMatrix<HighReal> a(k, std::vector<HighReal>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = (i == j ? x : HighReal(0)) - m[i][j];
  }
  HighReal det(1);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (abs(a[r][c]) > abs(a[pivot][c])) pivot = r;
    }
    if (a[pivot][c] == 0) return HighReal(0);
    if (pivot != c) {
      std::swap(a[pivot], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const HighReal t = a[r][c] / a[c][c];
      if (t == 0) continue;
      for (std::size_t j = c; j < k; ++j) a[r][j] -= t * a[c][j];
    }
  }
  return det;
}

std::vector<RealRoot> real_roots(const HighPolynomial& p, const HighReal& lo, const HighReal& hi) {
  if (!(lo < hi)) throw std::invalid_argument("real_roots: need lo < hi");
  if (p.is_zero()) throw std::invalid_argument("real_roots: zero polynomial");
  return isolate(p, lo, hi);
}

std::vector<RealRoot> real_roots(const RationalPolynomial& p, const HighReal& lo, const HighReal& hi) {
  return real_roots(p.cast<HighReal>(), lo, hi);
}

HighReal root_bound(const HighPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("root_bound: zero polynomial");
  HighReal worst(0);
  const HighReal lead = abs(p.leading());
  for (int k = 0; k < p.degree(); ++k) worst = std::max(worst, HighReal(abs(p.coefficient(k)) / lead));
  return worst + 1;
}

HighReal max_real_root(const HighPolynomial& p) {
  const HighReal bound = root_bound(p);
  const auto roots = real_roots(p, -bound, bound);
  if (roots.empty()) throw std::domain_error("max_real_root: no real roots");
  return roots.back().value;
}

HighReal max_real_root(const RationalPolynomial& p) { return max_real_root(p.cast<HighReal>()); }

SignEvaluation certified_sign(const HighPolynomial& p, const HighReal& x) {
  SignEvaluation out;
  out.value = p.evaluate(x);
  out.margin = absolute_sum(p, x) * kRelativeMargin * HighReal(p.degree() + 2);
  out.sign = sign_of(out.value);
  out.certified = abs(out.value) > out.margin;
  return out;
}

SignEvaluation certified_sign(const RationalPolynomial& p, const HighReal& x) {
  return certified_sign(p.cast<HighReal>(), x);
}

}  // namespace wadj
