#include "wadj/named_polys.hpp"

#include <stdexcept>

namespace wadj {

namespace {

template <class T>
T weight_at(const WeightFunction& f, long x, long y);

template <>
Rational weight_at<Rational>(const WeightFunction& f, long x, long y) {
  auto value = f.evaluate_exact(x, y);
  if (!value) {
    throw std::invalid_argument("named polynomial: " + f.spec() + " is not rational at (" + std::to_string(x) +
                                "," + std::to_string(y) + ")");
  }
  return *value;
}

template <>
HighReal weight_at<HighReal>(const WeightFunction& f, long x, long y) {
  return f.evaluate_high(HighReal(x), HighReal(y));
}

template <class T>
Polynomial<T> descending(std::initializer_list<T> c) {
  return Polynomial<T>::from_descending(std::vector<T>(c));
}

template <class T>
Polynomial<T> build(NamedPoly name, int n, const WeightFunction* f) {
  if (n < named_poly_min_n(name)) {
    throw std::out_of_range(to_string(name) + ": needs n >= " + std::to_string(named_poly_min_n(name)) +
                            ", got " + std::to_string(n));
  }
  if (named_poly_needs_weight(name) && f == nullptr) {
    throw std::invalid_argument(to_string(name) + ": a weight function is required");
  }
  const T N(n);
  auto w = [&](long x, long y) { return weight_at<T>(*f, x, y); };

  switch (name) {
    case NamedPoly::phi1: {
      const T a = w(n - 1, 2);
      const T b = w(n - 1, 1);
      const T c = w(2, 2);
      return descending<T>({T(1), T(-c), T(-(T(4) * a * a + (N - 5) * b * b)), T((N - 5) * b * b * c)});
    }
    case NamedPoly::phi2:
    case NamedPoly::phi2_full: {
      const T x1 = w(n - 2, 2);
      const T x2 = w(n - 2, 4);
      const T x3 = w(n - 2, 1);
      const T x4 = w(4, 2);
      const T x5 = w(4, 1);
      const T s = T(2) * x1 * x1 + x2 * x2 + (N - 5) * x3 * x3 + T(2) * x4 * x4 + x5 * x5;
      const T c = T(2) * x1 * x1 * x5 * x5 + (T(2) * N - 10) * x3 * x3 * x4 * x4 + (N - 5) * x3 * x3 * x5 * x5;
      const T linear = T(-4) * x1 * x2 * x4;
      if (name == NamedPoly::phi2) return descending<T>({T(1), T(0), T(-s), linear, c});
      return descending<T>({T(1), T(0), T(-s), linear, c, T(0)});
    }
    case NamedPoly::phi3: {
      const T y1 = w(n - 2, 3);
      const T y2 = w(n - 2, 1);
      const T y3 = w(3, 3);
      const T y4 = w(3, 2);
      return descending<T>({T(1), T(-y3), T(-((N - 4) * y2 * y2 + T(2) * y1 * y1 + T(2) * y4 * y4)),
                            T((N - 4) * y2 * y2 * y3), T((T(2) * N - 8) * y2 * y2 * y4 * y4)});
    }
    case NamedPoly::h_n:
      return descending<T>({T(1), T(0), T(-(N + 1)), T(-4), T(T(4) * (N - 5))});
    case NamedPoly::h_n1: {
      const T m2 = (N - 1) * (N - 1);
      const T quad = T(36) * (T(4) + m2) * (T(4) + m2) + T(8) * (T(9) + m2) * (T(9) + m2) +
                     T(72) * (N - 4) * (T(1) + m2) * (T(1) + m2) + T(676) * m2;
      return descending<T>({T(T(288) * m2), T(0), T(-quad), T(T(-52) * (T(4) + m2) * (T(9) + m2)),
                            T(T(169) * (N - 4) * (T(1) + m2) * (T(1) + m2))});
    }
    case NamedPoly::h_n2: {
      const T m2 = (N - 1) * (N - 1);
      const T tail = (N - 5) * (T(1) + m2) * (T(1) + m2);
      return descending<T>({T(T(4) * m2), T(T(-4) * m2), T(-((T(4) + m2) * (T(4) + m2) + tail)), tail});
    }
    case NamedPoly::h_n3: {
      const T m2 = (N - 2) * (N - 2);
      const T quad = T(432) * (T(4) + m2) * (T(4) + m2) + T(576) * (N - 5) * (T(1) + m2) * (T(1) + m2) +
                     T(8112) * m2;
      return descending<T>({T(T(2304) * m2), T(0), T(-quad), T(0),
                            T(T(2028) * (N - 5) * (T(1) + m2) * (T(1) + m2))});
    }
  }
  throw std::invalid_argument("named polynomial: unknown name");
}

}  // namespace

std::string to_string(NamedPoly name) {
  switch (name) {
    case NamedPoly::phi1: return "phi1";
    case NamedPoly::phi2: return "phi2";
    case NamedPoly::phi2_full: return "phi2_full";
    case NamedPoly::phi3: return "phi3";
    case NamedPoly::h_n: return "h_n";
    case NamedPoly::h_n1: return "h_n1";
    case NamedPoly::h_n2: return "h_n2";
    case NamedPoly::h_n3: return "h_n3";
  }
  return "unknown";
}

NamedPoly parse_named_poly(std::string_view text) {
  for (auto name : {NamedPoly::phi1, NamedPoly::phi2, NamedPoly::phi2_full, NamedPoly::phi3, NamedPoly::h_n,
                    NamedPoly::h_n1, NamedPoly::h_n2, NamedPoly::h_n3}) {
    if (text == to_string(name)) return name;
  }
  throw std::invalid_argument("unknown polynomial name '" + std::string(text) + "'");
}

int named_poly_min_n(NamedPoly name) {
  switch (name) {
    case NamedPoly::phi1:
    case NamedPoly::phi2:
    case NamedPoly::phi2_full:
      return 6;
    case NamedPoly::phi3:
      return 5;
    default:
      return 12;
  }
}

bool named_poly_needs_weight(NamedPoly name) {
  return name == NamedPoly::phi1 || name == NamedPoly::phi2 || name == NamedPoly::phi2_full ||
         name == NamedPoly::phi3;
}

RationalPolynomial named_polynomial_exact(NamedPoly name, int n, const WeightFunction* f) {
  return build<Rational>(name, n, f);
}

HighPolynomial named_polynomial(NamedPoly name, int n, const WeightFunction* f) {
  if (f != nullptr && named_poly_needs_weight(name) && !f->exact_on_integers()) {
    return build<HighReal>(name, n, f);
  }
  return build<Rational>(name, n, f).cast<HighReal>();
}

}  // namespace wadj
