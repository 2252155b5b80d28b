#pragma once

#include <string>
#include <string_view>

#include "wadj/polynomial.hpp"
#include "wadj/weights.hpp"

namespace wadj {

/// phi1: characteristic polynomial of the 3-block quotient of G2(n).
/// phi2_full: that of the 5-block quotient of G4(n) (carries a factor x);
/// phi2: phi2_full / x.
/// phi3: that of the 4-block quotient of G3(n).
/// h_n, h_n1, h_n2, h_n3: the integer polynomials governing the extended
/// spectral radius (h_n1 for G1, h_n2 for G2, h_n3 for the Δ = n-2 graph
/// obtained from K_{2,3} by hanging n-5 pendants on a degree-3 vertex).
enum class NamedPoly { phi1, phi2, phi2_full, phi3, h_n, h_n1, h_n2, h_n3 };

std::string to_string(NamedPoly name);
NamedPoly parse_named_poly(std::string_view text);

/// Smallest n for which the formula is stated.
int named_poly_min_n(NamedPoly name);
bool named_poly_needs_weight(NamedPoly name);

/// Coefficients transcribed from the closed forms. f is required for the
/// phi family and ignored for the h family. Throws std::out_of_range for n
/// below named_poly_min_n and std::invalid_argument when f is missing or,
/// for the exact variant, not rational at the degrees involved.
RationalPolynomial named_polynomial_exact(NamedPoly name, int n, const WeightFunction* f = nullptr);
HighPolynomial named_polynomial(NamedPoly name, int n, const WeightFunction* f = nullptr);

}  // namespace wadj
