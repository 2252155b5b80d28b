#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wadj/families.hpp"
#include "wadj/graph.hpp"
#include "wadj/polynomial.hpp"
#include "wadj/weights.hpp"

namespace wadj {

/// Disjoint nonempty vertex blocks covering 0..n-1, in a fixed order.
struct Partition {
  std::vector<std::vector<Vertex>> blocks;

  std::size_t size() const { return blocks.size(); }
  /// block_of()[v] is the index of the block holding v.
  std::vector<std::size_t> block_of(std::size_t order) const;
  /// Throws std::invalid_argument unless the blocks partition 0..order-1.
  void validate(std::size_t order) const;

  static Partition trivial(std::size_t order);
  static Partition singletons(std::size_t order);
};

/// Blocks of equal degree, highest degree first.
Partition degree_partition(const Graph& g);

/// Coarsest refinement of `seed` in which every vertex of a block has the
/// same weighted row sum into every block of A_f(G). Sub-blocks keep the
/// order in which their first vertex appears.
Partition equitable_refine(const Graph& g, const WeightFunction& f, const Partition& seed);
Partition equitable_refine(const Graph& g, const WeightFunction& f);

/// Block partitions of the named graphs (labels as in make_named):
///   G2(n): centre | four cycle vertices | pendants                 (n >= 6)
///   G4(n): x | two degree-2 vertices | y | pendant on y | pendants on x (n >= 6)
///   G3(n): centre | the adjacent degree-3 pair | degree-2 vertex | pendants (n >= 5)
/// Throws for G1 and the base families.
Partition named_partition(FamilyTag tag, int n);

struct QuotientMatrix {
  std::size_t k{0};
  /// entries[i][j]: average over block i of the row sums into block j
  DenseMatrix<double> entries;
  bool equitable{false};
  /// Present when f is rational at every degree pair that occurs.
  std::optional<DenseMatrix<Rational>> exact;
};

/// Equitability is decided exactly when f is rational on the graph's
/// degrees, otherwise with a 1e-12 relative tolerance.
QuotientMatrix quotient_matrix(const Graph& g, const WeightFunction& f, const Partition& p);

/// Spectral radius of a (generally non-symmetric) quotient matrix: its
/// largest real eigenvalue, found as the largest root of the characteristic
/// polynomial.
double quotient_spectral_radius(const QuotientMatrix& q);

/// All eigenvalues of the quotient (real parts of real roots, ascending,
/// with multiplicity).
std::vector<double> quotient_eigenvalues(const QuotientMatrix& q);

/// Exact characteristic polynomial when the quotient is rational, otherwise
/// the high-precision one built from the double entries.
HighPolynomial quotient_char_poly(const QuotientMatrix& q);

}  // namespace wadj
