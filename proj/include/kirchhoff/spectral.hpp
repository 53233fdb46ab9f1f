#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kirchhoff/bigint.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/matrix.hpp"

namespace kirchhoff {

/// Default tolerances for the floating-point spectrum.
inline constexpr double kEigenTolerance = 1e-10;
inline constexpr double kSnapTolerance = 1e-6;
inline constexpr double kClusterGapPerVertex = 1e-6;

struct EigenCluster {
  double value = 0.0;
  std::size_t multiplicity = 0;
  bool integral = false;  // value snapped to the nearest integer
};

/// Ascending Laplacian eigenvalues x_0 <= ... <= x_n with tolerance clusters.
struct Spectrum {
  std::vector<double> values;
  std::vector<EigenCluster> clusters;

  /// Sorts the values and forms clusters (gap threshold 1e-6 * count,
  /// integer snapping within 1e-6).
  static Spectrum fromValues(std::vector<double> values);

  std::size_t order() const noexcept { return values.size(); }
  /// Clusters with value above the snap tolerance.
  std::vector<EigenCluster> nonzeroClusters() const;
};

struct TreeCount {
  BigInt value;

  friend bool operator==(const TreeCount& a, const TreeCount& b) { return a.value == b.value; }
  friend bool operator<(const TreeCount& a, const TreeCount& b) { return a.value < b.value; }
};

/// Two distinct nonzero Laplacian eigenvalues x1 > x2 with multiplicities
/// n1 and n - n1, together with the moment data that determine them.
struct TwoEigenvalueModel {
  std::int64_t n = 0;
  std::int64_t r = 0;  // Tr L
  std::int64_t s = 0;  // Tr L^2
  double z = 0.0;      // sqrt(n s - r^2)
  std::int64_t n1 = 0;
  double x1 = 0.0;
  double x2 = 0.0;
};

struct EigenPair {
  double x1 = 0.0;
  double x2 = 0.0;
};

Matrix<std::int64_t> laplacian(const Graph& g);

/// Exact determinant by fraction-free elimination. A zero pivot is replaced
/// by the first lower row with a nonzero entry, with the sign tracked.
BigInt bareissDeterminant(Matrix<BigInt> m);
/// Same, choosing 64-bit storage when a Hadamard bound allows it.
BigInt exactDeterminant(const Matrix<std::int64_t>& m);

/// Spanning-tree count from the principal minor that deletes `deleted`
/// (default: the last vertex). Zero for disconnected graphs.
TreeCount treeCountExact(const Graph& g);
TreeCount treeCountExact(const Graph& g, Vertex deleted);

/// Product of nonzero eigenvalues divided by the order. Throws
/// degenerate-spectrum when some x_i (i >= 1) is not positive.
double treeCountFromSpectrum(const Spectrum& sp, double tol = kEigenTolerance);

/// Exact product of integral clusters divided by the order; empty unless every
/// nonzero cluster snapped to an integer and the division is exact.
std::optional<BigInt> treeCountFromIntegralSpectrum(const Spectrum& sp);

/// Symmetric eigendecomposition of the Laplacian. Throws convergence-failure
/// when the residual max ||Lv - xv|| exceeds tol * ||L||.
Spectrum eigenvalues(const Graph& g, double tol = kEigenTolerance);

/// Tr(L^r) in exact integer arithmetic.
BigInt tracePower(const Graph& g, unsigned r);
/// Tr(L^j) for j = 0..maxR.
std::vector<BigInt> tracePowers(const Graph& g, unsigned maxR);

/// Tr(L^3) == sum d^3 + 3 sum d^2 - 6 triangles.
bool traceCubeIdentityCheck(const Graph& g);

std::optional<TwoEigenvalueModel> detectTwoEigenvalue(const Spectrum& sp);

/// Roots of the moment system n1 x1 + (n - n1) x2 = r,
/// n1 x1^2 + (n - n1) x2^2 = s with x1 >= x2. Real n1 is accepted so the
/// same closed form serves the multiplicity curves.
EigenPair solveMomentSystem(std::int64_t n, std::int64_t r, std::int64_t s, std::int64_t n1);
EigenPair solveMomentPair(double n, double r, double s, double n1);

/// Laplacian spectrum of the complement: x -> order - x on nonzero values.
Spectrum complementSpectrum(const Spectrum& sp, std::size_t order);

}  // namespace kirchhoff
