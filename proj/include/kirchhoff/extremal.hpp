#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/bigint.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/spectral.hpp"

namespace kirchhoff {

/// Largest order enumerated without `allowLargeOrder`.
inline constexpr std::size_t kGeneralEnvelope = 8;
inline constexpr std::size_t kRegularEnvelope = 10;
inline constexpr std::size_t kLabeledEnvelope = 7;

struct FiltrationConfig {
  std::size_t order = 0;
  std::size_t size = 0;
  unsigned maxR = 3;
  bool dedupIsomorphism = true;
  bool regularOnly = false;
  bool allowLargeOrder = false;
};

/// Survivors of one filtration level: the graphs of the previous level that
/// maximise (-1)^{r-1} Tr(L^r).
struct FiltrationLevel {
  unsigned r = 0;
  BigInt extremalValue;
  std::vector<Graph> survivors;
};

struct FiltrationReport {
  FiltrationConfig config;
  std::size_t enumerated = 0;
  std::vector<FiltrationLevel> levels;  // levels[i].r == i + 1
  /// First level whose survivors are pairwise cospectral.
  std::optional<unsigned> stabilizedAt;
  /// Survivors of the last level with the largest spanning-tree count.
  std::vector<Graph> champions;
  BigInt maxTreeCount;
  /// Level 2 equals the nearly regular graphs of level 1.
  bool level2NearlyRegular = false;
  /// Level 3 equals the minimum-triangle graphs of level 2 (only when maxR >= 3).
  std::optional<bool> level3MinTriangles;
};

struct ConjectureReport {
  FiltrationReport filtration;
  /// Canonical graphs attaining the largest tree count over all connected
  /// graphs of this order with at most `size` edges.
  std::vector<Graph> oracleChampions;
  BigInt oracleMaxTreeCount;
  std::size_t oracleSizeOfMax = 0;
  bool oracleIncludesNonRegular = true;
  /// Every final survivor attains the oracle maximum.
  bool survivorsAreChampions = false;
  /// The final survivors are pairwise cospectral.
  bool survivorsCospectral = false;
  /// The final survivors are exactly the oracle champions. Fails whenever
  /// distinct champions tie, e.g. all trees of one order.
  bool exactMatch = false;
  /// Maximum attained at `size`, survivors cospectral and all champions.
  bool holds = false;
};

struct LemmaCurvePoint {
  double x = 0.0;
  double f = 0.0;
  double c = 0.0;
  double fPrime = 0.0;
  double cPrime = 0.0;
};

struct ComplementReport {
  bool complementConnected = false;
  /// (a) max |eig(complement) - mapped eig(g)|.
  double spectrumDeviation = 0.0;
  bool spectrumDuality = false;
  /// (b) both or neither have two distinct nonzero eigenvalues; empty when
  /// the complement is disconnected.
  std::optional<bool> twoEigenvalueEquivalence;
  /// (c)
  bool nearlyRegularEquivalence = false;
  /// (d) triangles(g) + triangles(complement) == C(n+1,3) - n m + sum d^2 / 2.
  std::uint64_t triangles = 0;
  std::uint64_t complementTriangles = 0;
  std::int64_t triangleIdentityValue = 0;
  bool triangleIdentity = false;
  BigInt treeCount;
  BigInt complementTreeCount;
  std::optional<SrgParams> srg;
  std::optional<SrgParams> complementSrg;
};

struct SuperimposeRow {
  std::int64_t copies = 0;
  BigInt treeCount;         // determinant of the multigraph Laplacian minor
  double shiftByCopies = 0.0;       // prod (x_i + x) / order
  double shiftByCopiesOrder = 0.0;  // prod (x_i + x * order) / order
  bool matchesShiftByCopies = false;
  bool matchesShiftByCopiesOrder = false;
};

struct SuperimposeComparisonRow {
  std::int64_t copies = 0;
  BigInt treeCountA;
  BigInt treeCountB;
  int complexityOrder = 0;  // sign of t_A - t_B
};

struct SuperimposeComparison {
  /// Sign of the lexicographic comparison of ((-1)^{j-1} Tr L^j)_{j>=1}.
  int traceOrder = 0;
  std::vector<SuperimposeComparisonRow> rows;
};

/// Connected graphs with the configured order and size, one per isomorphism
/// class (canonical forms, sorted) when dedupIsomorphism, otherwise every
/// labeled graph. Throws envelope-exceeded outside the enumeration envelope.
std::vector<Graph> enumerateGraphs(const FiltrationConfig& cfg);
void forEachGraph(const FiltrationConfig& cfg, const std::function<void(const Graph&)>& visit);

/// Canonical connected graphs on `order` vertices with size in
/// [minSize, maxSize] (and degree `regularDegree` when given), sorted.
std::vector<Graph> enumerateConnected(std::size_t order, std::size_t minSize, std::size_t maxSize,
                                      std::optional<std::size_t> regularDegree = std::nullopt);

FiltrationReport runFiltration(const FiltrationConfig& cfg);
/// Filtration over order (= n + 1) levels against the direct maximisation of
/// exact tree counts.
ConjectureReport verifyConjecture(const FiltrationConfig& cfg);

LemmaCurvePoint lemmaPoint(double n, double r, double s, double x);
std::vector<LemmaCurvePoint> lemmaCurves(std::int64_t n, std::int64_t r, std::int64_t s, std::size_t samples);
/// ln(1+t) - t(2+t) / (2(1+t)) and its derivative -t^2 / (2(1+t)^2).
double auxiliaryG(double t);
double auxiliaryGPrime(double t);

/// (order - 1) divides d(d+1).
bool divisibilityCheck(std::int64_t order, std::int64_t d);

ComplementReport complementDualityCheck(const Graph& g);

/// Exact complexity of g with `copies` superimposed copies of K_order, for
/// copies = 0..xMax, alongside both shifted-spectrum predictions.
std::vector<SuperimposeRow> superimposeDemo(const Graph& g, std::int64_t xMax);
SuperimposeComparison superimposeCompare(const Graph& a, const Graph& b, std::int64_t xMax);

/// Laplacian of g plus `copies` times the Laplacian of the complete graph.
Matrix<std::int64_t> superimposedLaplacian(const Graph& g, std::int64_t copies);

}  // namespace kirchhoff
