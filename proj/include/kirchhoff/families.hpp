#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/bigint.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/spectral.hpp"

namespace kirchhoff {

enum class FamilyKind {
  cycle,
  completeGraph,
  completeBipartite,
  completeMultipartite,
  moebiusLadder,
  completeMinusMatching,
  petersen,
  clebsch,
  hoffmanSingleton,
  lattice,
  gkl,
  doubled,
  fromFile,
};

/// A named family member. `params` are interpreted per kind:
/// cycle/completeGraph {n}; completeBipartite {a, b}; completeMultipartite
/// {p, q}; moebiusLadder {twoN}; completeMinusMatching {order, matchSize};
/// lattice {q}; gkl {k, l}; doubled uses `base`; fromFile uses `path`.
struct FamilySpec {
  FamilyKind kind = FamilyKind::cycle;
  std::vector<std::int64_t> params;
  std::string path;
  std::shared_ptr<const FamilySpec> base;

  /// Same spec with its leading parameter (or the base's, for doubled)
  /// replaced by `index`.
  FamilySpec withIndex(std::int64_t index) const;
};

std::string familyName(FamilyKind kind);
std::optional<FamilyKind> parseFamilyKind(const std::string& name);

Graph build(const FamilySpec& spec);

/// Exact spanning-tree count from the family's closed form, when it has one.
std::optional<BigInt> closedFormTreeCount(const FamilySpec& spec);

Graph cycle(std::int64_t n);
Graph completeGraph(std::int64_t n);
Graph completeBipartite(std::int64_t a, std::int64_t b);
Graph completeMultipartite(std::int64_t p, std::int64_t q);
/// Cycle on twoN vertices plus the long diagonals i -- i + twoN/2.
Graph moebiusLadder(std::int64_t twoN);
/// K_order minus the matching {0-1, 2-3, ...} of matchSize edges.
Graph completeMinusMatching(std::int64_t order, std::int64_t matchSize);
/// Kneser graph K(5,2).
Graph petersen();
/// Folded 5-cube: 4-bit words adjacent at Hamming distance 1 or 4.
Graph clebsch();
/// Five pentagons and five pentagrams (Robertson's construction).
Graph hoffmanSingleton();
/// Rook's graph K_q x K_q; q = 3 gives the 9-vertex lattice graph.
Graph lattice(std::int64_t q);
/// Regular graph of degree 2k on 4k + 2l + 1 vertices with k(k-l-1)
/// triangles, built from K_{2k+l,2k+l} with cyclic-shift factors removed.
Graph gkl(std::int64_t k, std::int64_t l);
/// Two copies of h joined by the identity perfect matching.
Graph doubled(const Graph& h);

/// (2+sqrt3)^j + (2-sqrt3)^j via u_{j+1} = 4u_j - u_{j-1}.
BigInt moebiusTrace(std::int64_t j);
/// Closed-form t(M_twoN) = (n/2) [(2+sqrt3)^n + (2-sqrt3)^n + 2], n = twoN/2.
BigInt moebiusTreeCount(std::int64_t twoN);
/// Spectrum {0, (pq)^(p-1), (pq-q)^(p(q-1))}, so t = (pq)^(p-1) (pq-q)^(p(q-1)) / (pq).
BigInt multipartiteTreeCount(std::int64_t p, std::int64_t q);

struct SrgVerification {
  SrgParams expected;
  std::optional<SrgParams> found;
  std::uint64_t triangles = 0;
  std::vector<EigenCluster> clusters;
  BigInt treeCountExact;
  std::optional<BigInt> treeCountFromClusters;
  double treeCountSpectral = 0.0;
  std::vector<std::string> mismatches;

  bool pass() const noexcept { return mismatches.empty(); }
};

/// Structural verification of a triangle-free strongly regular graph. Each
/// failed expectation is recorded in `mismatches`; nothing is thrown.
SrgVerification verifyTriangleFreeSrg(const Graph& g, const SrgParams& expected);

}  // namespace kirchhoff
