#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kirchhoff/bigint.hpp"

namespace kirchhoff {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Set of vertex indices packed into 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Vertex v) const noexcept { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void insert(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  std::size_t count() const noexcept;
  bool full() const noexcept { return count() == universe_; }
  bool subsetOf(const VertexSet& other) const noexcept;
  std::vector<Vertex> members() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..order-1 with bitset adjacency rows.
///
/// Symmetry and irreflexivity are maintained by every mutator, so a Graph is
/// always a valid simple graph. Comparison is lexicographic on (order, rows),
/// which makes canonical forms directly sortable.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t order);

  /// Builds a graph from 0-based edges; rejects loops, duplicates and
  /// out-of-range endpoints with a domain-error.
  static Graph fromEdges(std::size_t order, std::span<const Edge> edges);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return size_; }
  std::size_t wordsPerRow() const noexcept { return stride_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + v * stride_, stride_};
  }
  std::size_t degree(Vertex v) const noexcept;

  /// Returns false when the edge was already present.
  bool addEdge(Vertex u, Vertex v);
  bool removeEdge(Vertex u, Vertex v);

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  /// |N(u) ∩ N(v)|.
  std::size_t commonNeighbors(Vertex u, Vertex v) const noexcept;
  /// |N(v) ∩ set|.
  std::size_t neighborsIn(Vertex v, const VertexSet& set) const noexcept;

  friend bool operator==(const Graph&, const Graph&) = default;
  friend std::strong_ordering operator<=>(const Graph& a, const Graph& b);

 private:
  std::size_t order_ = 0;
  std::size_t stride_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct DegreeStats {
  std::vector<std::size_t> degrees;
  std::uint64_t sum = 0;
  std::uint64_t sumSquares = 0;
  std::uint64_t sumCubes = 0;
  std::size_t minDeg = 0;
  std::size_t maxDeg = 0;

  bool nearlyRegular() const noexcept { return maxDeg - minDeg <= 1; }
  bool regular() const noexcept { return maxDeg == minDeg; }
};

struct SrgParams {
  std::size_t v = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t mu = 0;

  /// k(k - lambda - 1) == (v - k - 1) mu
  bool consistent() const noexcept;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

DegreeStats degreeStats(const Graph& g);
bool isConnected(const Graph& g);
bool isNearlyRegular(const Graph& g);

/// Number of triangles, each counted once.
std::uint64_t triangleCount(const Graph& g);

/// Tr(A^r): closed walks of length r, exact.
BigInt closedWalkCount(const Graph& g, unsigned r);

Graph complement(const Graph& g);

/// Image of g under the relabeling v -> perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// Parameters (v, k, lambda, mu) when g is strongly regular.
std::optional<SrgParams> srgCheck(const Graph& g);

/// Canonical representative of the isomorphism class of g:
/// canonicalForm(a) == canonicalForm(b) iff a and b are isomorphic.
Graph canonicalForm(const Graph& g);

/// Canonical labeling: position i of the result holds the original vertex
/// that becomes vertex i of canonicalForm(g).
std::vector<Vertex> canonicalLabeling(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace kirchhoff
