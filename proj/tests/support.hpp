#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "kirchhoff/bigint.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/matrix.hpp"

namespace testing {

using kirchhoff::BigInt;
using kirchhoff::Graph;
using kirchhoff::Rational;
using kirchhoff::Vertex;

inline Graph randomGraph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.addEdge(u, v);
    }
  }
  return g;
}

/// Random spanning tree (random attachment) plus G(n, p) extra edges.
inline Graph randomConnectedGraph(std::mt19937_64& rng, std::size_t n, double p) {
  Graph g = randomGraph(rng, n, p);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    g.addEdge(pick(rng), v);
  }
  return g;
}

inline std::vector<Vertex> randomPermutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline bool bruteForceIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool same = true;
    for (Vertex u = 0; u < a.order() && same; ++u) {
      for (Vertex v = u + 1; v < a.order() && same; ++v) same = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Counts spanning trees by testing every (order - 1)-edge subset for
/// acyclicity with a union-find.
inline std::uint64_t bruteForceSpanningTrees(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return 1;
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  const std::size_t need = n - 1;
  if (m < need) return 0;
  std::uint64_t count = 0;
  std::vector<bool> chosen(m, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(need), true);
  std::vector<Vertex> parent(n);
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  do {
    std::iota(parent.begin(), parent.end(), Vertex{0});
    bool acyclic = true;
    for (std::size_t i = 0; i < m && acyclic; ++i) {
      if (!chosen[i]) continue;
      const Vertex a = find(edges[i].first);
      const Vertex b = find(edges[i].second);
      if (a == b) acyclic = false;
      parent[a] = b;
    }
    if (acyclic) ++count;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return count;
}

/// Determinant by Gaussian elimination over the rationals.
inline BigInt rationalDeterminant(const kirchhoff::Matrix<std::int64_t>& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(static_cast<long>(m(i, j)));
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

/// Tr(M^r) by repeated naive multiplication.
inline BigInt naiveTracePower(const kirchhoff::Matrix<std::int64_t>& m, unsigned r) {
  const std::size_t n = m.rows();
  std::vector<std::vector<BigInt>> p(n, std::vector<BigInt>(n, 0));
  for (std::size_t i = 0; i < n; ++i) p[i][i] = 1;
  for (unsigned step = 0; step < r; ++step) {
    std::vector<std::vector<BigInt>> q(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (p[i][k] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) q[i][j] += p[i][k] * static_cast<long>(m(k, j));
      }
    }
    p = std::move(q);
  }
  BigInt t = 0;
  for (std::size_t i = 0; i < n; ++i) t += p[i][i];
  return t;
}

inline Graph graphFromOneBased(std::size_t order, std::initializer_list<std::pair<int, int>> pairs) {
  Graph g(order);
  for (auto [u, v] : pairs) g.addEdge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
  return g;
}

}  // namespace testing
