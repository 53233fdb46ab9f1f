#include "kirchhoff/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "kirchhoff/error.hpp"
#include "kirchhoff/matrix.hpp"

namespace kirchhoff {

namespace {

std::size_t wordCount(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(wordCount(universe), 0) {}

std::size_t VertexSet::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::subsetOf(const VertexSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < universe_; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

Graph::Graph(std::size_t order)
    : order_(order), stride_(wordCount(order)), bits_(order * wordCount(order), 0) {}

Graph Graph::fromEdges(std::size_t order, std::span<const Edge> edges) {
  Graph g(order);
  for (const auto& [u, v] : edges) {
    require(u < order && v < order,
            "edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    require(u != v, "self-loop at vertex " + std::to_string(u));
    require(g.addEdge(u, v),
            "duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return g;
}

std::size_t Graph::degree(Vertex v) const noexcept {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

bool Graph::addEdge(Vertex u, Vertex v) {
  require(u < order_ && v < order_ && u != v, "invalid edge");
  if (adjacent(u, v)) return false;
  bits_[u * stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
  bits_[v * stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
  ++size_;
  return true;
}

bool Graph::removeEdge(Vertex u, Vertex v) {
  require(u < order_ && v < order_ && u != v, "invalid edge");
  if (!adjacent(u, v)) return false;
  bits_[u * stride_ + (v >> 6)] &= ~(std::uint64_t{1} << (v & 63));
  bits_[v * stride_ + (u >> 6)] &= ~(std::uint64_t{1} << (u & 63));
  --size_;
  return true;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v = u + 1; v < order_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < order_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::size_t Graph::commonNeighbors(Vertex u, Vertex v) const noexcept {
  auto a = row(u);
  auto b = row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < stride_; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::size_t Graph::neighborsIn(Vertex v, const VertexSet& set) const noexcept {
  auto a = row(v);
  auto b = set.words();
  std::size_t c = 0;
  for (std::size_t i = 0; i < stride_; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

std::strong_ordering operator<=>(const Graph& a, const Graph& b) {
  if (auto c = a.order_ <=> b.order_; c != 0) return c;
  return a.bits_ <=> b.bits_;
}

bool SrgParams::consistent() const noexcept {
  if (k + 1 > v) return false;
  return k * (k - lambda - 1) == (v - k - 1) * mu;
}

DegreeStats degreeStats(const Graph& g) {
  DegreeStats s;
  s.degrees.resize(g.order());
  if (g.order() == 0) return s;
  s.minDeg = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::uint64_t d = g.degree(v);
    s.degrees[v] = d;
    s.sum += d;
    s.sumSquares += d * d;
    s.sumCubes += d * d * d;
    s.minDeg = std::min<std::size_t>(s.minDeg, d);
    s.maxDeg = std::max<std::size_t>(s.maxDeg, d);
  }
  return s;
}

bool isConnected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  VertexSet seen(n);
  std::vector<Vertex> frontier{0};
  seen.insert(0);
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex v = frontier.back();
    frontier.pop_back();
    auto r = g.row(v);
    for (std::size_t w = 0; w < r.size(); ++w) {
      std::uint64_t fresh = r[w] & ~seen.words()[w];
      while (fresh) {
        const Vertex u = w * 64 + static_cast<Vertex>(std::countr_zero(fresh));
        fresh &= fresh - 1;
        seen.insert(u);
        frontier.push_back(u);
        ++reached;
      }
    }
  }
  return reached == n;
}

bool isNearlyRegular(const Graph& g) { return degreeStats(g).nearlyRegular(); }

std::uint64_t triangleCount(const Graph& g) {
  // Each triangle u<v<w is seen once, from its lowest edge (u, v), by
  // counting common neighbours above v.
  std::uint64_t total = 0;
  const std::size_t stride = g.wordsPerRow();
  for (Vertex u = 0; u < g.order(); ++u) {
    auto ru = g.row(u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) continue;
      auto rv = g.row(v);
      for (std::size_t w = v >> 6; w < stride; ++w) {
        std::uint64_t common = ru[w] & rv[w];
        if (w == (v >> 6)) {
          const unsigned shift = static_cast<unsigned>((v & 63) + 1);
          common = shift == 64 ? 0 : common & (~std::uint64_t{0} << shift);
        }
        total += static_cast<std::uint64_t>(std::popcount(common));
      }
    }
  }
  return total;
}

BigInt closedWalkCount(const Graph& g, unsigned r) {
  const std::size_t n = g.order();
  Matrix<BigInt> a(n, n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) a(u, v) = g.adjacent(u, v) ? 1 : 0;
  }
  return matrixPowerTrace(a, r);
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.addEdge(u, v);
    }
  }
  return out;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  require(perm.size() == g.order(), "permutation length differs from graph order");
  Graph out(g.order());
  for (const auto& [u, v] : g.edges()) out.addEdge(perm[u], perm[v]);
  return out;
}

std::optional<SrgParams> srgCheck(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) return std::nullopt;
  const auto stats = degreeStats(g);
  if (!stats.regular()) return std::nullopt;
  std::optional<std::size_t> lambda;
  std::optional<std::size_t> mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const std::size_t c = g.commonNeighbors(u, v);
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      if (!slot) {
        slot = c;
      } else if (*slot != c) {
        return std::nullopt;
      }
    }
  }
  // Complete and empty graphs leave one parameter unconstrained; both are
  // conventionally excluded from the strongly regular family.
  if (!lambda || !mu) return std::nullopt;
  SrgParams p{n, stats.maxDeg, *lambda, *mu};
  return p;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonicalForm(a) == canonicalForm(b);
}

}  // namespace kirchhoff
