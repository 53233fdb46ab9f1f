#include "kirchhoff/families.hpp"

#include <bit>
#include <cmath>
#include <map>

#include "kirchhoff/error.hpp"
#include "kirchhoff/io.hpp"

namespace kirchhoff {

namespace {

const std::map<std::string, FamilyKind>& familyNames() {
  static const std::map<std::string, FamilyKind> names{
      {"cycle", FamilyKind::cycle},
      {"complete", FamilyKind::completeGraph},
      {"complete-bipartite", FamilyKind::completeBipartite},
      {"complete-multipartite", FamilyKind::completeMultipartite},
      {"moebius", FamilyKind::moebiusLadder},
      {"complete-minus-matching", FamilyKind::completeMinusMatching},
      {"petersen", FamilyKind::petersen},
      {"clebsch", FamilyKind::clebsch},
      {"hoffman-singleton", FamilyKind::hoffmanSingleton},
      {"lattice", FamilyKind::lattice},
      {"gkl", FamilyKind::gkl},
      {"doubled", FamilyKind::doubled},
      {"file", FamilyKind::fromFile},
  };
  return names;
}

std::int64_t param(const FamilySpec& spec, std::size_t i) {
  require(i < spec.params.size(),
          familyName(spec.kind) + " needs " + std::to_string(i + 1) + " parameter(s)");
  return spec.params[i];
}

BigInt power(std::int64_t base, std::int64_t exponent) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace

FamilySpec FamilySpec::withIndex(std::int64_t index) const {
  FamilySpec out = *this;
  if (kind == FamilyKind::doubled) {
    require(base != nullptr, "doubled family without a base");
    out.base = std::make_shared<const FamilySpec>(base->withIndex(index));
  } else if (out.params.empty()) {
    out.params.push_back(index);
  } else {
    out.params.front() = index;
  }
  return out;
}

std::string familyName(FamilyKind kind) {
  for (const auto& [name, k] : familyNames()) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<FamilyKind> parseFamilyKind(const std::string& name) {
  auto it = familyNames().find(name);
  if (it == familyNames().end()) return std::nullopt;
  return it->second;
}

Graph cycle(std::int64_t n) {
  require(n >= 3, "cycle needs n >= 3");
  Graph g(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) {
    g.addEdge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return g;
}

Graph completeGraph(std::int64_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  Graph g(static_cast<std::size_t>(n));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) g.addEdge(u, v);
  }
  return g;
}

Graph completeBipartite(std::int64_t a, std::int64_t b) {
  require(a >= 1 && b >= 1, "complete bipartite graph needs positive part sizes");
  Graph g(static_cast<std::size_t>(a + b));
  for (std::int64_t i = 0; i < a; ++i) {
    for (std::int64_t j = 0; j < b; ++j) g.addEdge(static_cast<Vertex>(i), static_cast<Vertex>(a + j));
  }
  return g;
}

Graph completeMultipartite(std::int64_t p, std::int64_t q) {
  require(p >= 2 && q >= 1, "complete multipartite graph needs p >= 2 and q >= 1");
  Graph g(static_cast<std::size_t>(p * q));
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (u / static_cast<Vertex>(q) != v / static_cast<Vertex>(q)) g.addEdge(u, v);
    }
  }
  return g;
}

Graph moebiusLadder(std::int64_t twoN) {
  require(twoN >= 6 && twoN % 2 == 0, "Moebius ladder needs an even vertex count >= 6");
  Graph g = cycle(twoN);
  const std::int64_t n = twoN / 2;
  for (std::int64_t i = 0; i < n; ++i) g.addEdge(static_cast<Vertex>(i), static_cast<Vertex>(i + n));
  return g;
}

Graph completeMinusMatching(std::int64_t order, std::int64_t matchSize) {
  require(order >= 1 && matchSize >= 0 && matchSize <= order / 2,
          "matching size must lie in [0, order/2]");
  Graph g = completeGraph(order);
  for (std::int64_t i = 0; i < matchSize; ++i) {
    g.removeEdge(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
  }
  return g;
}

Graph petersen() {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) pairs.emplace_back(a, b);
  }
  Graph g(pairs.size());
  for (Vertex u = 0; u < pairs.size(); ++u) {
    for (Vertex v = u + 1; v < pairs.size(); ++v) {
      const auto [a, b] = pairs[u];
      const auto [c, d] = pairs[v];
      if (a != c && a != d && b != c && b != d) g.addEdge(u, v);
    }
  }
  return g;
}

Graph clebsch() {
  Graph g(16);
  for (Vertex u = 0; u < 16; ++u) {
    for (Vertex v = u + 1; v < 16; ++v) {
      const int distance = std::popcount(static_cast<unsigned>(u ^ v));
      if (distance == 1 || distance == 4) g.addEdge(u, v);
    }
  }
  return g;
}

Graph hoffmanSingleton() {
  // Pentagon h vertex j -> 5h + j; pentagram i vertex j -> 25 + 5i + j.
  Graph g(50);
  auto pentagon = [](int h, int j) { return static_cast<Vertex>(5 * h + (j + 5) % 5); };
  auto pentagram = [](int i, int j) { return static_cast<Vertex>(25 + 5 * i + (j + 5) % 5); };
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      g.addEdge(pentagon(h, j), pentagon(h, j + 1));
      g.addEdge(pentagram(h, j), pentagram(h, j + 2));
    }
  }
  for (int h = 0; h < 5; ++h) {
    for (int j = 0; j < 5; ++j) {
      for (int i = 0; i < 5; ++i) g.addEdge(pentagon(h, j), pentagram(i, h * i + j));
    }
  }
  return g;
}

Graph lattice(std::int64_t q) {
  require(q >= 2, "lattice graph needs q >= 2");
  const auto n = static_cast<Vertex>(q);
  Graph g(n * n);
  for (Vertex u = 0; u < n * n; ++u) {
    for (Vertex v = u + 1; v < n * n; ++v) {
      if (u / n == v / n || u % n == v % n) g.addEdge(u, v);
    }
  }
  return g;
}

Graph gkl(std::int64_t k, std::int64_t l) {
  require(l >= 0 && k > l, "g(k,l) needs k > l >= 0");
  const std::int64_t side = 2 * k + l;
  // x_i -> i, y_i -> side + i, z -> 2 side (all 0-based).
  auto x = [](std::int64_t i) { return static_cast<Vertex>(i); };
  auto y = [side](std::int64_t i) { return static_cast<Vertex>(side + i); };
  Graph g(static_cast<std::size_t>(2 * side + 1));
  for (std::int64_t i = 0; i < side; ++i) {
    for (std::int64_t j = 0; j < side; ++j) g.addEdge(x(i), y(j));
  }
  for (std::int64_t i = 0; i < k; ++i) {
    for (std::int64_t j = 0; j <= l; ++j) g.removeEdge(x(i), y((i + j) % k));
  }
  const std::int64_t rest = k + l;
  for (std::int64_t i = 0; i < rest; ++i) {
    for (std::int64_t j = 0; j < l; ++j) g.removeEdge(x(k + i), y(k + (i + j) % rest));
  }
  const auto z = static_cast<Vertex>(2 * side);
  for (std::int64_t i = 0; i < k; ++i) {
    g.addEdge(z, x(i));
    g.addEdge(z, y(i));
  }
  return g;
}

Graph doubled(const Graph& h) {
  const std::size_t n = h.order();
  Graph g(2 * n);
  for (const auto& [u, v] : h.edges()) {
    g.addEdge(u, v);
    g.addEdge(n + u, n + v);
  }
  for (Vertex v = 0; v < n; ++v) g.addEdge(v, n + v);
  return g;
}

Graph build(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::cycle: return cycle(param(spec, 0));
    case FamilyKind::completeGraph: return completeGraph(param(spec, 0));
    case FamilyKind::completeBipartite: return completeBipartite(param(spec, 0), param(spec, 1));
    case FamilyKind::completeMultipartite: return completeMultipartite(param(spec, 0), param(spec, 1));
    case FamilyKind::moebiusLadder: return moebiusLadder(param(spec, 0));
    case FamilyKind::completeMinusMatching: return completeMinusMatching(param(spec, 0), param(spec, 1));
    case FamilyKind::petersen: return petersen();
    case FamilyKind::clebsch: return clebsch();
    case FamilyKind::hoffmanSingleton: return hoffmanSingleton();
    case FamilyKind::lattice: return lattice(param(spec, 0));
    case FamilyKind::gkl: return gkl(param(spec, 0), param(spec, 1));
    case FamilyKind::doubled:
      require(spec.base != nullptr, "doubled family without a base");
      return doubled(build(*spec.base));
    case FamilyKind::fromFile: return readGraphFile(spec.path);
  }
  fail("domain-error", "unknown family");
}

BigInt moebiusTrace(std::int64_t j) {
  require(j >= 0, "negative index");
  BigInt previous = 2;
  BigInt current = 4;
  if (j == 0) return previous;
  for (std::int64_t i = 1; i < j; ++i) {
    BigInt next = 4 * current - previous;
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

BigInt moebiusTreeCount(std::int64_t twoN) {
  require(twoN >= 6 && twoN % 2 == 0, "Moebius ladder needs an even vertex count >= 6");
  const std::int64_t n = twoN / 2;
  BigInt total = BigInt(static_cast<long>(n)) * (moebiusTrace(n) + 2);
  return BigInt(total / 2);
}

BigInt multipartiteTreeCount(std::int64_t p, std::int64_t q) {
  require(p >= 2 && q >= 1, "complete multipartite graph needs p >= 2 and q >= 1");
  BigInt product = power(p * q, p - 1) * power(p * q - q, p * (q - 1));
  return BigInt(product / static_cast<long>(p * q));
}

std::optional<BigInt> closedFormTreeCount(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::cycle: return BigInt(static_cast<long>(param(spec, 0)));
    case FamilyKind::completeGraph: {
      const auto n = param(spec, 0);
      return n == 1 ? BigInt(1) : power(n, n - 2);
    }
    case FamilyKind::completeBipartite: {
      const auto a = param(spec, 0);
      const auto b = param(spec, 1);
      return BigInt(power(a, b - 1) * power(b, a - 1));
    }
    case FamilyKind::completeMultipartite: return multipartiteTreeCount(param(spec, 0), param(spec, 1));
    case FamilyKind::moebiusLadder: return moebiusTreeCount(param(spec, 0));
    default: return std::nullopt;
  }
}

SrgVerification verifyTriangleFreeSrg(const Graph& g, const SrgParams& expected) {
  SrgVerification report;
  report.expected = expected;
  report.found = srgCheck(g);
  auto& bad = report.mismatches;
  if (g.order() != expected.v) bad.push_back("order " + std::to_string(g.order()));
  if (!report.found) {
    bad.push_back("not strongly regular");
  } else if (!(*report.found == expected)) {
    const auto& f = *report.found;
    bad.push_back("parameters (" + std::to_string(f.v) + "," + std::to_string(f.k) + "," +
                  std::to_string(f.lambda) + "," + std::to_string(f.mu) + ")");
  }
  report.triangles = triangleCount(g);
  if (report.triangles != 0) bad.push_back("triangles " + std::to_string(report.triangles));
  if (!isConnected(g)) {
    bad.push_back("disconnected");
    return report;
  }

  const auto sp = eigenvalues(g);
  report.clusters = sp.clusters;
  // Laplacian eigenvalues k - theta, k - tau from the adjacency eigenvalues.
  const double lm = static_cast<double>(expected.lambda) - static_cast<double>(expected.mu);
  const double root = std::sqrt(lm * lm + 4.0 * (static_cast<double>(expected.k) - static_cast<double>(expected.mu)));
  const double k = static_cast<double>(expected.k);
  const double v = static_cast<double>(expected.v);
  const double smallLap = k - (lm + root) / 2.0;
  const double largeLap = k - (lm - root) / 2.0;
  const double multSmall = 0.5 * ((v - 1.0) - (2.0 * k + (v - 1.0) * lm) / root);
  const double multLarge = v - 1.0 - multSmall;
  const auto nz = sp.nonzeroClusters();
  if (nz.size() != 2 || std::abs(nz[0].value - smallLap) > kSnapTolerance ||
      std::abs(nz[1].value - largeLap) > kSnapTolerance ||
      std::abs(static_cast<double>(nz[0].multiplicity) - multSmall) > 1e-6 ||
      std::abs(static_cast<double>(nz[1].multiplicity) - multLarge) > 1e-6) {
    bad.push_back("Laplacian spectrum differs from the parameter prediction");
  }

  report.treeCountExact = treeCountExact(g).value;
  report.treeCountFromClusters = treeCountFromIntegralSpectrum(sp);
  report.treeCountSpectral = treeCountFromSpectrum(sp);
  if (report.treeCountFromClusters && *report.treeCountFromClusters != report.treeCountExact) {
    bad.push_back("cluster product differs from the determinant");
  }
  const double exact = report.treeCountExact.get_d();
  if (std::abs(report.treeCountSpectral - exact) > 1e-6 * exact) {
    bad.push_back("spectral tree count differs from the determinant");
  }
  return report;
}

}  // namespace kirchhoff
