#include "kirchhoff/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "kirchhoff/error.hpp"

namespace kirchhoff {

namespace {

void checkEnvelope(const FiltrationConfig& cfg) {
  require(cfg.order >= 1, "order must be positive");
  require(cfg.size <= cfg.order * (cfg.order - 1) / 2, "size exceeds C(order, 2)");
  require(cfg.maxR >= 1, "maxR must be at least 1");
  if (cfg.allowLargeOrder) return;
  const std::size_t limit = !cfg.dedupIsomorphism ? kLabeledEnvelope
                            : cfg.regularOnly     ? kRegularEnvelope
                                                  : kGeneralEnvelope;
  if (cfg.order > limit) {
    fail("envelope-exceeded", "order " + std::to_string(cfg.order) + " is above the enumeration envelope " +
                                  std::to_string(limit) + " (pass allowLargeOrder to override)");
  }
}

std::optional<std::size_t> regularDegree(const FiltrationConfig& cfg) {
  if (!cfg.regularOnly) return std::nullopt;
  require((2 * cfg.size) % cfg.order == 0,
          "no regular graph: 2 * size is not divisible by order");
  return 2 * cfg.size / cfg.order;
}

Graph extend(const Graph& g, std::uint64_t mask) {
  const std::size_t k = g.order();
  Graph h(k + 1);
  for (const auto& [u, v] : g.edges()) h.addEdge(u, v);
  for (Vertex v = 0; v < k; ++v) {
    if ((mask >> v) & 1U) h.addEdge(v, k);
  }
  return h;
}

// Every connected graph has a vertex whose removal leaves it connected, so
// growing connected graphs one vertex at a time and keeping one canonical
// representative per class reaches every class of the target order.
std::vector<Graph> growConnected(std::size_t order, std::size_t minSize, std::size_t maxSize,
                                 std::optional<std::size_t> degree) {
  require(order <= 63, "vertex-extension enumeration supports orders below 64");
  std::vector<Graph> level{Graph(1)};
  for (std::size_t k = 1; k < order; ++k) {
    const std::size_t future = order - k - 1;  // vertices still to come after this one
    std::size_t futureEdges = 0;
    for (std::size_t j = k + 1; j < order; ++j) futureEdges += j;
    const bool last = k + 1 == order;
    std::vector<Graph> next;
    std::vector<std::size_t> deg(k);
    for (const auto& g : level) {
      const std::size_t e = g.size();
      if (e > maxSize) continue;
      for (Vertex v = 0; v < k; ++v) deg[v] = g.degree(v);
      const std::size_t lowAdd = minSize > e + futureEdges ? minSize - e - futureEdges : 1;
      const std::size_t highAdd = std::min(maxSize - e, k);
      if (lowAdd > highAdd) continue;
      std::uint64_t capped = 0;  // vertices already at the degree cap
      if (degree) {
        for (Vertex v = 0; v < k; ++v) {
          if (deg[v] >= *degree) capped |= std::uint64_t{1} << v;
        }
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
        const auto added = static_cast<std::size_t>(std::popcount(mask));
        if (added < std::max<std::size_t>(lowAdd, 1) || added > highAdd) continue;
        if (degree) {
          if (mask & capped || added > *degree) continue;
          // Every vertex must still be able to reach the degree from the
          // vertices yet to be added.
          std::size_t deficit = *degree - added;
          bool feasible = *degree - added <= future;
          for (Vertex v = 0; v < k && feasible; ++v) {
            const std::size_t d = deg[v] + ((mask >> v) & 1U);
            if (*degree - d > future) feasible = false;
            deficit += *degree - d;
          }
          if (!feasible) continue;
          const std::size_t supply = future * *degree;
          if (deficit > supply || (supply - deficit) % 2 != 0 ||
              supply - deficit > future * (future - (future > 0 ? 1 : 0))) {
            continue;
          }
        }
        next.push_back(canonicalForm(extend(g, mask)));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    if (last) {
      std::erase_if(next, [&](const Graph& g) { return g.size() < minSize || g.size() > maxSize; });
    }
    level = std::move(next);
  }
  if (order == 1) {
    std::erase_if(level, [&](const Graph& g) { return g.size() < minSize || g.size() > maxSize; });
  }
  return level;
}

// Labeled enumeration by include/exclude decisions over the candidate edges.
void labeledEdges(const FiltrationConfig& cfg, std::optional<std::size_t> degree,
                  const std::function<void(const Graph&)>& visit) {
  const std::size_t n = cfg.order;
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) candidates.emplace_back(u, v);
  }
  Graph g(n);
  std::vector<std::size_t> deg(n, 0);
  std::function<void(std::size_t)> recurse = [&](std::size_t index) {
    if (g.size() == cfg.size) {
      if (!isConnected(g)) return;
      if (degree && std::any_of(deg.begin(), deg.end(), [&](std::size_t d) { return d != *degree; })) return;
      visit(g);
      return;
    }
    if (index == candidates.size() || g.size() + (candidates.size() - index) < cfg.size) return;
    const auto [u, v] = candidates[index];
    if (!degree || (deg[u] < *degree && deg[v] < *degree)) {
      g.addEdge(u, v);
      ++deg[u];
      ++deg[v];
      recurse(index + 1);
      g.removeEdge(u, v);
      --deg[u];
      --deg[v];
    }
    recurse(index + 1);
  };
  recurse(0);
}

struct Candidate {
  Graph graph;
  std::vector<BigInt> traces;  // Tr(L^j), j = 0..depth
  std::uint64_t triangles = 0;
  bool nearlyRegular = false;
};

bool cospectral(const Candidate& a, const Candidate& b) { return a.traces == b.traces; }

BigInt signedTrace(const Candidate& c, unsigned r) {
  return r % 2 == 1 ? c.traces[r] : BigInt(-c.traces[r]);
}

FiltrationReport filtrate(const FiltrationConfig& cfg, std::vector<Graph> graphs, unsigned levels) {
  FiltrationReport report;
  report.config = cfg;
  report.enumerated = graphs.size();
  if (graphs.empty()) {
    fail("domain-error", "no connected graph with order " + std::to_string(cfg.order) + " and size " +
                             std::to_string(cfg.size) + (cfg.regularOnly ? " (regular)" : ""));
  }
  // Power sums up to the order determine the spectrum, so equal trace
  // vectors of that length is an exact cospectrality test.
  const unsigned depth = std::max<unsigned>(levels, static_cast<unsigned>(cfg.order));
  std::vector<Candidate> pool;
  pool.reserve(graphs.size());
  for (auto& g : graphs) {
    Candidate c;
    c.traces = tracePowers(g, depth);
    c.triangles = triangleCount(g);
    c.nearlyRegular = isNearlyRegular(g);
    c.graph = std::move(g);
    pool.push_back(std::move(c));
  }

  std::vector<std::size_t> alive(pool.size());
  for (std::size_t i = 0; i < alive.size(); ++i) alive[i] = i;
  std::vector<std::size_t> level2;
  for (unsigned r = 1; r <= levels; ++r) {
    BigInt best = signedTrace(pool[alive.front()], r);
    for (auto i : alive) best = std::max(best, BigInt(signedTrace(pool[i], r)));
    std::erase_if(alive, [&](std::size_t i) { return signedTrace(pool[i], r) != best; });
    FiltrationLevel level;
    level.r = r;
    level.extremalValue = best;
    for (auto i : alive) level.survivors.push_back(pool[i].graph);
    report.levels.push_back(std::move(level));

    const bool allCospectral = std::all_of(alive.begin(), alive.end(),
                                           [&](std::size_t i) { return cospectral(pool[i], pool[alive.front()]); });
    if (allCospectral && !report.stabilizedAt) report.stabilizedAt = r;

    if (r == 2) {
      level2 = alive;
      std::vector<std::size_t> nearly;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].nearlyRegular) nearly.push_back(i);
      }
      report.level2NearlyRegular = nearly == alive;
    }
    if (r == 3) {
      std::uint64_t fewest = pool[level2.front()].triangles;
      for (auto i : level2) fewest = std::min(fewest, pool[i].triangles);
      std::vector<std::size_t> minimal;
      for (auto i : level2) {
        if (pool[i].triangles == fewest) minimal.push_back(i);
      }
      report.level3MinTriangles = minimal == alive;
    }
  }
  if (levels < 2) {
    report.level2NearlyRegular = std::all_of(alive.begin(), alive.end(), [&](std::size_t i) {
      return pool[i].nearlyRegular;
    });
  }

  for (auto i : alive) {
    const BigInt t = treeCountExact(pool[i].graph).value;
    if (report.champions.empty() || t > report.maxTreeCount) {
      report.champions.clear();
      report.maxTreeCount = t;
    }
    if (t == report.maxTreeCount) report.champions.push_back(pool[i].graph);
  }
  return report;
}

std::vector<Graph> collect(const FiltrationConfig& cfg) {
  std::vector<Graph> out;
  forEachGraph(cfg, [&](const Graph& g) { out.push_back(g); });
  return out;
}

}  // namespace

std::vector<Graph> enumerateConnected(std::size_t order, std::size_t minSize, std::size_t maxSize,
                                      std::optional<std::size_t> regularDegree) {
  require(order >= 1, "order must be positive");
  if (minSize > maxSize) return {};
  return growConnected(order, minSize, maxSize, regularDegree);
}

void forEachGraph(const FiltrationConfig& cfg, const std::function<void(const Graph&)>& visit) {
  checkEnvelope(cfg);
  const auto degree = regularDegree(cfg);
  if (cfg.dedupIsomorphism) {
    for (const auto& g : growConnected(cfg.order, cfg.size, cfg.size, degree)) visit(g);
  } else {
    labeledEdges(cfg, degree, visit);
  }
}

std::vector<Graph> enumerateGraphs(const FiltrationConfig& cfg) { return collect(cfg); }

FiltrationReport runFiltration(const FiltrationConfig& cfg) {
  checkEnvelope(cfg);
  return filtrate(cfg, collect(cfg), cfg.maxR);
}

ConjectureReport verifyConjecture(const FiltrationConfig& cfg) {
  checkEnvelope(cfg);
  ConjectureReport report;
  const unsigned levels = std::max<unsigned>(cfg.maxR, static_cast<unsigned>(cfg.order));
  report.filtration = filtrate(cfg, collect(cfg), levels);

  // Oracle: direct maximisation of the exact tree count, no traces involved.
  // Beyond the general envelope a regular-only run compares against regular
  // graphs only, and the report says so.
  const bool fullOracle = !cfg.regularOnly || cfg.order <= kGeneralEnvelope || cfg.allowLargeOrder;
  report.oracleIncludesNonRegular = fullOracle;
  const std::size_t minSize = cfg.order - 1;
  std::vector<Graph> pool =
      fullOracle ? enumerateConnected(cfg.order, minSize, cfg.size)
                 : enumerateConnected(cfg.order, cfg.size, cfg.size, regularDegree(cfg));
  for (const auto& g : pool) {
    const BigInt t = treeCountExact(g).value;
    if (report.oracleChampions.empty() || t > report.oracleMaxTreeCount) {
      report.oracleChampions.clear();
      report.oracleMaxTreeCount = t;
      report.oracleSizeOfMax = g.size();
    }
    if (t == report.oracleMaxTreeCount) {
      report.oracleChampions.push_back(g);
      report.oracleSizeOfMax = std::min(report.oracleSizeOfMax, g.size());
    }
  }
  std::sort(report.oracleChampions.begin(), report.oracleChampions.end());

  std::vector<Graph> survivors = report.filtration.levels.back().survivors;
  if (!cfg.dedupIsomorphism) {
    for (auto& g : survivors) g = canonicalForm(g);
  }
  std::sort(survivors.begin(), survivors.end());
  survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
  report.survivorsAreChampions = std::all_of(survivors.begin(), survivors.end(), [&](const Graph& g) {
    return std::binary_search(report.oracleChampions.begin(), report.oracleChampions.end(), g);
  });
  report.survivorsCospectral = report.filtration.stabilizedAt.has_value();
  report.exactMatch = survivors == report.oracleChampions;
  report.holds = report.oracleSizeOfMax == cfg.size && report.survivorsAreChampions && report.survivorsCospectral;
  return report;
}

LemmaCurvePoint lemmaPoint(double n, double r, double s, double x) {
  const double z = std::sqrt(n * s - r * r);
  const auto [x1, x2] = solveMomentPair(n, r, s, x);
  if (!(x2 > 0.0)) {
    fail("domain-error", "smaller eigenvalue x2 = " + std::to_string(x2) + " is not positive at x = " + std::to_string(x));
  }
  const double y = std::sqrt(x * (n - x));
  const double yPrime = (n - 2.0 * x) / (2.0 * y);
  LemmaCurvePoint p;
  p.x = x;
  p.f = x * std::log(x1) + (n - x) * std::log(x2);
  p.fPrime = std::log(x1 / x2) - 0.5 * (x1 - x2) * (1.0 / x1 + 1.0 / x2);
  p.c = n * r * r * r + 3.0 * n * r * z * z + 2.0 * n * z * z * z * yPrime;
  p.cPrime = -(n * n * n * z * z * z) / (2.0 * y * y * y);
  return p;
}

std::vector<LemmaCurvePoint> lemmaCurves(std::int64_t n, std::int64_t r, std::int64_t s, std::size_t samples) {
  require(samples >= 3, "at least 3 samples are needed");
  require(n >= 3, "n must be at least 3 for a nonempty multiplicity interval");
  const double nn = static_cast<double>(n);
  const double rr = static_cast<double>(r);
  const double ss = static_cast<double>(s);
  require(nn * ss > rr * rr, "n*s must exceed r^2 (z > 0)");
  constexpr double eps = 1e-6;
  const double lo = 1.0 + eps;
  const double hi = nn - 1.0 - eps;
  std::vector<LemmaCurvePoint> out;
  out.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
    out.push_back(lemmaPoint(nn, rr, ss, x));
  }
  return out;
}

double auxiliaryG(double t) { return std::log1p(t) - 0.5 * t * (2.0 + t) / (1.0 + t); }

double auxiliaryGPrime(double t) { return -t * t / (2.0 * (1.0 + t) * (1.0 + t)); }

bool divisibilityCheck(std::int64_t order, std::int64_t d) {
  const std::int64_t n = order - 1;
  require(n >= 1, "order must be at least 2");
  return (d * (d + 1)) % n == 0;
}

ComplementReport complementDualityCheck(const Graph& g) {
  ComplementReport report;
  const Graph h = complement(g);
  const std::size_t order = g.order();
  report.complementConnected = isConnected(h);

  const auto sp = eigenvalues(g);
  const auto spBar = eigenvalues(h);
  const auto mapped = complementSpectrum(sp, order);
  for (std::size_t i = 0; i < order; ++i) {
    report.spectrumDeviation = std::max(report.spectrumDeviation, std::abs(mapped.values[i] - spBar.values[i]));
  }
  report.spectrumDuality = report.spectrumDeviation <= 1e-8;

  if (isConnected(g) && report.complementConnected) {
    report.twoEigenvalueEquivalence = detectTwoEigenvalue(sp).has_value() == detectTwoEigenvalue(spBar).has_value();
  }
  report.nearlyRegularEquivalence = isNearlyRegular(g) == isNearlyRegular(h);

  const auto stats = degreeStats(g);
  report.triangles = triangleCount(g);
  report.complementTriangles = triangleCount(h);
  const auto n = static_cast<std::int64_t>(order) - 1;
  const auto m = static_cast<std::int64_t>(g.size());
  const auto choose3 = static_cast<std::int64_t>(order * (order - 1) * (order - 2) / 6);
  report.triangleIdentityValue = choose3 - n * m + static_cast<std::int64_t>(stats.sumSquares / 2);
  report.triangleIdentity =
      stats.sumSquares % 2 == 0 &&
      static_cast<std::int64_t>(report.triangles + report.complementTriangles) == report.triangleIdentityValue;

  report.treeCount = treeCountExact(g).value;
  report.complementTreeCount = treeCountExact(h).value;
  report.srg = srgCheck(g);
  report.complementSrg = srgCheck(h);
  return report;
}

Matrix<std::int64_t> superimposedLaplacian(const Graph& g, std::int64_t copies) {
  auto l = laplacian(g);
  const auto order = static_cast<std::int64_t>(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (std::size_t j = 0; j < g.order(); ++j) l(i, j) += copies * (i == j ? order - 1 : -1);
  }
  return l;
}

std::vector<SuperimposeRow> superimposeDemo(const Graph& g, std::int64_t xMax) {
  require(g.order() >= 2, "superimposition needs at least two vertices");
  require(xMax >= 0, "xMax must be nonnegative");
  const auto sp = eigenvalues(g);
  const double order = static_cast<double>(g.order());
  std::vector<SuperimposeRow> rows;
  for (std::int64_t x = 0; x <= xMax; ++x) {
    SuperimposeRow row;
    row.copies = x;
    row.treeCount = exactDeterminant(superimposedLaplacian(g, x).withoutRowCol(g.order() - 1));
    long double byCopies = 1.0L;
    long double byCopiesOrder = 1.0L;
    for (std::size_t i = 1; i < sp.values.size(); ++i) {
      byCopies *= static_cast<long double>(sp.values[i]) + static_cast<long double>(x);
      byCopiesOrder *= static_cast<long double>(sp.values[i]) + static_cast<long double>(x) * order;
    }
    row.shiftByCopies = static_cast<double>(byCopies / order);
    row.shiftByCopiesOrder = static_cast<double>(byCopiesOrder / order);
    const double exact = row.treeCount.get_d();
    auto close = [&](double v) { return std::abs(v - exact) <= 1e-6 * std::max(1.0, exact); };
    row.matchesShiftByCopies = close(row.shiftByCopies);
    row.matchesShiftByCopiesOrder = close(row.shiftByCopiesOrder);
    rows.push_back(std::move(row));
  }
  return rows;
}

SuperimposeComparison superimposeCompare(const Graph& a, const Graph& b, std::int64_t xMax) {
  require(a.order() == b.order(), "compared graphs must share the order");
  require(xMax >= 0, "xMax must be nonnegative");
  SuperimposeComparison out;
  const auto depth = static_cast<unsigned>(a.order());
  const auto ta = tracePowers(a, depth);
  const auto tb = tracePowers(b, depth);
  for (unsigned j = 1; j <= depth && out.traceOrder == 0; ++j) {
    const int c = cmp(ta[j], tb[j]);
    out.traceOrder = j % 2 == 1 ? (c > 0) - (c < 0) : (c < 0) - (c > 0);
  }
  for (std::int64_t x = 0; x <= xMax; ++x) {
    SuperimposeComparisonRow row;
    row.copies = x;
    row.treeCountA = exactDeterminant(superimposedLaplacian(a, x).withoutRowCol(a.order() - 1));
    row.treeCountB = exactDeterminant(superimposedLaplacian(b, x).withoutRowCol(b.order() - 1));
    const int c = cmp(row.treeCountA, row.treeCountB);
    row.complexityOrder = (c > 0) - (c < 0);
    out.rows.push_back(std::move(row));
  }
  return out;
}

}  // namespace kirchhoff
