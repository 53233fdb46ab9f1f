#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <map>
#include <set>

#include "kirchhoff/error.hpp"
#include "kirchhoff/extremal.hpp"
#include "kirchhoff/families.hpp"
#include "kirchhoff/io.hpp"
#include "support.hpp"

using namespace kirchhoff;

namespace {

std::string errorKind(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

FiltrationConfig config(std::size_t order, std::size_t size) {
  FiltrationConfig cfg;
  cfg.order = order;
  cfg.size = size;
  return cfg;
}

/// Connected labeled graphs of each size, by scanning every edge subset.
std::map<std::size_t, std::uint64_t> labeledConnectedBySize(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::map<std::size_t, std::uint64_t> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) g.addEdge(pairs[i].first, pairs[i].second);
    if (isConnected(g)) ++out[g.size()];
  }
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("connected graph counts by order") {
    // Connected unlabeled graphs on 1..8 vertices.
    const std::vector<std::size_t> known{1, 1, 2, 6, 21, 112, 853, 11117};
    for (std::size_t n = 1; n <= 8; ++n) {
      CHECK(enumerateConnected(n, 0, n * (n - 1) / 2).size() == known[n - 1]);
    }
  }

  TEST_CASE("connected graphs on 6 vertices by size") {
    const std::vector<std::size_t> known{6, 13, 19, 22, 20, 14, 9, 5, 2, 1, 1};  // sizes 5..15
    for (std::size_t m = 5; m <= 15; ++m) CHECK(enumerateGraphs(config(6, m)).size() == known[m - 5]);
  }

  TEST_CASE("regular enumeration") {
    FiltrationConfig cfg = config(10, 15);
    cfg.regularOnly = true;
    CHECK(enumerateGraphs(cfg).size() == 19);  // connected cubic graphs on 10 vertices
    cfg = config(9, 18);
    cfg.regularOnly = true;
    CHECK(enumerateGraphs(cfg).size() == 16);  // connected quartic graphs on 9 vertices
    cfg = config(8, 12);
    cfg.regularOnly = true;
    CHECK(enumerateGraphs(cfg).size() == 5);
    cfg = config(7, 10);
    cfg.regularOnly = true;
    CHECK(errorKind([&] { enumerateGraphs(cfg); }) == "domain-error");
  }

  TEST_CASE("regular enumeration matches filtering the general enumeration") {
    for (std::size_t n = 4; n <= 8; ++n) {
      for (std::size_t d = 2; d < n; ++d) {
        if ((n * d) % 2 != 0) continue;
        FiltrationConfig cfg = config(n, n * d / 2);
        auto all = enumerateGraphs(cfg);
        std::erase_if(all, [](const Graph& g) { return !degreeStats(g).regular(); });
        cfg.regularOnly = true;
        CHECK(enumerateGraphs(cfg) == all);
      }
    }
  }

  TEST_CASE("labeled enumeration agrees with subset scanning and with dedup") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const auto counts = labeledConnectedBySize(n);
      for (const auto& [m, count] : counts) {
        FiltrationConfig cfg = config(n, m);
        cfg.dedupIsomorphism = false;
        std::uint64_t seen = 0;
        std::set<Graph> classes;
        forEachGraph(cfg, [&](const Graph& g) {
          ++seen;
          classes.insert(canonicalForm(g));
        });
        CHECK(seen == count);
        cfg.dedupIsomorphism = true;
        const auto dedup = enumerateGraphs(cfg);
        CHECK(std::vector<Graph>(classes.begin(), classes.end()) == dedup);
      }
    }
  }

  TEST_CASE("envelopes") {
    CHECK(errorKind([] { enumerateGraphs(config(9, 12)); }) == "envelope-exceeded");
    FiltrationConfig labeled = config(8, 10);
    labeled.dedupIsomorphism = false;
    CHECK(errorKind([&] { enumerateGraphs(labeled); }) == "envelope-exceeded");
    FiltrationConfig regular = config(11, 22);
    regular.regularOnly = true;
    CHECK(errorKind([&] { enumerateGraphs(regular); }) == "envelope-exceeded");
    CHECK(errorKind([] { enumerateGraphs(config(4, 7)); }) == "domain-error");
    CHECK(enumerateGraphs(config(5, 3)).empty());
  }
}

TEST_SUITE("filtration") {
  TEST_CASE("nine-vertex quartic champion") {
    FiltrationConfig cfg = config(9, 18);
    cfg.regularOnly = true;
    const auto r = runFiltration(cfg);
    REQUIRE(r.champions.size() == 1);
    CHECK(r.maxTreeCount == 12480);
    CHECK(triangleCount(r.champions.front()) == 2);
    const auto path = std::filesystem::path(KIRCHHOFF_FIXTURE_DIR) / "nine_vertex_champion.edges";
    CHECK(isomorphic(r.champions.front(), readGraphFile(path.string())));
    CHECK(isomorphic(r.champions.front(), gkl(2, 0)));
  }

  TEST_CASE("level invariants on every enumerated case") {
    for (std::size_t n = 3; n <= 7; ++n) {
      for (std::size_t m = n - 1; m <= n * (n - 1) / 2; ++m) {
        FiltrationConfig cfg = config(n, m);
        cfg.maxR = 4;
        const auto all = enumerateGraphs(cfg);
        const auto r = runFiltration(cfg);
        CHECK(r.enumerated == all.size());
        CHECK(r.level2NearlyRegular);
        REQUIRE(r.level3MinTriangles.has_value());
        CHECK(*r.level3MinTriangles);
        // Level 1 keeps everything: Tr L = 2m.
        CHECK(r.levels[0].survivors.size() == all.size());
        CHECK(r.levels[0].extremalValue == 2 * m);
        for (std::size_t i = 1; i < r.levels.size(); ++i) {
          for (const auto& g : r.levels[i].survivors) {
            CHECK(std::find(r.levels[i - 1].survivors.begin(), r.levels[i - 1].survivors.end(), g) !=
                  r.levels[i - 1].survivors.end());
          }
        }
      }
    }
  }

  TEST_CASE("regular filtration minimises closed walks") {
    FiltrationConfig cfg = config(10, 15);
    cfg.regularOnly = true;
    cfg.maxR = 6;
    const auto r = runFiltration(cfg);
    const auto all = enumerateGraphs(cfg);
    std::vector<Graph> expected = all;
    for (unsigned k = 3; k <= 6; ++k) {
      BigInt best = closedWalkCount(expected.front(), k);
      for (const auto& g : expected) best = std::min(best, closedWalkCount(g, k));
      std::erase_if(expected, [&](const Graph& g) { return closedWalkCount(g, k) != best; });
    }
    CHECK(r.levels.back().survivors == expected);
  }
}

TEST_SUITE("conjecture") {
  TEST_CASE("direct maximisation agrees for small orders") {
    for (std::size_t n = 1; n <= 7; ++n) {
      const std::size_t low = n > 1 ? n - 1 : 0;
      for (std::size_t m = low; m <= n * (n - 1) / 2; ++m) {
        const auto r = verifyConjecture(config(n, m));
        CHECK_MESSAGE(r.holds, "order " << n << " size " << m);
        CHECK(r.oracleSizeOfMax == m);
        CHECK(r.oracleIncludesNonRegular);
        // Ties among champions only occur for trees.
        CHECK(r.exactMatch == (m != n - 1 || n <= 3));
      }
    }
  }

  TEST_CASE("complete graph is trivially extremal") {
    const auto r = verifyConjecture(config(5, 10));
    CHECK(r.holds);
    CHECK(r.exactMatch);
    CHECK(r.oracleMaxTreeCount == 125);
  }

  TEST_CASE("labeled and deduplicated runs agree") {
    for (auto [n, m] : std::vector<std::pair<std::size_t, std::size_t>>{{5, 6}, {6, 8}, {6, 11}}) {
      FiltrationConfig cfg = config(n, m);
      const auto a = verifyConjecture(cfg);
      cfg.dedupIsomorphism = false;
      const auto b = verifyConjecture(cfg);
      CHECK(a.holds == b.holds);
      CHECK(a.filtration.maxTreeCount == b.filtration.maxTreeCount);
    }
  }
}

TEST_SUITE("lemma curves") {
  TEST_CASE("closed-form derivatives match central differences") {
    const double h = 1e-4;
    for (auto [n, r, s] : std::vector<std::array<std::int64_t, 3>>{{8, 36, 180}, {10, 66, 462}, {12, 91, 700}, {5, 20, 84}}) {
      for (const auto& p : lemmaCurves(n, r, s, 200)) {
        if (p.x - h <= 1.0 || p.x + h >= static_cast<double>(n) - 1.0) continue;
        const auto lo = lemmaPoint(n, r, s, p.x - h);
        const auto hi = lemmaPoint(n, r, s, p.x + h);
        CHECK(std::abs(p.fPrime - (hi.f - lo.f) / (2 * h)) <= 1e-5);
        CHECK(std::abs(p.cPrime - (hi.c - lo.c) / (2 * h)) <= 1e-5 * std::max(1.0, std::abs(p.cPrime)));
      }
    }
  }

  TEST_CASE("lattice point reproduces its tree count") {
    const auto p = lemmaPoint(8, 36, 180, 4);
    CHECK(p.f == doctest::Approx(std::log(104976.0)).epsilon(1e-12));
    CHECK(std::exp(p.f) / 9.0 == doctest::Approx(11664.0).epsilon(1e-10));
    // c(x) = n^3 (x x1^3 + (n - x) x2^3).
    CHECK(p.c == doctest::Approx(512.0 * (4 * 216.0 + 4 * 27.0)).epsilon(1e-12));
  }

  TEST_CASE("domain errors") {
    CHECK(errorKind([] { lemmaCurves(8, 36, 162, 10); }) == "domain-error");
    CHECK(errorKind([] { lemmaCurves(8, 36, 180, 2); }) == "domain-error");
    // d = 2 on 9 vertices: x2 turns negative near the grid edge.
    CHECK(errorKind([] { lemmaCurves(8, 18, 54, 50); }) == "domain-error");
  }

  TEST_CASE("auxiliary g is negative with the derivative it claims") {
    for (double t = 0.01; t <= 100.0; t += 0.01) {
      CHECK(auxiliaryG(t) < 0.0);
      const double h = 1e-5 * std::max(1.0, t);
      const double fd = (auxiliaryG(t + h) - auxiliaryG(t - h)) / (2 * h);
      CHECK(std::abs(auxiliaryGPrime(t) - fd) <= 1e-6);
    }
    CHECK(auxiliaryG(0.0) == 0.0);
  }

  TEST_CASE("divisibility") {
    CHECK(divisibilityCheck(6, 4));
    CHECK(divisibilityCheck(7, 3));
    CHECK_FALSE(divisibilityCheck(7, 4));
  }
}

TEST_SUITE("complement") {
  TEST_CASE("complement facts on random graphs") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph g = testing::randomGraph(rng, 2 + trial % 12, 0.5);
      const auto r = complementDualityCheck(g);
      CHECK(r.spectrumDuality);
      CHECK(r.triangleIdentity);
      CHECK(r.triangles == triangleCount(g));
      CHECK(r.nearlyRegularEquivalence);
      if (r.twoEigenvalueEquivalence) CHECK(*r.twoEigenvalueEquivalence);
    }
  }

  TEST_CASE("Petersen complement") {
    const auto r = complementDualityCheck(petersen());
    CHECK(r.complementTriangles == 30);
    CHECK(r.triangles == 0);
    CHECK(r.complementSrg == SrgParams{10, 6, 3, 4});
    REQUIRE(r.twoEigenvalueEquivalence.has_value());
    CHECK(*r.twoEigenvalueEquivalence);
  }
}

TEST_SUITE("superimpose") {
  // Spanning trees of the multigraph, counted as sum over spanning trees of
  // K_n of the product of edge multiplicities.
  BigInt multigraphTrees(const Graph& g, std::int64_t copies) {
    const std::size_t n = g.order();
    Graph k(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) k.addEdge(u, v);
    const auto edges = k.edges();
    BigInt total = 0;
    std::vector<bool> chosen(edges.size(), false);
    std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(n - 1), true);
    std::vector<Vertex> parent(n);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    do {
      std::iota(parent.begin(), parent.end(), Vertex{0});
      bool tree = true;
      BigInt weight = 1;
      for (std::size_t i = 0; i < edges.size() && tree; ++i) {
        if (!chosen[i]) continue;
        const Vertex a = find(edges[i].first);
        const Vertex b = find(edges[i].second);
        if (a == b) tree = false;
        parent[a] = b;
        weight *= copies + (g.adjacent(edges[i].first, edges[i].second) ? 1 : 0);
      }
      if (tree) total += weight;
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
    return total;
  }

  TEST_CASE("determinant agrees with direct multigraph tree counting") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = testing::randomGraph(rng, 2 + trial % 5, 0.5);
      for (const auto& row : superimposeDemo(g, 3)) CHECK(row.treeCount == multigraphTrees(g, row.copies));
    }
  }

  TEST_CASE("eigenvalues shift by copies times order") {
    const auto c3 = superimposeDemo(cycle(3), 1);
    CHECK(c3[0].treeCount == 3);
    CHECK(c3[1].treeCount == 12);
    CHECK(c3[1].matchesShiftByCopiesOrder);
    CHECK_FALSE(c3[1].matchesShiftByCopies);
    const auto k2 = superimposeDemo(completeGraph(2), 2);
    CHECK(k2[2].treeCount == 3);
    std::mt19937_64 rng(72);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = testing::randomConnectedGraph(rng, 3 + trial % 7, 0.4);
      for (const auto& row : superimposeDemo(g, 4)) CHECK(row.matchesShiftByCopiesOrder);
    }
  }

  TEST_CASE("comparison of two bases") {
    const auto cmp = superimposeCompare(lattice(3), gkl(2, 0), 5);
    CHECK(cmp.traceOrder == -1);
    for (const auto& row : cmp.rows) CHECK(row.complexityOrder == -1);
    CHECK(cmp.rows[0].treeCountA == 11664);
    CHECK(cmp.rows[0].treeCountB == 12480);
    CHECK_THROWS_AS(superimposeCompare(cycle(4), cycle(5), 1), Error);
  }
}
