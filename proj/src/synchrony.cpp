#include "kirchhoff/synchrony.hpp"

#include <limits>
#include <random>

#include "kirchhoff/error.hpp"

namespace kirchhoff {

namespace {

void checkArgs(const Graph& g, std::size_t threshold, std::size_t k) {
  require(threshold >= 1, "threshold must be at least 1");
  require(k <= g.order(), "seed size k exceeds the order");
}

std::optional<std::size_t> runToFixpoint(const Graph& g, std::size_t threshold, VertexSet s) {
  std::size_t step = 0;
  while (true) {
    if (s.full()) return step;
    VertexSet next = s;
    bool grew = false;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!s.contains(v) && g.neighborsIn(v, s) >= threshold) {
        next.insert(v);
        grew = true;
      }
    }
    if (!grew) return std::nullopt;
    s = std::move(next);
    ++step;
  }
}

SynchronyMeasures summarize(std::size_t threshold, std::size_t k, std::vector<std::uint64_t> histogram,
                            std::uint64_t visited) {
  SynchronyMeasures m;
  m.k = k;
  m.threshold = threshold;
  m.samples = visited;
  BigInt synced = 0;
  Rational weighted = 0;
  for (std::size_t i = 0; i < histogram.size(); ++i) {
    if (histogram[i] == 0) continue;
    synced += histogram[i];
    weighted += Rational(BigInt(histogram[i])) * synchronyContribution(i);
  }
  m.pK = Rational(synced, BigInt(visited));
  m.pK.canonicalize();
  m.eK = weighted / Rational(BigInt(visited));
  m.histogram = std::move(histogram);
  return m;
}

// Uniform integer in [0, bound) by rejection, independent of the standard
// library's distribution implementation.
std::uint64_t boundedUniform(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

}  // namespace

SynchronyOutcome evolve(const Graph& g, const SeedConfig& cfg) {
  require(cfg.threshold >= 1, "threshold must be at least 1");
  require(cfg.seed.universe() == g.order(), "seed set universe must equal the order");
  SynchronyOutcome out;
  VertexSet s = cfg.seed;
  out.trajectory.push_back(s);
  std::size_t step = 0;
  while (true) {
    if (s.full() && !out.iStar) out.iStar = step;
    VertexSet next = s;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!s.contains(v) && g.neighborsIn(v, s) >= cfg.threshold) next.insert(v);
    }
    if (next == s) break;
    s = std::move(next);
    out.trajectory.push_back(s);
    ++step;
  }
  return out;
}

Rational synchronyContribution(const std::optional<std::size_t>& iStar) {
  if (!iStar) return 0;
  if (*iStar == 0) return 1;
  return Rational(1, static_cast<unsigned long>(*iStar));
}

SynchronyMeasures measuresExhaustive(const Graph& g, std::size_t threshold, std::size_t k) {
  checkArgs(g, threshold, k);
  const std::size_t n = g.order();
  const BigInt total = binomial(n, k);
  if (total > kExhaustiveEnvelope) {
    fail("envelope-exceeded", "C(" + std::to_string(n) + ", " + std::to_string(k) + ") = " + toDecimal(total) +
                                  " seed sets exceed the exhaustive envelope of " +
                                  std::to_string(kExhaustiveEnvelope));
  }
  std::vector<std::uint64_t> histogram(n + 1, 0);
  std::uint64_t visited = 0;
  std::vector<Vertex> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    VertexSet s(n);
    for (auto v : pick) s.insert(v);
    const auto iStar = runToFixpoint(g, threshold, std::move(s));
    if (iStar) ++histogram[*iStar];
    ++visited;
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return summarize(threshold, k, std::move(histogram), visited);
}

SynchronyMeasures measuresMonteCarlo(const Graph& g, std::size_t threshold, std::size_t k, std::uint64_t samples,
                                     std::uint64_t rngSeed) {
  checkArgs(g, threshold, k);
  require(samples >= 1, "samples must be at least 1");
  const std::size_t n = g.order();
  std::mt19937_64 rng(rngSeed);
  std::vector<std::uint64_t> histogram(n + 1, 0);
  for (std::uint64_t draw = 0; draw < samples; ++draw) {
    VertexSet s(n);
    for (std::size_t j = n - k; j < n; ++j) {
      const auto v = static_cast<Vertex>(boundedUniform(rng, j + 1));
      s.insert(s.contains(v) ? j : v);
    }
    const auto iStar = runToFixpoint(g, threshold, std::move(s));
    if (iStar) ++histogram[*iStar];
  }
  auto m = summarize(threshold, k, std::move(histogram), samples);
  m.method = MeasureMethod::monteCarlo;
  m.rngSeed = rngSeed;
  return m;
}

std::string methodName(MeasureMethod m) {
  return m == MeasureMethod::exhaustive ? "exhaustive" : "monteCarlo";
}

}  // namespace kirchhoff
