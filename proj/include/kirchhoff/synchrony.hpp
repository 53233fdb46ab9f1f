#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kirchhoff/bigint.hpp"
#include "kirchhoff/graph.hpp"

namespace kirchhoff {

/// Largest number of seed sets the exhaustive measures will visit.
inline constexpr std::uint64_t kExhaustiveEnvelope = 10'000'000;

struct SeedConfig {
  std::size_t threshold = 1;
  VertexSet seed;
};

/// Bootstrap-percolation run: S_i adds every vertex with at least
/// `threshold` neighbours in S_{i-1}, until a fixpoint.
struct SynchronyOutcome {
  /// S_0, S_1, ... up to the fixpoint, strictly increasing; the step after
  /// the last entry would repeat it.
  std::vector<VertexSet> trajectory;
  /// First i with S_i = V; empty when the fixpoint misses some vertex.
  std::optional<std::size_t> iStar;
  bool synchronized() const noexcept { return iStar.has_value(); }
};

enum class MeasureMethod { exhaustive, monteCarlo };

struct SynchronyMeasures {
  std::size_t k = 0;
  std::size_t threshold = 0;
  /// Fraction of k-seed sets that synchronize.
  Rational pK;
  /// Mean of 1/i* over k-seed sets (0 when unsynchronized, 1 when i* = 0).
  Rational eK;
  MeasureMethod method = MeasureMethod::exhaustive;
  std::uint64_t samples = 0;  // seed sets visited
  std::uint64_t rngSeed = 0;  // monteCarlo only
  /// histogram[i] = number of visited seed sets with i* = i.
  std::vector<std::uint64_t> histogram;
};

SynchronyOutcome evolve(const Graph& g, const SeedConfig& cfg);

/// Contribution of one seed set to e_k.
Rational synchronyContribution(const std::optional<std::size_t>& iStar);

/// Exact measures over all C(order, k) seed sets; envelope-exceeded past
/// kExhaustiveEnvelope.
SynchronyMeasures measuresExhaustive(const Graph& g, std::size_t threshold, std::size_t k);

/// Measures over `samples` uniform k-subsets drawn with mt19937_64 seeded by
/// `rngSeed`; bounded integers use rejection sampling and subsets use
/// Floyd's algorithm, so the output is identical on every platform.
SynchronyMeasures measuresMonteCarlo(const Graph& g, std::size_t threshold, std::size_t k, std::uint64_t samples,
                                     std::uint64_t rngSeed);

std::string methodName(MeasureMethod m);

}  // namespace kirchhoff
