#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kirchhoff/bigint.hpp"
#include "kirchhoff/families.hpp"

namespace kirchhoff {

struct ExpanderPoint {
  std::int64_t index = 0;
  std::size_t order = 0;
  std::size_t size = 0;
  BigInt treeCount;
  /// treeCount^(1/(order-1)), from the logarithm of the exact count.
  double root = 0.0;
  /// Smallest nonzero Laplacian eigenvalue (0 when disconnected).
  double x1 = 0.0;
  std::optional<BigInt> closedForm;
  /// Closed form equals the exact count; empty when there is no closed form.
  std::optional<bool> closedFormAgrees;
};

struct ExpanderSeries {
  FamilySpec family;
  std::vector<ExpanderPoint> points;  // increasing order
};

/// One point per index, sorted by order; constructor errors propagate.
ExpanderSeries series(const FamilySpec& family, const std::vector<std::int64_t>& indices);

/// Minimum root over the last `tailCount` points, a finite proxy for the
/// liminf; insufficient-points when the series is shorter.
double cdEstimate(const ExpanderSeries& s, std::size_t tailCount);

/// Per position i, whether a.points[i].root > b.points[i].root; the shorter
/// series bounds the comparison.
std::vector<bool> pointwiseAbove(const ExpanderSeries& a, const ExpanderSeries& b);

}  // namespace kirchhoff
