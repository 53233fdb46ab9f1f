#include "kirchhoff/expanders.hpp"

#include <algorithm>
#include <cmath>

#include "kirchhoff/error.hpp"
#include "kirchhoff/spectral.hpp"

namespace kirchhoff {

ExpanderSeries series(const FamilySpec& family, const std::vector<std::int64_t>& indices) {
  ExpanderSeries out;
  out.family = family;
  for (auto index : indices) {
    const FamilySpec spec = family.withIndex(index);
    const Graph g = build(spec);
    require(g.order() >= 2, "series points need at least two vertices");
    ExpanderPoint p;
    p.index = index;
    p.order = g.order();
    p.size = g.size();
    p.treeCount = treeCountExact(g).value;
    if (p.treeCount > 0) {
      p.root = std::exp(logBig(p.treeCount) / static_cast<double>(p.order - 1));
      p.x1 = eigenvalues(g).values[1];
    }
    p.closedForm = closedFormTreeCount(spec);
    if (p.closedForm) p.closedFormAgrees = *p.closedForm == p.treeCount;
    out.points.push_back(std::move(p));
  }
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const ExpanderPoint& a, const ExpanderPoint& b) { return a.order < b.order; });
  return out;
}

double cdEstimate(const ExpanderSeries& s, std::size_t tailCount) {
  require(tailCount >= 1, "tail count must be at least 1");
  if (s.points.size() < tailCount) {
    fail("insufficient-points", "series has " + std::to_string(s.points.size()) + " points, tail needs " +
                                    std::to_string(tailCount));
  }
  double best = s.points.back().root;
  for (std::size_t i = s.points.size() - tailCount; i < s.points.size(); ++i) {
    best = std::min(best, s.points[i].root);
  }
  return best;
}

std::vector<bool> pointwiseAbove(const ExpanderSeries& a, const ExpanderSeries& b) {
  std::vector<bool> out;
  const std::size_t n = std::min(a.points.size(), b.points.size());
  for (std::size_t i = 0; i < n; ++i) out.push_back(a.points[i].root > b.points[i].root);
  return out;
}

}  // namespace kirchhoff
