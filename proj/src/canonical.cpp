// Canonical labeling by individualization-refinement.
//
// Each search node holds an ordered partition of the vertices. Refinement
// splits cells by neighbour counts into a splitter cell until the partition
// is equitable; the split order depends only on the counts, so refinement
// commutes with relabeling. At a leaf (discrete partition) the relabeled
// adjacency rows form the leaf code, and the canonical form is the leaf with
// the smallest code. Automorphisms detected at equal-code leaves prune
// sibling branches that lie in the same orbit of the path stabilizer.

#include <algorithm>
#include <bit>
#include <numeric>

#include "kirchhoff/graph.hpp"

namespace kirchhoff {

namespace {

struct Partition {
  std::vector<Vertex> lab;
  std::vector<char> cellStart;  // size n + 1, cellStart[n] == 1
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g)
      : g_(g), n_(g.order()), stride_(g.wordsPerRow()), mask_(stride_), pos_(n_) {}

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    Partition root;
    root.lab.resize(n_);
    std::iota(root.lab.begin(), root.lab.end(), Vertex{0});
    root.cellStart.assign(n_ + 1, 0);
    root.cellStart[0] = 1;
    root.cellStart[n_] = 1;
    refine(root, 0);
    std::vector<Vertex> path;
    search(root, path);
    return bestLab_;
  }

 private:
  std::size_t cellEnd(const Partition& p, std::size_t start) const {
    std::size_t e = start + 1;
    while (!p.cellStart[e]) ++e;
    return e;
  }

  void refine(Partition& p, std::size_t firstSplitter) {
    std::vector<std::size_t> queue{firstSplitter};
    std::vector<char> queued(n_ + 1, 0);
    queued[firstSplitter] = 1;
    std::vector<std::pair<std::size_t, Vertex>> keyed;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t s = queue[head];
      queued[s] = 0;
      std::fill(mask_.begin(), mask_.end(), 0);
      for (std::size_t i = s, e = cellEnd(p, s); i < e; ++i) {
        mask_[p.lab[i] >> 6] |= std::uint64_t{1} << (p.lab[i] & 63);
      }
      for (std::size_t a = 0; a < n_;) {
        const std::size_t b = cellEnd(p, a);
        if (b - a > 1) {
          keyed.clear();
          bool uniform = true;
          for (std::size_t i = a; i < b; ++i) {
            auto row = g_.row(p.lab[i]);
            std::size_t c = 0;
            for (std::size_t w = 0; w < stride_; ++w) {
              c += static_cast<std::size_t>(std::popcount(row[w] & mask_[w]));
            }
            if (!keyed.empty() && keyed.front().first != c) uniform = false;
            keyed.emplace_back(c, p.lab[i]);
          }
          if (!uniform) {
            std::stable_sort(keyed.begin(), keyed.end(),
                             [](const auto& x, const auto& y) { return x.first < y.first; });
            for (std::size_t i = a; i < b; ++i) {
              p.lab[i] = keyed[i - a].second;
              if (i > a && keyed[i - a].first != keyed[i - a - 1].first) {
                p.cellStart[i] = 1;
                if (!queued[i]) {
                  queued[i] = 1;
                  queue.push_back(i);
                }
              }
            }
            if (!queued[a]) {
              queued[a] = 1;
              queue.push_back(a);
            }
          }
        }
        a = b;
      }
    }
  }

  void search(const Partition& p, std::vector<Vertex>& path) {
    std::size_t a = 0;
    while (a < n_ && cellEnd(p, a) - a == 1) ++a;
    if (a == n_) {
      leaf(p.lab);
      return;
    }
    const std::size_t b = cellEnd(p, a);
    std::vector<Vertex> cell(p.lab.begin() + static_cast<std::ptrdiff_t>(a),
                             p.lab.begin() + static_cast<std::ptrdiff_t>(b));
    std::sort(cell.begin(), cell.end());
    std::vector<Vertex> explored;
    for (Vertex v : cell) {
      if (!explored.empty() && sameOrbitAsExplored(path, explored, v)) continue;
      Partition child = p;
      auto it = std::find(child.lab.begin() + static_cast<std::ptrdiff_t>(a),
                          child.lab.begin() + static_cast<std::ptrdiff_t>(b), v);
      std::iter_swap(child.lab.begin() + static_cast<std::ptrdiff_t>(a), it);
      child.cellStart[a + 1] = 1;
      refine(child, a);
      path.push_back(v);
      search(child, path);
      path.pop_back();
      explored.push_back(v);
    }
  }

  bool sameOrbitAsExplored(const std::vector<Vertex>& path, const std::vector<Vertex>& explored,
                           Vertex v) {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](Vertex u) { return gamma[u] == u; });
      if (!fixes) continue;
      for (Vertex x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    const Vertex root = find(v);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return find(u) == root; });
  }

  void leaf(const std::vector<Vertex>& lab) {
    for (std::size_t i = 0; i < n_; ++i) pos_[lab[i]] = i;
    code_.assign(n_ * stride_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      auto row = g_.row(lab[i]);
      for (std::size_t w = 0; w < stride_; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          const Vertex u = w * 64 + static_cast<Vertex>(std::countr_zero(bits));
          bits &= bits - 1;
          const std::size_t j = pos_[u];
          code_[i * stride_ + (j >> 6)] |= std::uint64_t{1} << (j & 63);
        }
      }
    }
    if (bestLab_.empty() || code_ < bestCode_) {
      bestCode_ = code_;
      bestLab_ = lab;
    } else if (code_ == bestCode_) {
      std::vector<Vertex> gamma(n_);
      for (std::size_t i = 0; i < n_; ++i) gamma[lab[i]] = bestLab_[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t stride_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::size_t> pos_;
  std::vector<std::uint64_t> code_;
  std::vector<std::uint64_t> bestCode_;
  std::vector<Vertex> bestLab_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

std::vector<Vertex> canonicalLabeling(const Graph& g) { return Canonizer(g).run(); }

Graph canonicalForm(const Graph& g) {
  const auto lab = canonicalLabeling(g);
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < lab.size(); ++i) perm[lab[i]] = i;
  return relabel(g, perm);
}

}  // namespace kirchhoff
