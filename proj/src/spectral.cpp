#include "kirchhoff/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "kirchhoff/error.hpp"

namespace kirchhoff {

namespace {

// Bareiss on 64-bit storage. Every intermediate entry is a minor of the input,
// so a Hadamard bound below 2^62 keeps entries in range; products are formed
// in 128 bits before the exact division.
std::int64_t bareissSmall(Matrix<std::int64_t> m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::int64_t sign = 1;
  std::int64_t previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swapRows(k, swap);
      sign = -sign;
    }
    const __int128 pivot = m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const __int128 lead = m(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        const __int128 num = static_cast<__int128>(m(i, j)) * pivot - lead * m(k, j);
        m(i, j) = static_cast<std::int64_t>(num / previous);
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

double log2HadamardBound(const Matrix<std::int64_t>& m) {
  double total = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    double sq = 0.0;
    for (std::size_t j = 0; j < m.cols(); ++j) sq += static_cast<double>(m(i, j)) * static_cast<double>(m(i, j));
    if (sq == 0.0) return 0.0;  // zero row: determinant is zero
    total += 0.5 * std::log2(sq);
  }
  return total;
}

Matrix<BigInt> toBig(const Matrix<std::int64_t>& m) {
  Matrix<BigInt> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = static_cast<long>(m(i, j));
  }
  return out;
}

bool nearInteger(double x, double tol) { return std::abs(x - std::round(x)) <= tol; }

}  // namespace

Spectrum Spectrum::fromValues(std::vector<double> values) {
  Spectrum sp;
  std::sort(values.begin(), values.end());
  sp.values = std::move(values);
  const double gap = kClusterGapPerVertex * static_cast<double>(sp.values.size());
  std::size_t i = 0;
  while (i < sp.values.size()) {
    std::size_t j = i + 1;
    double sum = sp.values[i];
    while (j < sp.values.size() && sp.values[j] - sp.values[j - 1] <= gap) sum += sp.values[j++];
    EigenCluster c;
    c.multiplicity = j - i;
    c.value = sum / static_cast<double>(c.multiplicity);
    if (nearInteger(c.value, kSnapTolerance)) {
      c.value = std::round(c.value);
      if (c.value == 0.0) c.value = 0.0;  // normalise -0
      c.integral = true;
    }
    sp.clusters.push_back(c);
    i = j;
  }
  return sp;
}

std::vector<EigenCluster> Spectrum::nonzeroClusters() const {
  std::vector<EigenCluster> out;
  for (const auto& c : clusters) {
    if (std::abs(c.value) > kSnapTolerance) out.push_back(c);
  }
  return out;
}

Matrix<std::int64_t> laplacian(const Graph& g) {
  const std::size_t n = g.order();
  Matrix<std::int64_t> l(n, n);
  for (Vertex u = 0; u < n; ++u) {
    l(u, u) = static_cast<std::int64_t>(g.degree(u));
    for (Vertex v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) l(u, v) = -1;
    }
  }
  return l;
}

BigInt bareissDeterminant(Matrix<BigInt> m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  BigInt previous = 1;
  BigInt num;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swapRows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, k) = 0;
    }
    previous = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

BigInt exactDeterminant(const Matrix<std::int64_t>& m) {
  require(m.rows() == m.cols(), "determinant of a non-square matrix");
  if (log2HadamardBound(m) < 61.0) return BigInt(static_cast<long>(bareissSmall(m)));
  return bareissDeterminant(toBig(m));
}

TreeCount treeCountExact(const Graph& g) {
  require(g.order() > 0, "tree count of the empty vertex set");
  return treeCountExact(g, g.order() - 1);
}

TreeCount treeCountExact(const Graph& g, Vertex deleted) {
  require(deleted < g.order(), "deleted vertex out of range");
  if (!isConnected(g)) return {BigInt(0)};
  return {exactDeterminant(laplacian(g).withoutRowCol(deleted))};
}

double treeCountFromSpectrum(const Spectrum& sp, double tol) {
  require(!sp.values.empty(), "empty spectrum");
  long double product = 1.0L;
  for (std::size_t i = 1; i < sp.values.size(); ++i) {
    if (sp.values[i] <= tol) {
      fail("degenerate-spectrum", "eigenvalue x_" + std::to_string(i) + " is not positive");
    }
    product *= static_cast<long double>(sp.values[i]);
  }
  return static_cast<double>(product / static_cast<long double>(sp.values.size()));
}

std::optional<BigInt> treeCountFromIntegralSpectrum(const Spectrum& sp) {
  if (sp.clusters.empty()) return std::nullopt;
  const auto& zero = sp.clusters.front();
  if (!zero.integral || zero.value != 0.0 || zero.multiplicity != 1) return std::nullopt;
  BigInt product = 1;
  for (std::size_t c = 1; c < sp.clusters.size(); ++c) {
    const auto& cl = sp.clusters[c];
    if (!cl.integral || cl.value <= 0.0) return std::nullopt;
    BigInt power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(cl.value),
                  static_cast<unsigned long>(cl.multiplicity));
    product *= power;
  }
  const BigInt order = static_cast<unsigned long>(sp.values.size());
  if (product % order != 0) return std::nullopt;
  return BigInt(product / order);
}

Spectrum eigenvalues(const Graph& g, double tol) {
  require(tol > 0.0, "eigenvalue tolerance must be positive");
  const std::size_t n = g.order();
  if (n == 0) return {};
  const auto l = laplacian(g);
  Eigen::MatrixXd dense(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      dense(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(l(i, j));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense);
  if (solver.info() != Eigen::Success) fail("convergence-failure", "eigensolver did not converge");
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  const double norm = std::max(1.0, vals.cwiseAbs().maxCoeff());
  double residual = 0.0;
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    residual = std::max(residual, (dense * vecs.col(i) - vals(i) * vecs.col(i)).norm());
  }
  if (residual > tol * norm) {
    fail("convergence-failure", "eigen residual " + std::to_string(residual) + " above tolerance");
  }
  return Spectrum::fromValues(std::vector<double>(vals.data(), vals.data() + vals.size()));
}

std::vector<BigInt> tracePowers(const Graph& g, unsigned maxR) {
  const std::size_t n = g.order();
  std::vector<BigInt> out;
  out.reserve(maxR + 1);
  out.emplace_back(static_cast<unsigned long>(n));
  if (maxR == 0) return out;
  const auto l = laplacian(g);
  const auto stats = degreeStats(g);
  // |(L^r)_{ij}| <= (2 maxDeg)^r; stay on 64-bit while the running sum of a
  // row of products cannot overflow.
  const double rowBound = std::max(1.0, 2.0 * static_cast<double>(stats.maxDeg));
  Matrix<std::int64_t> power = l;
  unsigned r = 1;
  for (;; ++r) {
    std::int64_t t = 0;
    for (std::size_t i = 0; i < n; ++i) t += power(i, i);
    out.emplace_back(static_cast<long>(t));
    if (r == maxR) return out;
    const double next = std::pow(rowBound, r + 1) * static_cast<double>(n) * rowBound;
    if (next >= 9.0e18) break;
    power = power * l;
  }
  Matrix<BigInt> big = toBig(power);
  const Matrix<BigInt> lb = toBig(l);
  for (++r; r <= maxR; ++r) {
    big = big * lb;
    out.push_back(big.trace());
  }
  return out;
}

BigInt tracePower(const Graph& g, unsigned r) { return tracePowers(g, r).back(); }

bool traceCubeIdentityCheck(const Graph& g) {
  const auto stats = degreeStats(g);
  const BigInt lhs = tracePower(g, 3);
  BigInt rhs = BigInt(static_cast<unsigned long>(stats.sumCubes)) +
               3 * BigInt(static_cast<unsigned long>(stats.sumSquares)) -
               6 * BigInt(static_cast<unsigned long>(triangleCount(g)));
  return lhs == rhs;
}

EigenPair solveMomentPair(double n, double r, double s, double n1) {
  require(n1 >= 1.0 && n1 <= n - 1.0, "multiplicity n1 must lie in [1, n-1]");
  const double disc = n * s - r * r;
  require(disc >= 0.0, "n*s < r^2: no real eigenvalue pair");
  const double z = std::sqrt(disc);
  return {r / n + (z / n) * std::sqrt((n - n1) / n1), r / n - (z / n) * std::sqrt(n1 / (n - n1))};
}

EigenPair solveMomentSystem(std::int64_t n, std::int64_t r, std::int64_t s, std::int64_t n1) {
  require(n1 >= 1 && n1 <= n - 1, "multiplicity n1 must lie in [1, n-1]");
  const BigInt disc = BigInt(static_cast<long>(n)) * static_cast<long>(s) -
                      BigInt(static_cast<long>(r)) * static_cast<long>(r);
  require(sgn(disc) >= 0, "n*s < r^2: no real eigenvalue pair");
  const double z = std::sqrt(disc.get_d());
  const double nn = static_cast<double>(n);
  const double m1 = static_cast<double>(n1);
  return {static_cast<double>(r) / nn + (z / nn) * std::sqrt((nn - m1) / m1),
          static_cast<double>(r) / nn - (z / nn) * std::sqrt(m1 / (nn - m1))};
}

std::optional<TwoEigenvalueModel> detectTwoEigenvalue(const Spectrum& sp) {
  if (sp.clusters.empty() || sp.clusters.front().multiplicity != 1) return std::nullopt;
  const auto nz = sp.nonzeroClusters();
  if (nz.size() != 2) return std::nullopt;
  double sum = 0.0;
  double squares = 0.0;
  for (double x : sp.values) {
    sum += x;
    squares += x * x;
  }
  // Power sums of a graph spectrum are traces of integer matrices.
  if (!nearInteger(sum, kSnapTolerance * std::max(1.0, sum)) ||
      !nearInteger(squares, kSnapTolerance * std::max(1.0, squares))) {
    return std::nullopt;
  }
  TwoEigenvalueModel m;
  m.n = static_cast<std::int64_t>(sp.values.size()) - 1;
  m.r = static_cast<std::int64_t>(std::llround(sum));
  m.s = static_cast<std::int64_t>(std::llround(squares));
  m.n1 = static_cast<std::int64_t>(nz[1].multiplicity);
  if (m.n * m.s < m.r * m.r) return std::nullopt;
  m.z = std::sqrt(static_cast<double>(m.n * m.s - m.r * m.r));
  const auto pair = solveMomentSystem(m.n, m.r, m.s, m.n1);
  auto close = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b)); };
  if (!close(pair.x1, nz[1].value) || !close(pair.x2, nz[0].value)) return std::nullopt;
  m.x1 = pair.x1;
  m.x2 = pair.x2;
  return m;
}

Spectrum complementSpectrum(const Spectrum& sp, std::size_t order) {
  require(sp.values.size() == order, "spectrum length differs from order");
  std::vector<double> mapped;
  mapped.reserve(order);
  if (!sp.values.empty()) mapped.push_back(sp.values.front());
  for (std::size_t i = 1; i < sp.values.size(); ++i) {
    mapped.push_back(static_cast<double>(order) - sp.values[i]);
  }
  return Spectrum::fromValues(std::move(mapped));
}

}  // namespace kirchhoff
