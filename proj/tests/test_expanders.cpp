#include <doctest.h>

#include <cmath>

#include "kirchhoff/error.hpp"
#include "kirchhoff/expanders.hpp"

using namespace kirchhoff;

namespace {

std::vector<std::int64_t> range(std::int64_t from, std::int64_t to, std::int64_t step) {
  std::vector<std::int64_t> out;
  for (std::int64_t i = from; i <= to; i += step) out.push_back(i);
  return out;
}

}  // namespace

TEST_SUITE("expanders") {
  TEST_CASE("cycle roots decrease to 1 while x1 vanishes") {
    const auto s = series({FamilyKind::cycle, {3}, {}, nullptr}, range(3, 50, 1));
    REQUIRE(s.points.size() == 48);
    for (std::size_t i = 0; i < s.points.size(); ++i) {
      const auto& p = s.points[i];
      const double n = static_cast<double>(p.order);
      CHECK(p.treeCount == static_cast<long>(p.order));
      CHECK(p.root == doctest::Approx(std::pow(n, 1.0 / (n - 1.0))).epsilon(1e-12));
      CHECK(std::abs(p.x1 - (2.0 - 2.0 * std::cos(2.0 * M_PI / n))) < 1e-9);
      CHECK(p.closedFormAgrees == true);
      if (i > 0) {
        CHECK(p.root < s.points[i - 1].root);
        CHECK(p.x1 < s.points[i - 1].x1);
      }
      // n^(1/(n-1)) first drops below 1.1 at n = 40; at n = 30 it is 1.1244.
      CHECK((p.root - 1.0 < 0.1) == (p.order >= 40));
    }
    const double cd = cdEstimate(s, 5);
    CHECK(cd >= 1.0);
    CHECK(cd < 1.1);
  }

  TEST_CASE("Moebius roots approach sqrt(2 + sqrt 3)") {
    const auto s = series({FamilyKind::moebiusLadder, {6}, {}, nullptr}, range(6, 40, 2));
    for (const auto& p : s.points) CHECK(p.closedFormAgrees == true);
    const double limit = std::sqrt(2.0 + std::sqrt(3.0));
    for (std::size_t i = 1; i < s.points.size(); ++i) {
      CHECK(s.points[i].root > limit);
      CHECK(s.points[i].root < s.points[i - 1].root);
    }
    // Reference value from 40-digit arithmetic on the closed form.
    CHECK(s.points.back().root == doctest::Approx(2.0842387224991481).epsilon(1e-13));
    // The excess decays like log(n) / n: within 1e-3 only near twoN = 20000.
    const double far = std::exp(logBig(moebiusTreeCount(20000)) / 19999.0);
    CHECK(far - limit == doctest::Approx(8.865495484731900e-4).epsilon(1e-6));
    CHECK(cdEstimate(s, 3) >= 1.0);
    CHECK(s.points[0].treeCount == 81);
    CHECK(s.points[1].treeCount == 392);
  }

  TEST_CASE("doubled Moebius roots sit above the Moebius roots") {
    auto base = std::make_shared<const FamilySpec>(FamilySpec{FamilyKind::moebiusLadder, {6}, {}, nullptr});
    const auto indices = range(6, 20, 2);
    const auto m = series(*base, indices);
    const auto d = series({FamilyKind::doubled, {}, {}, base}, indices);
    const auto above = pointwiseAbove(d, m);
    REQUIRE(above.size() == indices.size());
    for (bool b : above) CHECK(b);
    for (const auto& p : d.points) CHECK_FALSE(p.closedForm.has_value());
  }

  TEST_CASE("roots stay finite for hundred-digit counts") {
    const auto s = series({FamilyKind::completeGraph, {60}, {}, nullptr}, {60});
    const auto& p = s.points.front();
    CHECK(p.treeCount.get_str().size() > 100);
    // t(K_n)^(1/(n-1)) = n^((n-2)/(n-1)).
    CHECK(p.root == doctest::Approx(std::pow(60.0, 58.0 / 59.0)).epsilon(1e-12));
  }

  TEST_CASE("tail estimator edge cases") {
    const auto one = series({FamilyKind::cycle, {7}, {}, nullptr}, {7});
    CHECK(cdEstimate(one, 1) == one.points.front().root);
    try {
      cdEstimate(one, 2);
      FAIL("expected insufficient-points");
    } catch (const Error& e) {
      CHECK(e.kind() == "insufficient-points");
    }
    CHECK_THROWS_AS(series({FamilyKind::moebiusLadder, {6}, {}, nullptr}, {7}), Error);
  }
}
