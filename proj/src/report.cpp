#include "kirchhoff/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "kirchhoff/io.hpp"

namespace kirchhoff::report {

namespace {

Json graphs(const std::vector<Graph>& gs) {
  Json out = Json::array();
  for (const auto& g : gs) out.push_back(toJson(g));
  return out;
}

template <typename T>
Json optionalJson(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json levelJson(const FiltrationLevel& level) {
  return Json{{"r", level.r},
              {"extremalValue", toJson(level.extremalValue)},
              {"survivorCount", level.survivors.size()},
              {"survivors", graphs(level.survivors)}};
}

void renderInto(std::ostringstream& out, const Json& doc, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    return v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
                                  return e.is_primitive();
                                }));
  };
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string label = doc.is_object() ? it.key() : "-";
    const Json& v = it.value();
    if (v.is_primitive()) {
      out << pad << label << ": " << scalar(v) << '\n';
    } else if (flat(v)) {
      out << pad << label << ":";
      for (const auto& e : v) out << ' ' << scalar(e);
      out << '\n';
    } else {
      out << pad << label << ":\n";
      renderInto(out, v, indent + 1);
    }
  }
}

}  // namespace

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json toJson(const BigInt& v) { return toDecimal(v); }

Json toJson(const Rational& v) {
  return Json{{"num", toDecimal(v.get_num())}, {"den", toDecimal(v.get_den())}, {"decimal", decimal(v.get_d())}};
}

Json toJson(const Graph& g) {
  return Json{{"order", g.order()}, {"size", g.size()}, {"graph6", writeGraph6(g)}};
}

Json toJson(const DegreeStats& s) {
  return Json{{"degrees", s.degrees},         {"sum", s.sum},
              {"sumSquares", s.sumSquares},   {"sumCubes", s.sumCubes},
              {"minDegree", s.minDeg},        {"maxDegree", s.maxDeg},
              {"nearlyRegular", s.nearlyRegular()}, {"regular", s.regular()}};
}

Json toJson(const SrgParams& p) {
  return Json{{"v", p.v}, {"k", p.k}, {"lambda", p.lambda}, {"mu", p.mu}};
}

Json toJson(const Spectrum& sp) {
  Json clusters = Json::array();
  for (const auto& c : sp.clusters) {
    clusters.push_back(Json{{"value", c.value}, {"multiplicity", c.multiplicity}, {"integral", c.integral}});
  }
  return Json{{"values", sp.values}, {"clusters", clusters}};
}

Json toJson(const TwoEigenvalueModel& m) {
  return Json{{"n", m.n}, {"r", m.r}, {"s", m.s}, {"z", m.z}, {"n1", m.n1}, {"x1", m.x1}, {"x2", m.x2}};
}

Json toJson(const FiltrationReport& r) {
  Json levels = Json::array();
  for (const auto& level : r.levels) levels.push_back(levelJson(level));
  return Json{{"order", r.config.order},
              {"size", r.config.size},
              {"maxR", r.config.maxR},
              {"regularOnly", r.config.regularOnly},
              {"dedupIsomorphism", r.config.dedupIsomorphism},
              {"enumerated", r.enumerated},
              {"levels", levels},
              {"stabilizedAt", optionalJson(r.stabilizedAt)},
              {"champions", graphs(r.champions)},
              {"treeCount", toJson(r.maxTreeCount)},
              {"level2NearlyRegular", r.level2NearlyRegular},
              {"level3MinTriangles", optionalJson(r.level3MinTriangles)},
              {"objective", "level r keeps the graphs maximising (-1)^(r-1) Tr(L^r), L the Laplacian"}};
}

Json toJson(const ConjectureReport& r) {
  Json out{{"filtration", toJson(r.filtration)},
           {"oracleChampions", graphs(r.oracleChampions)},
           {"oracleTreeCount", toJson(r.oracleMaxTreeCount)},
           {"oracleSizeOfMax", r.oracleSizeOfMax},
           {"oracleIncludesNonRegular", r.oracleIncludesNonRegular},
           {"survivorsAreChampions", r.survivorsAreChampions},
           {"survivorsCospectral", r.survivorsCospectral},
           {"exactMatch", r.exactMatch},
           {"holds", r.holds}};
  out["scope"] =
      "desk-scale check of this (order, size) only; the claim for all graphs on nine or fewer vertices is not "
      "certified here";
  return out;
}

Json toJson(const LemmaCurvePoint& p) {
  return Json{{"x", p.x}, {"f", p.f}, {"c", p.c}, {"fPrime", p.fPrime}, {"cPrime", p.cPrime}};
}

Json toJson(const ComplementReport& r) {
  Json out{{"complementConnected", r.complementConnected},
           {"spectrumDeviation", r.spectrumDeviation},
           {"spectrumDuality", r.spectrumDuality},
           {"twoEigenvalueEquivalence", optionalJson(r.twoEigenvalueEquivalence)},
           {"nearlyRegularEquivalence", r.nearlyRegularEquivalence},
           {"triangles", r.triangles},
           {"complementTriangles", r.complementTriangles},
           {"triangleIdentityValue", r.triangleIdentityValue},
           {"triangleIdentity", r.triangleIdentity},
           {"treeCount", toJson(r.treeCount)},
           {"complementTreeCount", toJson(r.complementTreeCount)}};
  out["srg"] = r.srg ? toJson(*r.srg) : Json(nullptr);
  out["complementSrg"] = r.complementSrg ? toJson(*r.complementSrg) : Json(nullptr);
  return out;
}

Json toJson(const SuperimposeRow& r) {
  return Json{{"copies", r.copies},
              {"treeCount", toJson(r.treeCount)},
              {"shiftByCopies", r.shiftByCopies},
              {"shiftByCopiesOrder", r.shiftByCopiesOrder},
              {"matchesShiftByCopies", r.matchesShiftByCopies},
              {"matchesShiftByCopiesOrder", r.matchesShiftByCopiesOrder}};
}

Json toJson(const SuperimposeComparison& c) {
  Json rows = Json::array();
  for (const auto& row : c.rows) {
    rows.push_back(Json{{"copies", row.copies},
                        {"treeCountA", toJson(row.treeCountA)},
                        {"treeCountB", toJson(row.treeCountB)},
                        {"complexityOrder", row.complexityOrder}});
  }
  return Json{{"traceOrder", c.traceOrder}, {"rows", rows}};
}

Json toJson(const SynchronyOutcome& o) {
  Json trajectory = Json::array();
  for (const auto& s : o.trajectory) trajectory.push_back(s.members());
  return Json{{"trajectory", trajectory}, {"iStar", optionalJson(o.iStar)}, {"synchronized", o.synchronized()}};
}

Json toJson(const SynchronyMeasures& m) {
  Json out{{"k", m.k},
           {"threshold", m.threshold},
           {"pK", toJson(m.pK)},
           {"eK", toJson(m.eK)},
           {"method", methodName(m.method)},
           {"samples", m.samples},
           {"histogram", m.histogram},
           {"seedAllContribution", "a seed set equal to V has i* = 0 and contributes 1 to eK"}};
  if (m.method == MeasureMethod::monteCarlo) {
    const double p = m.pK.get_d();
    out["rngSeed"] = m.rngSeed;
    out["pKStandardError"] = std::sqrt(p * (1.0 - p) / static_cast<double>(m.samples));
  }
  return out;
}

Json toJson(const ExpanderSeries& s) {
  Json points = Json::array();
  for (const auto& p : s.points) {
    points.push_back(Json{{"index", p.index},
                          {"order", p.order},
                          {"size", p.size},
                          {"treeCount", toJson(p.treeCount)},
                          {"root", p.root},
                          {"x1", p.x1},
                          {"closedForm", p.closedForm ? toJson(*p.closedForm) : Json(nullptr)},
                          {"closedFormAgrees", optionalJson(p.closedFormAgrees)}});
  }
  return Json{{"family", toJson(s.family)}, {"points", points}};
}

Json toJson(const SrgVerification& v) {
  Json clusters = Json::array();
  for (const auto& c : v.clusters) {
    clusters.push_back(Json{{"value", c.value}, {"multiplicity", c.multiplicity}, {"integral", c.integral}});
  }
  return Json{{"expected", toJson(v.expected)},
              {"found", v.found ? toJson(*v.found) : Json(nullptr)},
              {"triangles", v.triangles},
              {"clusters", clusters},
              {"treeCount", toJson(v.treeCountExact)},
              {"treeCountFromClusters", v.treeCountFromClusters ? toJson(*v.treeCountFromClusters) : Json(nullptr)},
              {"treeCountSpectral", v.treeCountSpectral},
              {"mismatches", v.mismatches},
              {"pass", v.pass()}};
}

Json toJson(const FamilySpec& f) {
  Json out{{"kind", familyName(f.kind)}, {"params", f.params}};
  if (!f.path.empty()) out["path"] = f.path;
  if (f.base) out["base"] = toJson(*f.base);
  return out;
}

std::string renderJson(const Json& doc) { return doc.dump() + "\n"; }

std::string renderText(const Json& doc) {
  std::ostringstream out;
  if (doc.is_primitive()) {
    out << doc.dump() << '\n';
  } else {
    renderInto(out, doc, 0);
  }
  return out.str();
}

}  // namespace kirchhoff::report
