#pragma once

#include <json.hpp>

#include <string>

#include "kirchhoff/bigint.hpp"
#include "kirchhoff/expanders.hpp"
#include "kirchhoff/extremal.hpp"
#include "kirchhoff/families.hpp"
#include "kirchhoff/graph.hpp"
#include "kirchhoff/spectral.hpp"
#include "kirchhoff/synchrony.hpp"

namespace kirchhoff::report {

using Json = nlohmann::json;  // std::map objects, so keys serialize sorted

/// Big integers as decimal strings.
Json toJson(const BigInt& v);
/// {"num", "den", "decimal"} with the decimal at 17 significant digits.
Json toJson(const Rational& v);
/// {"order", "size", "graph6"}.
Json toJson(const Graph& g);
Json toJson(const DegreeStats& s);
Json toJson(const SrgParams& p);
Json toJson(const Spectrum& sp);
Json toJson(const TwoEigenvalueModel& m);
Json toJson(const FiltrationReport& r);
Json toJson(const ConjectureReport& r);
Json toJson(const LemmaCurvePoint& p);
Json toJson(const ComplementReport& r);
Json toJson(const SuperimposeRow& r);
Json toJson(const SuperimposeComparison& c);
Json toJson(const SynchronyOutcome& o);
Json toJson(const SynchronyMeasures& m);
Json toJson(const ExpanderSeries& s);
Json toJson(const SrgVerification& v);
Json toJson(const FamilySpec& f);

std::string decimal(double v);

/// Compact deterministic JSON with a trailing newline.
std::string renderJson(const Json& doc);
/// Indented "key: value" lines for terminal reading.
std::string renderText(const Json& doc);

}  // namespace kirchhoff::report
