#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "kirchhoff/error.hpp"
#include "kirchhoff/expanders.hpp"
#include "kirchhoff/extremal.hpp"
#include "kirchhoff/families.hpp"
#include "kirchhoff/io.hpp"
#include "kirchhoff/report.hpp"
#include "kirchhoff/spectral.hpp"
#include "kirchhoff/synchrony.hpp"

namespace {

using namespace kirchhoff;
using report::Json;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr unsigned kDefaultMaxTracePower = 16;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string family;
  std::optional<std::int64_t> n;
  std::vector<std::int64_t> params;
  std::string baseFamily;
  std::string file;
  std::string graph6;
};

struct Input {
  Graph graph;
  std::optional<FamilySpec> spec;
};

void addInput(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--family", in.family,
                  "Named family: cycle, complete, complete-bipartite, complete-multipartite, moebius, "
                  "complete-minus-matching, petersen, clebsch, hoffman-singleton, lattice, gkl, doubled");
  cmd->add_option("--n", in.n, "Leading family parameter (cycle length, twoN for moebius, q for lattice, ...)");
  cmd->add_option("--params", in.params, "Family parameters, comma separated")->delimiter(',');
  cmd->add_option("--base-family", in.baseFamily, "Family doubled by --family doubled");
  cmd->add_option("--file", in.file, "Edge-list file, or graph6 when the name ends in .g6 / .graph6");
  cmd->add_option("--graph6", in.graph6, "Graph given inline as a graph6 string");
}

FamilyKind familyKind(const std::string& name) {
  const auto kind = parseFamilyKind(name);
  if (!kind || *kind == FamilyKind::fromFile) throw UsageError("--family: unknown family '" + name + "'");
  return *kind;
}

FamilySpec familySpec(const InputOptions& in) {
  std::vector<std::int64_t> params = in.params;
  if (in.n) {
    if (!params.empty()) throw UsageError("--n and --params are mutually exclusive");
    params.push_back(*in.n);
  }
  FamilySpec spec;
  spec.kind = familyKind(in.family);
  if (spec.kind == FamilyKind::doubled) {
    if (in.baseFamily.empty()) throw UsageError("--family doubled needs --base-family");
    FamilySpec base;
    base.kind = familyKind(in.baseFamily);
    if (base.kind == FamilyKind::doubled) throw UsageError("--base-family cannot be doubled");
    base.params = std::move(params);
    spec.base = std::make_shared<const FamilySpec>(std::move(base));
  } else {
    if (!in.baseFamily.empty()) throw UsageError("--base-family only applies to --family doubled");
    spec.params = std::move(params);
  }
  return spec;
}

Input resolveInput(const InputOptions& in) {
  const int sources = !in.family.empty() + !in.file.empty() + !in.graph6.empty();
  if (sources != 1) throw UsageError("exactly one of --family, --file, --graph6 is required");
  if (in.family.empty() && (in.n || !in.params.empty() || !in.baseFamily.empty())) {
    throw UsageError("--n, --params and --base-family need --family");
  }
  if (!in.file.empty()) return {readGraphFile(in.file), std::nullopt};
  if (!in.graph6.empty()) return {parseGraph6(in.graph6), std::nullopt};
  FamilySpec spec = familySpec(in);
  return {build(spec), spec};
}

Json graphSummary(const Input& input) {
  Json out = report::toJson(input.graph);
  if (input.spec) out["family"] = report::toJson(*input.spec);
  return out;
}

struct FiltrationOptions {
  std::size_t order = 0;
  std::size_t size = 0;
  unsigned maxR = 3;
  bool regularOnly = false;
  bool labeled = false;
  bool allowLargeOrder = false;

  FiltrationConfig config() const {
    FiltrationConfig cfg;
    cfg.order = order;
    cfg.size = size;
    cfg.maxR = maxR;
    cfg.regularOnly = regularOnly;
    cfg.dedupIsomorphism = !labeled;
    cfg.allowLargeOrder = allowLargeOrder;
    return cfg;
  }
};

void addFiltration(CLI::App* cmd, FiltrationOptions& f) {
  cmd->add_option("--order", f.order, "Number of vertices")->required();
  cmd->add_option("--size", f.size, "Number of edges")->required();
  cmd->add_option("--max-r", f.maxR, "Number of trace levels")->check(CLI::PositiveNumber);
  cmd->add_flag("--regular-only", f.regularOnly, "Enumerate regular graphs only");
  cmd->add_flag("--labeled", f.labeled, "Enumerate labeled graphs instead of isomorphism classes");
  cmd->add_flag("--allow-large-order", f.allowLargeOrder, "Lift the enumeration envelope");
}

std::string expanderTable(const ExpanderSeries& s, double cd, std::size_t tail) {
  std::ostringstream out;
  out << "# index order size root x1 treeCount\n";
  for (const auto& p : s.points) {
    out << p.index << ' ' << p.order << ' ' << p.size << ' ' << report::decimal(p.root) << ' '
        << report::decimal(p.x1) << ' ' << toDecimal(p.treeCount) << '\n';
  }
  out << "# cd estimate (min root over last " << tail << " points): " << report::decimal(cd) << '\n';
  return out.str();
}

std::optional<SrgParams> knownSrg(const std::optional<FamilySpec>& spec) {
  if (!spec) return std::nullopt;
  switch (spec->kind) {
    case FamilyKind::petersen: return SrgParams{10, 3, 0, 1};
    case FamilyKind::clebsch: return SrgParams{16, 5, 0, 2};
    case FamilyKind::hoffmanSingleton: return SrgParams{50, 7, 0, 1};
    default: return std::nullopt;
  }
}

std::vector<std::int64_t> indexRange(std::int64_t from, std::int64_t to, std::int64_t step) {
  if (step <= 0) throw UsageError("--step must be positive");
  if (from > to) throw UsageError("--from must not exceed --to");
  std::vector<std::int64_t> out;
  for (std::int64_t i = from; i <= to; i += step) out.push_back(i);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact spanning-tree counts, Laplacian spectra and extremal-complexity searches"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  std::uint64_t rngSeed = 0;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--rng-seed", rngSeed, "Seed for every randomized path");

  InputOptions input;
  unsigned maxR = 0;
  bool allowLargeR = false;
  FiltrationOptions filtration;

  auto* gen = app.add_subcommand("gen", "Build a graph from a family or file and print it");
  addInput(gen, input);
  std::string raw;
  gen->add_option("--raw", raw, "Print only the graph in this format")->check(CLI::IsMember({"graph6", "edgelist"}));

  auto* stats = app.add_subcommand("stats", "Degree statistics, triangles Δ, connectivity and trace powers Tr(L^r)");
  addInput(stats, input);
  stats->add_option("--max-r", maxR, "Largest trace power (default 4)");
  stats->add_flag("--allow-large-r", allowLargeR, "Allow --max-r above 16");

  auto* complexity = app.add_subcommand(
      "complexity", "Spanning-tree count t(G) by the matrix-tree theorem, with closed forms and the spectral product");
  addInput(complexity, input);

  auto* spectrum = app.add_subcommand(
      "spectrum", "Laplacian spectrum, integral clusters and the two-eigenvalue model (x1, x2, n1)");
  addInput(spectrum, input);
  spectrum->add_option("--max-r", maxR, "Largest trace power (default 3)");
  spectrum->add_flag("--allow-large-r", allowLargeR, "Allow --max-r above 16");

  auto* filtrate = app.add_subcommand(
      "filtrate", "Trace filtration: keep graphs maximising (-1)^(r-1) Tr(L^r) level by level, report the champions");
  addFiltration(filtrate, filtration);

  auto* conjecture = app.add_subcommand(
      "verify-conjecture",
      "Compare the trace filtration's champions with a direct maximisation of t(G) over connected graphs");
  addFiltration(conjecture, filtration);

  auto* synchrony = app.add_subcommand(
      "synchrony", "Threshold activation process: trajectory and i*, or the measures p_k and e_k");
  addInput(synchrony, input);
  std::size_t threshold = 1;
  std::size_t k = 0;
  bool exhaustive = false;
  std::uint64_t samples = 0;
  std::vector<std::size_t> seedSet;
  synchrony->add_option("--threshold", threshold, "Activation threshold t")->check(CLI::PositiveNumber);
  synchrony->add_option("--k", k, "Seed-set size for the measures");
  synchrony->add_flag("--exhaustive", exhaustive, "Exact measures over every k-subset");
  synchrony->add_option("--samples", samples, "Monte Carlo sample count");
  synchrony->add_option("--seed-set", seedSet, "Evolve one seed set (0-based vertices, comma separated)")
      ->delimiter(',');

  auto* expander = app.add_subcommand(
      "expander", "Tree-expander series: t_n, t_n^(1/(order-1)) and the tail estimate of c_d");
  addInput(expander, input);
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::int64_t step = 1;
  std::size_t tail = 3;
  bool compareDoubled = false;
  expander->add_option("--from", from, "First index")->required();
  expander->add_option("--to", to, "Last index")->required();
  expander->add_option("--step", step, "Index step");
  expander->add_option("--tail", tail, "Points used by the c_d estimate")->check(CLI::PositiveNumber);
  expander->add_flag("--compare-doubled", compareDoubled,
                     "Also build the doubled series and compare roots position by position");

  auto* complementCmd = app.add_subcommand(
      "complement", "Complement duality: spectrum map x -> order - x, triangle identity, two-eigenvalue equivalence");
  addInput(complementCmd, input);
  std::optional<std::int64_t> superimpose;
  complementCmd->add_option("--superimpose", superimpose,
                            "Also superimpose 0..X copies of the complete graph and compare shifted spectra");

  auto* verifySrg = app.add_subcommand(
      "verify-srg", "Triangle-free strongly regular graph check: parameters, Δ = 0, spectrum and t(G)");
  addInput(verifySrg, input);
  std::vector<std::size_t> srg;
  verifySrg->add_option("--srg", srg, "Expected v,k,lambda,mu (implied for petersen, clebsch, hoffman-singleton)")
      ->delimiter(',')
      ->expected(4);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool text = format == "text";
  auto emit = [&](const Json& doc) { std::cout << (text ? report::renderText(doc) : report::renderJson(doc)); };

  try {
    if (gen->parsed()) {
      const Input in = resolveInput(input);
      if (raw == "graph6") {
        std::cout << writeGraph6(in.graph) << '\n';
      } else if (raw == "edgelist") {
        std::cout << writeEdgeList(in.graph);
      } else {
        Json doc = graphSummary(in);
        doc["edgeList"] = writeEdgeList(in.graph);
        emit(doc);
      }
    } else if (stats->parsed()) {
      const Input in = resolveInput(input);
      const unsigned r = maxR == 0 ? 4 : maxR;
      if (r > kDefaultMaxTracePower && !allowLargeR) throw UsageError("--max-r above 16 needs --allow-large-r");
      Json doc = graphSummary(in);
      doc["degrees"] = report::toJson(degreeStats(in.graph));
      doc["connected"] = isConnected(in.graph);
      doc["triangles"] = triangleCount(in.graph);
      const auto s = srgCheck(in.graph);
      doc["srg"] = s ? report::toJson(*s) : Json(nullptr);
      Json traces = Json::array();
      for (const auto& t : tracePowers(in.graph, r)) traces.push_back(report::toJson(t));
      doc["tracePowers"] = traces;
      emit(doc);
    } else if (complexity->parsed()) {
      const Input in = resolveInput(input);
      Json doc = graphSummary(in);
      const BigInt t = treeCountExact(in.graph).value;
      doc["treeCount"] = report::toJson(t);
      doc["treeCountDigits"] = toDecimal(t).size();
      const auto closed = in.spec ? closedFormTreeCount(*in.spec) : std::nullopt;
      doc["closedForm"] = closed ? report::toJson(*closed) : Json(nullptr);
      doc["closedFormAgrees"] = closed ? Json(*closed == t) : Json(nullptr);
      if (t > 0) {
        const auto sp = eigenvalues(in.graph);
        doc["treeCountSpectral"] = treeCountFromSpectrum(sp);
        const auto integral = treeCountFromIntegralSpectrum(sp);
        doc["treeCountFromIntegralSpectrum"] = integral ? report::toJson(*integral) : Json(nullptr);
      }
      emit(doc);
    } else if (spectrum->parsed()) {
      const Input in = resolveInput(input);
      const unsigned r = maxR == 0 ? 3 : maxR;
      if (r > kDefaultMaxTracePower && !allowLargeR) throw UsageError("--max-r above 16 needs --allow-large-r");
      Json doc = graphSummary(in);
      const auto sp = eigenvalues(in.graph);
      doc["spectrum"] = report::toJson(sp);
      const auto model = detectTwoEigenvalue(sp);
      doc["twoEigenvalue"] = model ? report::toJson(*model) : Json(nullptr);
      Json traces = Json::array();
      for (const auto& t : tracePowers(in.graph, r)) traces.push_back(report::toJson(t));
      doc["tracePowers"] = traces;
      emit(doc);
    } else if (filtrate->parsed()) {
      emit(report::toJson(runFiltration(filtration.config())));
    } else if (conjecture->parsed()) {
      emit(report::toJson(verifyConjecture(filtration.config())));
    } else if (synchrony->parsed()) {
      const Input in = resolveInput(input);
      Json doc = graphSummary(in);
      if (!seedSet.empty()) {
        SeedConfig cfg;
        cfg.threshold = threshold;
        cfg.seed = VertexSet(in.graph.order());
        for (auto v : seedSet) {
          if (v >= in.graph.order()) fail("index-out-of-range", "seed vertex " + std::to_string(v) + " out of range");
          cfg.seed.insert(v);
        }
        doc["outcome"] = report::toJson(evolve(in.graph, cfg));
      } else if (exhaustive) {
        if (samples != 0) throw UsageError("--exhaustive and --samples are mutually exclusive");
        doc["measures"] = report::toJson(measuresExhaustive(in.graph, threshold, k));
      } else if (samples != 0) {
        doc["measures"] = report::toJson(measuresMonteCarlo(in.graph, threshold, k, samples, rngSeed));
      } else {
        throw UsageError("synchrony needs --seed-set, --exhaustive or --samples");
      }
      emit(doc);
    } else if (expander->parsed()) {
      if (input.family.empty()) throw UsageError("expander needs --family");
      const FamilySpec spec = familySpec(input);
      const auto s = series(spec, indexRange(from, to, step));
      const double cd = cdEstimate(s, tail);
      if (text) {
        std::cout << expanderTable(s, cd, tail);
      } else {
        Json doc = report::toJson(s);
        doc["cdEstimate"] = cd;
        doc["tail"] = tail;
        doc["estimateNote"] = "cd is estimated by the minimum root over the tail, not a proven liminf";
        if (compareDoubled) {
          FamilySpec doubledSpec;
          doubledSpec.kind = FamilyKind::doubled;
          doubledSpec.base = std::make_shared<const FamilySpec>(spec);
          const auto d = series(doubledSpec, indexRange(from, to, step));
          const auto above = pointwiseAbove(d, s);
          doc["doubled"] = report::toJson(d);
          doc["doubledAbove"] = above;
          doc["doubledNote"] =
              "observation at the listed indices only; it does not establish that c_(d+1) exceeds c_d";
        }
        emit(doc);
      }
    } else if (complementCmd->parsed()) {
      const Input in = resolveInput(input);
      Json doc = graphSummary(in);
      doc["complement"] = report::toJson(complementDualityCheck(in.graph));
      if (superimpose) {
        Json rows = Json::array();
        for (const auto& row : superimposeDemo(in.graph, *superimpose)) rows.push_back(report::toJson(row));
        doc["superimpose"] = rows;
        doc["superimposeNote"] =
            "each copy of K_order adds order to every nonzero eigenvalue; the exact count follows the "
            "shift by copies * order";
      }
      emit(doc);
    } else if (verifySrg->parsed()) {
      const Input in = resolveInput(input);
      std::optional<SrgParams> expected = knownSrg(in.spec);
      if (!srg.empty()) expected = SrgParams{srg[0], srg[1], srg[2], srg[3]};
      if (!expected) throw UsageError("--srg v,k,lambda,mu is required for this input");
      const auto v = verifyTriangleFreeSrg(in.graph, *expected);
      Json doc = graphSummary(in);
      doc["verification"] = report::toJson(v);
      emit(doc);
      return v.pass() ? 0 : kExitDomain;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\nRun with --help for more information.\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
