#include "ideallab/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ideallab/errors.hpp"
#include "ideallab/hypergraph.hpp"
#include "ideallab/io.hpp"
#include "ideallab/powers.hpp"
#include "ideallab/recursion.hpp"
#include "ideallab/suites.hpp"
#include "ideallab/takayama.hpp"

namespace ideallab::cli {

namespace {

using Json = nlohmann::ordered_json;

// Human-readable rendering of a report object.
void renderText(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, value] : j.items()) {
    const bool nested = value.is_object() ||
                        (value.is_array() && std::any_of(value.begin(), value.end(),
                                                         [](const Json& v) { return v.is_structured(); }));
    if (!nested) {
      out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      continue;
    }
    out << pad << key << ":\n";
    if (value.is_object()) {
      renderText(value, out, indent + 2);
      continue;
    }
    for (const Json& item : value) {
      if (item.is_object()) {
        out << pad << "  -\n";
        renderText(item, out, indent + 4);
      } else {
        out << pad << "  - " << item.dump() << '\n';
      }
    }
  }
}

Json idealJson(const IdealFile& file) {
  Json j;
  j["vars"] = file.vars;
  j["generators"] = formatGenerators(file.ideal, file.vars);
  return j;
}

Json idealJson(const MonomialIdeal& ideal, const std::vector<std::string>& vars) {
  return idealJson(IdealFile{vars, ideal});
}

Json witnessJson(const InvariantWitness& w, const std::vector<std::string>& vars) {
  Json j;
  j["a"] = w.a.entries;
  j["i"] = w.i;
  Json g = Json::array();
  forEachElement(w.a.negativeSupport(), [&](int v) { g.push_back(vars[static_cast<std::size_t>(v)]); });
  j["Ga"] = g;
  j["value"] = w.value;
  return j;
}

Json traceJson(const RecursionTrace& trace, const std::vector<std::string>& vars) {
  Json nodes = Json::array();
  for (std::size_t k = 0; k < trace.nodes.size(); ++k) {
    const TraceNode& n = trace.nodes[k];
    Json j;
    j["id"] = k;
    j["ideal"] = n.idealKey;
    j["rule"] = ruleName(n.rule);
    j["value"] = n.value;
    if (n.rule != RecursionRule::Base) {
      j["variable"] = vars[static_cast<std::size_t>(n.variable)];
      j["colon"] = {{"node", n.colonChild}, {"value", n.colonValue}};
      j["sum"] = {{"node", n.sumChild}, {"value", n.sumValue}};
    }
    if (n.oracleWitness) j["oracleWitness"] = witnessJson(*n.oracleWitness, vars);
    nodes.push_back(j);
  }
  return Json{{"root", trace.root}, {"nodes", nodes}};
}

struct Common {
  bool json = false;
  std::string field = "q";
};

void addCommon(CLI::App* cmd, Common& common, bool withField) {
  cmd->add_flag("--json", common.json, "Print the report as JSON");
  if (withField) cmd->add_option("--field", common.field, "Coefficient field: q or f<p>")->capture_default_str();
}

int emit(const Json& report, const Common& common, std::ostream& out) {
  if (common.json) {
    out << report.dump(2) << '\n';
  } else {
    renderText(report, out);
  }
  return kOk;
}

int cmdInvariants(const std::string& path, const std::string& engine, const Common& common, std::ostream& out) {
  IdealFile file = readIdealFile(path);
  FieldSpec field = FieldSpec::parse(common.field);
  if (engine != "oracle" && engine != "recursive" && engine != "both") {
    throw InvalidArgument("--engine must be oracle, recursive or both");
  }
  Json report;
  report["command"] = "invariants";
  report["input"] = idealJson(file);
  report["field"] = field.name();
  report["dimension"] = dimension(file.ideal);
  Json results = Json::array();
  std::optional<InvariantReport> oracle;
  std::optional<std::pair<int, int>> recursive;
  if (engine != "recursive") {
    oracle = oracleInvariants(file.ideal, field);
    Json r;
    r["engine"] = "oracle";
    r["depth"] = oracle->depth;
    r["reg"] = oracle->reg;
    r["witnesses"] = {{"depth", witnessJson(*oracle->depthWitness, file.vars)},
                      {"reg", witnessJson(*oracle->regWitness, file.vars)}};
    results.push_back(r);
  }
  if (engine != "oracle") {
    RecursiveResult d = depthRecursive(file.ideal, field);
    RecursiveResult g = regRecursive(file.ideal, field);
    recursive = {d.value, g.value};
    Json r;
    r["engine"] = "recursive";
    r["depth"] = d.value;
    r["reg"] = g.value;
    r["traces"] = {{"depth", traceJson(d.trace, file.vars)}, {"reg", traceJson(g.trace, file.vars)}};
    results.push_back(r);
  }
  report["results"] = results;
  if (oracle && recursive) {
    const bool agree = oracle->depth == recursive->first && oracle->reg == recursive->second;
    report["enginesAgree"] = agree;
    emit(report, common, out);
    return agree ? kOk : kAssertionFailed;
  }
  return emit(report, common, out);
}

int cmdIdealOp(const std::string& op, const std::string& path, const std::string& arg, const Common& common,
               std::ostream& out) {
  IdealFile file = readIdealFile(path);
  Json report;
  report["command"] = op;
  report["input"] = idealJson(file);
  if (op == "colon" || op == "sum") {
    Monomial f = parseMonomial(arg, file.vars);
    report["monomial"] = formatMonomial(f, file.vars);
    MonomialIdeal result = op == "colon" ? colon(file.ideal, f) : sumWithMonomial(file.ideal, f);
    report["result"] = idealJson(result, file.vars);
  } else if (op == "power") {
    int t = 0;
    try {
      t = std::stoi(arg);
    } catch (const std::exception&) {
      throw InvalidArgument("power exponent must be an integer");
    }
    report["t"] = t;
    report["result"] = idealJson(power(file.ideal, t), file.vars);
  } else if (op == "closure") {
    report["result"] = idealJson(integralClosure(file.ideal), file.vars);
  } else if (op == "ass") {
    Json primes = Json::array();
    for (const PrimeSupport& p : associatedPrimes(file.ideal)) primes.push_back(formatVertexSet(p.vars, file.vars));
    report["associatedPrimes"] = primes;
    Json minimal = Json::array();
    for (const PrimeSupport& p : minimalPrimes(file.ideal)) minimal.push_back(formatVertexSet(p.vars, file.vars));
    report["minimalPrimes"] = minimal;
    report["height"] = height(file.ideal);
  }
  return emit(report, common, out);
}

int cmdPowers(const std::string& path, int maxT, bool closure, const Common& common, std::ostream& out) {
  IdealFile file = readIdealFile(path);
  FieldSpec field = FieldSpec::parse(common.field);
  auto rows = powersTable(file.ideal, maxT, closure, field);
  Json report;
  report["command"] = "powers";
  report["input"] = idealJson(file);
  report["field"] = field.name();
  Json table = Json::array();
  for (const PowersRow& r : rows) {
    Json j;
    j["t"] = r.t;
    j["depth"] = r.depthQ;
    j["reg"] = r.regQ;
    if (r.depthClosure) j["depthClosure"] = *r.depthClosure;
    if (r.regClosure) j["regClosure"] = *r.regClosure;
    table.push_back(j);
  }
  report["rows"] = table;
  report["monotone"] = isMonotone(rows);
  return emit(report, common, out);
}

Json setsJson(const std::vector<VertexSet>& sets, const std::vector<std::string>& names) {
  Json out = Json::array();
  for (VertexSet s : sets) out.push_back(formatVertexSet(s, names));
  return out;
}

int cmdGraph(const std::string& path, const std::string& check, int maxT, const Common& common, std::ostream& out) {
  Hypergraph h = readHypergraphFile(path);
  FieldSpec field = FieldSpec::parse(common.field);
  const auto& names = h.vertexNames();
  Json report;
  report["command"] = "graph";
  report["check"] = check;
  report["vertices"] = names;
  report["edges"] = setsJson(h.edges(), names);
  auto asGraph = [&] {
    if (!h.isGraph()) throw InvalidArgument("--check " + check + " needs a graph (all edges of size 2)");
    return Graph(h);
  };
  if (check == "chordal") {
    Graph g = asGraph();
    report["chordal"] = isChordal(g);
    Json order = Json::array();
    for (int v : maximumCardinalitySearch(g)) order.push_back(names[static_cast<std::size_t>(v)]);
    report["searchOrder"] = order;
  } else if (check == "claw" || check == "gap" || check == "twins") {
    PatternFlags flags = patternChecks(asGraph());
    if (check == "claw") report["clawFree"] = flags.clawFree;
    if (check == "gap") report["gapFree"] = flags.gapFree;
    if (check == "twins") {
      Json twins = Json::array();
      for (auto [u, v] : flags.twins) twins.push_back({names[static_cast<std::size_t>(u)], names[static_cast<std::size_t>(v)]});
      report["twins"] = twins;
      report["twinFree"] = flags.twins.empty();
    }
  } else if (check == "cover") {
    CoverClassification c = coverClassification(asGraph());
    report["classification"] = coverClassName(c.kind);
    report["witness"] = setsJson(c.witness, names);
  } else if (check == "good-leaf") {
    h.requireAntichain();
    auto leaf = goodLeaf(h);
    report["goodLeaf"] = leaf ? Json(formatVertexSet(h.edges()[*leaf], names)) : Json(nullptr);
    if (maxT > 1) {
      LeafColonReport r = goodLeafColonCheck(h, maxT);
      Json steps = Json::array();
      for (const auto& s : r.steps) {
        steps.push_back({{"t", s.t}, {"powerIdentity", s.powerIdentity}, {"closureIdentity", s.closureIdentity}});
      }
      report["colonIdentities"] = steps;
      emit(report, common, out);
      return r.allHold() ? kOk : kAssertionFailed;
    }
  } else if (check == "cm") {
    MonomialIdeal ideal = edgeIdeal(h);
    report["depth"] = depthOracle(ideal, field).value;
    report["dimension"] = dimension(ideal);
    report["cohenMacaulay"] = isCohenMacaulay(h, field);
    report["field"] = field.name();
  } else if (check == "reg3") {
    const bool hypothesis = reg3Hypothesis(h);
    report["hypothesis"] = hypothesis;
    report["reg"] = regOracle(edgeIdeal(h), field).value;
    report["field"] = field.name();
  } else if (check == "favaron") {
    Graph g = asGraph();
    Json matchings = Json::array();
    for (const Matching& m : perfectMatchings(g)) {
      FavaronFlags f = favaronChecks(g, m);
      Json j;
      j["matching"] = setsJson(m.edges, names);
      j["noTriangleEdge"] = f.noTriangleEdge;
      j["pathEndpointAdjacency"] = f.pathEndpointAdjacency;
      j["noC4TwoMatchingEdges"] = f.noC4TwoMatchingEdges;
      matchings.push_back(j);
    }
    report["perfectMatchings"] = matchings;
  } else {
    throw InvalidArgument("unknown check '" + check + "'");
  }
  return emit(report, common, out);
}

std::vector<int> parseIntList(const std::string& text) {
  std::vector<int> out;
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InvalidArgument("bad integer '" + tok + "' in --a");
    }
  }
  return out;
}

int cmdComplex(const std::string& path, const std::string& a, const Common& common, std::ostream& out) {
  IdealFile file = readIdealFile(path);
  FieldSpec field = FieldSpec::parse(common.field);
  DegreeVector degree{parseIntList(a)};
  SimplicialComplex c = degreeComplex(file.ideal, degree);
  Json report;
  report["command"] = "complex";
  report["input"] = idealJson(file);
  report["a"] = degree.entries;
  Json g = Json::array();
  forEachElement(degree.negativeSupport(), [&](int v) { g.push_back(file.vars[static_cast<std::size_t>(v)]); });
  report["Ga"] = g;
  report["void"] = c.isVoid();
  report["facets"] = setsJson(c.facets(), file.vars);
  Json ranks = Json::array();
  auto h = reducedHomologyRanks(c, field);
  for (std::size_t k = 0; k < h.size(); ++k) {
    ranks.push_back({{"dimension", static_cast<int>(k) - 1}, {"rank", h[k]}});
  }
  report["field"] = field.name();
  report["reducedHomology"] = ranks;
  return emit(report, common, out);
}

int cmdVerify(const std::string& suite, int cases, std::uint64_t seed, int maxVertices, const Common& common,
              std::ostream& out) {
  SuiteOptions options;
  options.cases = cases;
  options.seed = seed;
  options.field = FieldSpec::parse(common.field);
  options.maxVertices = maxVertices;
  SuiteReport report = runSuite(suite, options);
  Json j;
  j["command"] = "verify";
  const Json body = report.toJson();
  for (const auto& [key, value] : body.items()) j[key] = value;
  emit(j, common, out);
  return report.passed() ? kOk : kAssertionFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Depth and regularity of monomial ideals", "ideal-lab"};
  app.require_subcommand(1);
  Common common;
  std::string path, arg, engine = "oracle", check, a, suite;
  int maxT = 0, cases = 0, maxVertices = 8;
  std::uint64_t seed = 1;
  bool closure = false;

  auto* inv = app.add_subcommand("invariants", "depth and reg of R/I");
  inv->add_option("ideal", path, "Ideal file")->required();
  inv->add_option("--engine", engine, "oracle, recursive or both")->capture_default_str();
  addCommon(inv, common, true);

  std::vector<CLI::App*> ops;
  for (const char* op : {"colon", "sum"}) {
    auto* cmd = app.add_subcommand(op, std::string(op) + " with a monomial");
    cmd->add_option("ideal", path, "Ideal file")->required();
    cmd->add_option("monomial", arg, "Monomial, e.g. x^2*y or 2,1,0")->required();
    addCommon(cmd, common, false);
    ops.push_back(cmd);
  }
  auto* pow = app.add_subcommand("power", "t-th power");
  pow->add_option("ideal", path, "Ideal file")->required();
  pow->add_option("t", arg, "Exponent")->required();
  addCommon(pow, common, false);
  ops.push_back(pow);
  for (const char* op : {"closure", "ass"}) {
    auto* cmd = app.add_subcommand(op, op == std::string("closure") ? "integral closure" : "associated primes");
    cmd->add_option("ideal", path, "Ideal file")->required();
    addCommon(cmd, common, false);
    ops.push_back(cmd);
  }

  auto* powers = app.add_subcommand("powers", "depth and reg of R/I^t");
  powers->add_option("ideal", path, "Ideal file")->required();
  powers->add_option("--max-t", maxT, "Largest exponent")->required()->check(CLI::PositiveNumber);
  powers->add_flag("--closure", closure, "Also report the integral closures of the powers");
  addCommon(powers, common, true);

  auto* graph = app.add_subcommand("graph", "combinatorial checks on a hypergraph file");
  graph->add_option("hypergraph", path, "Hypergraph file")->required();
  graph->add_option("--check", check, "chordal|claw|gap|twins|cover|good-leaf|cm|reg3|favaron")
      ->required()
      ->check(CLI::IsMember({"chordal", "claw", "gap", "twins", "cover", "good-leaf", "cm", "reg3", "favaron"}));
  graph->add_option("--max-t", maxT, "With good-leaf: verify the colon identities up to this power");
  addCommon(graph, common, true);

  auto* complex = app.add_subcommand("complex", "degree complex and its reduced homology");
  complex->add_option("ideal", path, "Ideal file")->required();
  complex->add_option("--a", a, "Degree vector, comma separated")->required();
  addCommon(complex, common, true);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suiteNames()));
  verify->add_option("--cases", cases, "Number of random instances (default: suite size)");
  verify->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  verify->add_option("--max-vertices", maxVertices, "Largest graph in the graph sweeps")->capture_default_str();
  addCommon(verify, common, true);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (inv->parsed()) return cmdInvariants(path, engine, common, out);
    for (auto* cmd : ops) {
      if (cmd->parsed()) return cmdIdealOp(cmd->get_name(), path, arg, common, out);
    }
    if (powers->parsed()) return cmdPowers(path, maxT, closure, common, out);
    if (graph->parsed()) return cmdGraph(path, check, maxT, common, out);
    if (complex->parsed()) return cmdComplex(path, a, common, out);
    if (verify->parsed()) return cmdVerify(suite, cases, seed, maxVertices, common, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const AssertionFailure& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kAssertionFailed;
  }
  return kUsageError;
}

}  // namespace ideallab::cli
