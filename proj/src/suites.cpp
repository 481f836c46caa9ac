#include "ideallab/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "ideallab/corpus.hpp"
#include "ideallab/errors.hpp"
#include "ideallab/hypergraph.hpp"
#include "ideallab/io.hpp"
#include "ideallab/powers.hpp"
#include "ideallab/recursion.hpp"
#include "ideallab/takayama.hpp"

namespace ideallab {

Json SuiteReport::toJson() const {
  Json j;
  j["suite"] = suite;
  j["statement"] = statement;
  j["parameters"] = parameters;
  j["seed"] = seed;
  j["field"] = field.name();
  j["cases"] = cases;
  j["checks"] = checks;
  j["failures"] = failures;
  j["skipped"] = skipped;
  j["tallies"] = tallies;
  j["passed"] = passed();
  if (counterexample) j["counterexample"] = *counterexample;
  return j;
}

namespace {

constexpr std::uint64_t kAuxSeedOffset = 0x9E3779B97F4A7C15ULL;

Json idealJson(const MonomialIdeal& ideal) {
  auto vars = defaultVariableNames(ideal.numVars());
  Json j;
  j["vars"] = vars;
  j["generators"] = formatGenerators(ideal, vars);
  return j;
}

Json hypergraphJson(const Hypergraph& h) {
  Json edges = Json::array();
  for (VertexSet e : h.edges()) {
    Json edge = Json::array();
    forEachElement(e, [&](int v) { edge.push_back(h.vertexNames()[static_cast<std::size_t>(v)]); });
    edges.push_back(edge);
  }
  Json j;
  j["vertices"] = h.vertexNames();
  j["edges"] = edges;
  return j;
}

Json adjacencyJson(const std::vector<VertexSet>& adj) {
  Json edges = Json::array();
  for (std::size_t u = 0; u < adj.size(); ++u) {
    forEachElement(adj[u], [&](int v) {
      if (static_cast<std::size_t>(v) > u) edges.push_back(Json::array({u, v}));
    });
  }
  Json j;
  j["vertices"] = adj.size();
  j["edges"] = edges;
  return j;
}

int idealSize(const MonomialIdeal& ideal) {
  int total = static_cast<int>(ideal.numVars());
  for (const Monomial& g : ideal.generators()) total += g.degree();
  return total;
}

int hypergraphSize(const Hypergraph& h) {
  int total = h.vertexCount();
  for (VertexSet e : h.edges()) total += cardinality(e);
  return total;
}

Json corpusParameters() {
  IdealShape shape;
  Json p;
  p["generator"] = "mt19937_64, rejection-sampled bounded integers";
  p["vars"] = {shape.minVars, shape.maxVars};
  p["generators"] = {shape.minGens, shape.maxGens};
  p["exponent"] = {0, shape.maxExponent};
  return p;
}

class Context {
 public:
  Context(SuiteReport& report, const SuiteOptions& options)
      : report(report), options(options), corpus(options.seed), aux(options.seed + kAuxSeedOffset) {}

  void check(bool ok, int size, const std::function<Json()>& describe) {
    ++report.checks;
    if (ok) return;
    ++report.failures;
    if (!report.counterexample || size < counterexampleSize_) {
      report.counterexample = describe();
      counterexampleSize_ = size;
    }
  }
  void skip() { ++report.skipped; }
  void tally(const std::string& key, long amount = 1) {
    long current = report.tallies.contains(key) ? report.tallies[key].get<long>() : 0;
    report.tallies[key] = current + amount;
  }

  template <typename F>
  void forEachIdeal(F&& f) {
    for (int c = 0; c < report.cases; ++c) f(c, randomIdeal(corpus));
  }

  InvariantReport oracle(const MonomialIdeal& ideal, BoxOptions box = {}) {
    return oracleInvariants(ideal, options.field, options.limits, box);
  }

  SuiteReport& report;
  const SuiteOptions& options;
  CorpusRng corpus;
  CorpusRng aux;

 private:
  int counterexampleSize_ = 0;
};

// Each corpus ideal with its three heaviest variables; variables that are
// themselves generators (I:x = R) are skipped.
template <typename F>
void forEachIdealAndVariable(Context& ctx, F&& f) {
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    InvariantReport whole = ctx.oracle(ideal);
    for (int x : heaviestVariables(ideal)) {
      Monomial var = Monomial::variable(ideal.numVars(), static_cast<std::size_t>(x));
      MonomialIdeal colonIdeal = colon(ideal, var);
      if (colonIdeal.isUnit()) {
        ctx.skip();
        continue;
      }
      f(c, ideal, whole, x, ctx.oracle(colonIdeal), ctx.oracle(sumWithMonomial(ideal, var)));
    }
  });
}

Json variableCase(int c, const MonomialIdeal& ideal, int x, const InvariantReport& whole,
                  const InvariantReport& colonR, const InvariantReport& sumR) {
  Json j;
  j["case"] = c;
  j["ideal"] = idealJson(ideal);
  j["variable"] = defaultVariableNames(ideal.numVars())[static_cast<std::size_t>(x)];
  j["depth"] = {{"I", whole.depth}, {"I:x", colonR.depth}, {"(I,x)", sumR.depth}};
  j["reg"] = {{"I", whole.reg}, {"I:x", colonR.reg}, {"(I,x)", sumR.reg}};
  return j;
}

void dhsDepth(Context& ctx) {
  ctx.report.parameters["variablesPerIdeal"] = 3;
  forEachIdealAndVariable(ctx, [&](int c, const MonomialIdeal& ideal, const InvariantReport& whole, int x,
                                   const InvariantReport& colonR, const InvariantReport& sumR) {
    bool ok = whole.depth == colonR.depth || whole.depth == sumR.depth;
    ctx.check(ok, idealSize(ideal), [&] { return variableCase(c, ideal, x, whole, colonR, sumR); });
  });
}

void dhsReg(Context& ctx) {
  ctx.report.parameters["variablesPerIdeal"] = 3;
  forEachIdealAndVariable(ctx, [&](int c, const MonomialIdeal& ideal, const InvariantReport& whole, int x,
                                   const InvariantReport& colonR, const InvariantReport& sumR) {
    bool ok = whole.reg == colonR.reg + 1 || whole.reg == sumR.reg;
    ctx.check(ok, idealSize(ideal), [&] { return variableCase(c, ideal, x, whole, colonR, sumR); });
  });
}

void precise(Context& ctx) {
  ctx.report.parameters["variablesPerIdeal"] = 3;
  forEachIdealAndVariable(ctx, [&](int c, const MonomialIdeal& ideal, const InvariantReport& whole, int x,
                                   const InvariantReport& colonR, const InvariantReport& sumR) {
    bool ok;
    if (colonR.reg > sumR.reg) {
      ctx.tally("colonLarger");
      ok = whole.reg == colonR.reg + 1;
    } else if (colonR.reg < sumR.reg) {
      ctx.tally("sumLarger");
      ok = whole.reg == sumR.reg;
    } else {
      ctx.tally("tie");
      ok = whole.reg == sumR.reg || whole.reg == sumR.reg + 1;
    }
    ctx.check(ok, idealSize(ideal), [&] { return variableCase(c, ideal, x, whole, colonR, sumR); });
  });
}

void bounds(Context& ctx) {
  ctx.report.parameters["variablesPerIdeal"] = 3;
  forEachIdealAndVariable(ctx, [&](int c, const MonomialIdeal& ideal, const InvariantReport& whole, int x,
                                   const InvariantReport& colonR, const InvariantReport& sumR) {
    // Ideal regularity is quotient regularity + 1.
    const int regI = whole.reg + 1, regColon = colonR.reg + 1, regSum = sumR.reg + 1;
    bool ok = std::max(regColon, regSum) <= regI && regI <= std::max(regColon + 1, regSum);
    ctx.check(ok, idealSize(ideal), [&] { return variableCase(c, ideal, x, whole, colonR, sumR); });
  });
}

// Corpus ideals paired with a random monomial f outside I.
template <typename F>
void forEachIdealAndMonomial(Context& ctx, F&& f) {
  ctx.report.parameters["monomialDegree"] = {1, 3};
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    auto mono = randomMonomialOutside(ctx.aux, ideal, 3);
    if (!mono) {
      ctx.skip();
      return;
    }
    f(c, ideal, *mono);
  });
}

Json monomialCase(int c, const MonomialIdeal& ideal, const Monomial& f, const InvariantReport& whole,
                  const InvariantReport& colonR, const std::optional<InvariantReport>& sumR) {
  Json j;
  j["case"] = c;
  j["ideal"] = idealJson(ideal);
  j["f"] = formatMonomial(f, defaultVariableNames(ideal.numVars()));
  j["depth"] = {{"I", whole.depth}, {"I:f", colonR.depth}};
  j["reg"] = {{"I", whole.reg}, {"I:f", colonR.reg}};
  if (sumR) {
    j["depth"]["(I,f)"] = sumR->depth;
    j["reg"]["(I,f)"] = sumR->reg;
  }
  return j;
}

void inclusion(Context& ctx) {
  forEachIdealAndMonomial(ctx, [&](int c, const MonomialIdeal& ideal, const Monomial& f) {
    InvariantReport whole = ctx.oracle(ideal);
    InvariantReport colonR = ctx.oracle(colon(ideal, f));
    InvariantReport sumR = ctx.oracle(sumWithMonomial(ideal, f));
    bool ok = whole.depth == colonR.depth || whole.depth == sumR.depth;
    if (sumR.depth >= colonR.depth) {
      ctx.tally("sumAtLeastColon");
      ok = ok && whole.depth == colonR.depth;
    }
    ctx.check(ok, idealSize(ideal), [&] { return monomialCase(c, ideal, f, whole, colonR, sumR); });
  });
}

void colonMonotone(Context& ctx) {
  forEachIdealAndMonomial(ctx, [&](int c, const MonomialIdeal& ideal, const Monomial& f) {
    InvariantReport whole = ctx.oracle(ideal);
    InvariantReport colonR = ctx.oracle(colon(ideal, f));
    bool ok = whole.depth <= colonR.depth && whole.reg >= colonR.reg;
    ctx.check(ok, idealSize(ideal), [&] { return monomialCase(c, ideal, f, whole, colonR, std::nullopt); });
  });
}

void htBound(Context& ctx) {
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    InvariantReport whole = ctx.oracle(ideal);
    const int bound = lcmDegree(ideal) - height(ideal) + 1;
    ctx.check(whole.reg + 1 <= bound, idealSize(ideal), [&] {
      Json j;
      j["case"] = c;
      j["ideal"] = idealJson(ideal);
      j["regI"] = whole.reg + 1;
      j["bound"] = bound;
      return j;
    });
  });
}

void localBound(Context& ctx) {
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    InvariantReport whole = ctx.oracle(ideal);
    RegUpperBounds b = regUpperBounds(ideal, ctx.options.field, ctx.options.limits);
    ctx.check(whole.reg + 1 <= b.inductiveBound, idealSize(ideal), [&] {
      Json j;
      j["case"] = c;
      j["ideal"] = idealJson(ideal);
      j["regI"] = whole.reg + 1;
      j["inductiveBound"] = b.inductiveBound;
      return j;
    });
  });
}

// Every internal node of a trace obeys the splitting rule it records.
bool depthTraceConsistent(const RecursionTrace& trace) {
  for (const TraceNode& node : trace.nodes) {
    const int dx = node.colonValue, ds = node.sumValue, v = node.value;
    switch (node.rule) {
      case RecursionRule::Base: break;
      case RecursionRule::DepthColon:
        if (!(ds > dx && v == dx)) return false;
        break;
      case RecursionRule::DepthTie:
        if (!(ds == dx && v == dx)) return false;
        break;
      case RecursionRule::DepthAmbiguousOracle:
        if (!(ds < dx && (v == dx || v == ds))) return false;
        break;
      default: return false;
    }
  }
  return true;
}

bool regTraceConsistent(const RecursionTrace& trace) {
  for (const TraceNode& node : trace.nodes) {
    const int rx = node.colonValue, rs = node.sumValue, v = node.value;
    if (node.rule == RecursionRule::Base) continue;
    if (!(std::max(rx, rs) <= v && v <= std::max(rx + 1, rs))) return false;
    switch (node.rule) {
      case RecursionRule::RegColon:
        if (!(rx > rs && v == rx + 1)) return false;
        break;
      case RecursionRule::RegSum:
        if (!(rx < rs && v == rs)) return false;
        break;
      case RecursionRule::RegTieOracle:
        if (!(rx == rs && (v == rs || v == rs + 1))) return false;
        break;
      default: return false;
    }
  }
  return true;
}

void enginesAgree(Context& ctx) {
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    InvariantReport whole = ctx.oracle(ideal);
    RecursiveResult depth = depthRecursive(ideal, ctx.options.field, ctx.options.limits);
    RecursiveResult reg = regRecursive(ideal, ctx.options.field, ctx.options.limits);
    for (const auto* trace : {&depth.trace, &reg.trace}) {
      for (const TraceNode& node : trace->nodes) ctx.tally(ruleName(node.rule));
    }
    bool ok = depth.value == whole.depth && reg.value == whole.reg && depthTraceConsistent(depth.trace) &&
              regTraceConsistent(reg.trace);
    ctx.check(ok, idealSize(ideal), [&] {
      Json j;
      j["case"] = c;
      j["ideal"] = idealJson(ideal);
      j["oracle"] = {{"depth", whole.depth}, {"reg", whole.reg}};
      j["recursive"] = {{"depth", depth.value}, {"reg", reg.value}};
      return j;
    });
  });
}

void polarization(Context& ctx) {
  Limits wide = ctx.options.limits;
  wide.maxVars = std::max(wide.maxVars, 24);
  ctx.report.parameters["polarizedMaxVars"] = wide.maxVars;
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    InvariantReport whole = ctx.oracle(ideal);
    PolarizedIdeal pol = polarize(ideal);
    InvariantReport p = oracleInvariants(pol.ideal, ctx.options.field, wide);
    bool ok = p.reg == whole.reg && p.depth == whole.depth + pol.addedVarCount;
    ctx.check(ok, idealSize(ideal), [&] {
      Json j;
      j["case"] = c;
      j["ideal"] = idealJson(ideal);
      j["addedVarCount"] = pol.addedVarCount;
      j["original"] = {{"depth", whole.depth}, {"reg", whole.reg}};
      j["polarized"] = {{"depth", p.depth}, {"reg", p.reg}};
      return j;
    });
  });
}

void boxStability(Context& ctx) {
  ctx.report.parameters["extraPositive"] = 1;
  ctx.report.parameters["negativeValues"] = {-2, -1};
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    InvariantReport base = ctx.oracle(ideal);
    InvariantReport wide = ctx.oracle(ideal, BoxOptions{1, true});
    bool ok = base.depth == wide.depth && base.reg == wide.reg;
    ctx.check(ok, idealSize(ideal), [&] {
      Json j;
      j["case"] = c;
      j["ideal"] = idealJson(ideal);
      j["box"] = {{"depth", base.depth}, {"reg", base.reg}};
      j["enlarged"] = {{"depth", wide.depth}, {"reg", wide.reg}};
      return j;
    });
  });
}

Json rowsJson(const std::vector<PowersRow>& rows) {
  Json out = Json::array();
  for (const PowersRow& r : rows) {
    Json j;
    j["t"] = r.t;
    j["depth"] = r.depthQ;
    j["reg"] = r.regQ;
    if (r.depthClosure) j["depthClosure"] = *r.depthClosure;
    if (r.regClosure) j["regClosure"] = *r.regClosure;
    out.push_back(j);
  }
  return out;
}

void leafPowers(Context& ctx) {
  constexpr int kMaxT = 3;
  ctx.report.parameters["maxVertices"] = 6;
  ctx.report.parameters["maxEdges"] = 5;
  ctx.report.parameters["maxT"] = kMaxT;
  for (int c = 0; c < ctx.report.cases; ++c) {
    Hypergraph h;
    int draws = 0;
    do {
      h = randomAntichainHypergraph(ctx.corpus, 6, 5);
      ++draws;
    } while (!goodLeaf(h));
    ctx.tally("draws", draws);
    LeafColonReport leaf = goodLeafColonCheck(h, kMaxT, ctx.options.limits);
    std::vector<PowersRow> rows = powersTable(edgeIdeal(h), kMaxT, true, ctx.options.field, ctx.options.limits);
    bool ok = leaf.allHold() && isMonotone(rows);
    ctx.check(ok, hypergraphSize(h), [&] {
      Json j;
      j["case"] = c;
      j["hypergraph"] = hypergraphJson(h);
      j["leafEdge"] = leaf.leafEdge;
      Json steps = Json::array();
      for (const auto& s : leaf.steps) {
        steps.push_back({{"t", s.t}, {"power", s.powerIdentity}, {"closure", s.closureIdentity}});
      }
      j["colonIdentities"] = steps;
      j["rows"] = rowsJson(rows);
      return j;
    });
  }
}

void addVariable(Context& ctx) {
  constexpr int kMaxS = 3;
  ctx.report.parameters["maxS"] = kMaxS;
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    auto rows = addedVariablePowers(ideal, kMaxS, ctx.options.field, ctx.options.limits);
    bool ok = std::all_of(rows.begin(), rows.end(), [](const AddedVariableRow& r) { return r.holds(); });
    // Monotone in s: depth non-increasing, reg - s non-decreasing.
    for (std::size_t k = 1; k < rows.size(); ++k) {
      ok = ok && rows[k].depthLhs <= rows[k - 1].depthLhs && rows[k].regLhs >= rows[k - 1].regLhs;
    }
    ctx.check(ok, idealSize(ideal), [&] {
      Json j;
      j["case"] = c;
      j["ideal"] = idealJson(ideal);
      Json out = Json::array();
      for (const auto& r : rows) {
        out.push_back({{"s", r.s},
                       {"depthLhs", r.depthLhs},
                       {"depthRhs", r.depthRhs},
                       {"regLhs", r.regLhs},
                       {"regRhs", r.regRhs}});
      }
      j["rows"] = out;
      return j;
    });
  });
}

void assChain(Context& ctx) {
  constexpr int kMaxS = 3;
  ctx.report.parameters["maxS"] = kMaxS;
  ctx.forEachIdeal([&](int c, const MonomialIdeal& ideal) {
    AssChainReport r = assChainCheck(ideal, kMaxS, ctx.options.limits);
    ctx.check(r.holds(), idealSize(ideal), [&] {
      Json j;
      j["case"] = c;
      j["ideal"] = idealJson(ideal);
      auto vars = defaultVariableNames(ideal.numVars() + 1);
      vars.back() = "x";
      Json ass = Json::array();
      for (const auto& primes : r.ass) {
        Json level = Json::array();
        for (const auto& p : primes) level.push_back(formatVertexSet(p.vars, vars));
        ass.push_back(level);
      }
      j["ass"] = ass;
      return j;
    });
  });
}

bool hasTwins(const std::vector<VertexSet>& adj) {
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (std::size_t v = u + 1; v < adj.size(); ++v) {
      if (adj[u] == adj[v]) return true;
    }
  }
  return false;
}

// Some perfect matching of the graph on `remaining`, lowest vertex first.
bool findPerfectMatching(const std::vector<VertexSet>& adj, VertexSet remaining, Matching& m) {
  if (remaining == 0) return true;
  const int v = std::countr_zero(remaining);
  VertexSet options = adj[static_cast<std::size_t>(v)] & remaining;
  while (options != 0) {
    const int u = std::countr_zero(options);
    options &= options - 1;
    m.edges.push_back(singleton(v) | singleton(u));
    if (findPerfectMatching(adj, remaining & ~singleton(v) & ~singleton(u), m)) return true;
    m.edges.pop_back();
  }
  return false;
}

// Every labeled graph on an even number of vertices, visited in Gray-code
// order so that consecutive graphs differ in one edge.
void cmVwc(Context& ctx) {
  const int maxVertices = std::min(ctx.options.maxVertices, 8);
  ctx.report.parameters["maxVertices"] = maxVertices;
  ctx.report.parameters["enumeration"] = "all labeled graphs on an even number of vertices with a perfect matching";
  ctx.report.cases = 0;
  for (int n = 2; n <= maxVertices; n += 2) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
    long withMatching = 0, vwc = 0, cm = 0;
    for (std::uint64_t step = 0; step < total; ++step) {
      if (step > 0) {
        auto [u, v] = pairs[static_cast<std::size_t>(std::countr_zero(step))];
        adj[static_cast<std::size_t>(u)] ^= singleton(v);
        adj[static_cast<std::size_t>(v)] ^= singleton(u);
      }
      Matching first;
      if (!findPerfectMatching(adj, fullSet(n), first)) continue;
      ++withMatching;
      ++ctx.report.cases;
      const bool veryWell = coverClassification(adj).kind == CoverClass::VeryWellCovered;
      // Favaron: very well-covered iff a perfect matching has no triangle edge
      // and closes every path of length 3 around a matching edge; when it is,
      // every perfect matching does.
      FavaronFlags flags = favaronChecks(adj, first);
      ctx.check((flags.noTriangleEdge && flags.pathEndpointAdjacency) == veryWell, n,
                [&] { return Json{{"graph", adjacencyJson(adj)}, {"check", "matching characterization"}}; });
      if (!veryWell) continue;
      ++vwc;
      Graph g = Graph::fromAdjacency(adj);
      const bool twinFree = !hasTwins(adj);
      const bool cohenMacaulay = isCohenMacaulay(g.hypergraph(), ctx.options.field, ctx.options.limits);
      if (cohenMacaulay) ++cm;
      ctx.check(cohenMacaulay == twinFree, n, [&] {
        return Json{{"graph", adjacencyJson(adj)}, {"cohenMacaulay", cohenMacaulay}, {"twinFree", twinFree}};
      });
      bool goodMatching = false;
      for (const Matching& m : perfectMatchings(g)) {
        if (favaronChecks(adj, m).noC4TwoMatchingEdges) {
          goodMatching = true;
          break;
        }
      }
      ctx.check(goodMatching == twinFree, n, [&] {
        return Json{{"graph", adjacencyJson(adj)}, {"check", "matching without C4"}, {"twinFree", twinFree}};
      });
    }
    ctx.tally("graphs" + std::to_string(n), static_cast<long>(total));
    ctx.tally("perfectMatching" + std::to_string(n), withMatching);
    ctx.tally("veryWellCovered" + std::to_string(n), vwc);
    ctx.tally("cohenMacaulay" + std::to_string(n), cm);
  }
}

// reg R/I(G) on the support of G; an edgeless graph has reg R/0 = 0.
int graphQuotientReg(Context& ctx, const Graph& g) {
  if (g.edges().empty()) return 0;
  return ctx.oracle(edgeIdeal(restrictToSupport(g.hypergraph()))).reg;
}

void froberg(Context& ctx) {
  const int exhaustive = std::min(ctx.options.maxVertices, 5);
  ctx.report.parameters["exhaustiveUpTo"] = exhaustive;
  ctx.report.parameters["randomVertices"] = {6, std::max(6, ctx.options.maxVertices)};
  auto checkGraph = [&](const std::vector<VertexSet>& adj) {
    Graph g = Graph::fromAdjacency(adj);
    const int reg = graphQuotientReg(ctx, g);
    const bool chordal = isChordal(g.complement());
    ctx.check((reg <= 1) == chordal, static_cast<int>(adj.size()) + static_cast<int>(g.edges().size()), [&] {
      return Json{{"graph", adjacencyJson(adj)}, {"reg", reg}, {"complementChordal", chordal}};
    });
  };
  const int randomCases = ctx.report.cases;
  ctx.report.cases = 0;
  for (int n = 1; n <= exhaustive; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      std::vector<VertexSet> adj(static_cast<std::size_t>(n), 0);
      for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask & (std::uint64_t{1} << k)) {
          adj[static_cast<std::size_t>(pairs[k].first)] |= singleton(pairs[k].second);
          adj[static_cast<std::size_t>(pairs[k].second)] |= singleton(pairs[k].first);
        }
      }
      checkGraph(adj);
      ++ctx.report.cases;
    }
    ctx.tally("graphs" + std::to_string(n), static_cast<long>(total));
  }
  if (ctx.options.maxVertices >= 6) {
    for (int c = 0; c < randomCases; ++c) {
      checkGraph(randomAdjacency(ctx.corpus, ctx.corpus.uniform(6, ctx.options.maxVertices)));
      ++ctx.report.cases;
    }
    ctx.tally("random", randomCases);
  }
}

void clawGap(Context& ctx) {
  const int maxVertices = std::max(2, ctx.options.maxVertices);
  ctx.report.parameters["vertices"] = {2, maxVertices};
  ctx.report.parameters["edgeProbability"] = "1/2";
  long draws = 0;
  for (int c = 0; c < ctx.report.cases; ++c) {
    std::vector<VertexSet> adj;
    while (true) {
      ++draws;
      adj = randomAdjacency(ctx.corpus, ctx.corpus.uniform(2, maxVertices));
      Graph g = Graph::fromAdjacency(adj);
      if (g.edges().empty()) continue;
      PatternFlags flags = patternChecks(g);
      if (flags.clawFree && flags.gapFree) break;
    }
    Graph g = Graph::fromAdjacency(adj);
    const int reg = graphQuotientReg(ctx, g);
    ctx.check(reg <= 2, static_cast<int>(adj.size()), [&] { return Json{{"graph", adjacencyJson(adj)}, {"reg", reg}}; });
  }
  ctx.tally("draws", draws);
}

std::vector<Hypergraph> reg3Fixtures() {
  std::vector<Hypergraph> out;
  out.push_back(Hypergraph({"a", "b", "c"}, {0b111}));
  for (int n = 4; n <= 5; ++n) {
    std::vector<VertexSet> triples;
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
      if (cardinality(s) == 3) triples.push_back(s);
    }
    out.push_back(Hypergraph::anonymous(n, triples));
  }
  return out;
}

void reg3(Context& ctx) {
  ctx.report.parameters["fixtures"] = "single triple, all triples on 4 and 5 vertices";
  ctx.report.parameters["random"] = "3-uniform, 3..6 vertices, each triple with probability 1/2, hypothesis by rejection";
  auto checkOne = [&](const Hypergraph& h) {
    const int reg = ctx.oracle(edgeIdeal(h)).reg;
    ctx.check(reg <= 2, hypergraphSize(h), [&] { return Json{{"hypergraph", hypergraphJson(h)}, {"reg", reg}}; });
  };
  for (const Hypergraph& h : reg3Fixtures()) {
    if (!reg3Hypothesis(h)) throw AssertionFailure("reg3 fixture does not satisfy the hypothesis");
    checkOne(h);
  }
  long draws = 0;
  for (int c = 0; c < ctx.report.cases; ++c) {
    Hypergraph h;
    while (true) {
      ++draws;
      const int n = ctx.corpus.uniform(3, 6);
      std::vector<VertexSet> triples;
      for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        if (cardinality(s) == 3 && ctx.corpus.coin()) triples.push_back(s);
      }
      if (triples.empty()) continue;
      h = restrictToSupport(Hypergraph::anonymous(n, triples));
      if (reg3Hypothesis(h)) break;
    }
    checkOne(h);
  }
  ctx.tally("draws", draws);
}

struct SuiteSpec {
  const char* name;
  const char* statement;
  int defaultCases;
  bool usesCorpus;
  void (*run)(Context&);
};

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> suites = {
      {"dhs-depth", "depth R/I lies in {depth R/(I:x), depth R/(I,x)} for a variable x", 200, true, dhsDepth},
      {"dhs-reg", "reg R/I lies in {reg R/(I:x) + 1, reg R/(I,x)} for a variable x", 200, true, dhsReg},
      {"precise",
       "reg R/I = reg R/(I:x) + 1 if reg R/(I:x) > reg R/(I,x); = reg R/(I,x) if reg R/(I:x) < reg R/(I,x); "
       "in {reg R/(I,x), reg R/(I,x) + 1} on a tie",
       200, true, precise},
      {"bounds", "max{reg(I:x), reg(I,x)} <= reg I <= max{reg(I:x) + 1, reg(I,x)}", 200, true, bounds},
      {"inclusion",
       "for a monomial f: depth R/I lies in {depth R/(I:f), depth R/(I,f)}, and depth R/I = depth R/(I:f) "
       "when depth R/(I,f) >= depth R/(I:f)",
       200, true, inclusion},
      {"colon-monotone", "for a monomial f: depth R/I <= depth R/(I:f) and reg R/I >= reg R/(I:f)", 200, true,
       colonMonotone},
      {"ht-bound", "reg I <= deg lcm(I) - height I + 1", 200, true, htBound},
      {"local-bound", "if reg(I:x) <= r for every variable x then reg I <= r + 1", 200, true, localBound},
      {"engines-agree", "the splitting recursion and the degree-complex oracle agree on depth and reg", 200, true,
       enginesAgree},
      {"polarization", "polarization preserves reg R/I and raises depth R/I by the number of added variables", 200,
       true, polarization},
      {"box-stability", "enlarging the degree-complex box leaves depth and reg unchanged", 200, true, boxStability},
      {"leaf-powers",
       "with a good leaf f: I^{t+1}:f = I^t and closure(I^{t+1}):f = closure(I^t); depth R/I^t is non-increasing "
       "and reg R/I^t non-decreasing, also for the closures",
       50, false, leafPowers},
      {"add-variable",
       "for a new variable x: depth S/(I,x)^s = min_{t<=s} depth R/I^t and reg S/(I,x)^s - s = "
       "max_{t<=s} (reg R/I^t - t), both monotone in s",
       30, true, addVariable},
      {"ass-chain", "for a new variable x: Ass (I,x)^t is contained in Ass (I,x)^{t+1}", 30, true, assChain},
      {"cm-vwc", "a very well-covered graph is Cohen-Macaulay if and only if it is twin-free", 0, false, cmVwc},
      {"froberg", "reg R/I(G) <= 1 if and only if the complement of G is chordal", 100, false, froberg},
      {"claw-gap", "a claw-free and gap-free graph G has reg R/I(G) <= 2", 100, false, clawGap},
      {"reg3", "if every H:x is a graph with chordal complement then reg R/I(H) <= 2", 100, false, reg3},
  };
  return suites;
}

const SuiteSpec& findSuite(const std::string& name) {
  for (const SuiteSpec& s : registry()) {
    if (name == s.name) return s;
  }
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const SuiteSpec& s : registry()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

int defaultCases(const std::string& suite) { return findSuite(suite).defaultCases; }

SuiteReport runSuite(const std::string& suite, const SuiteOptions& options) {
  const SuiteSpec& spec = findSuite(suite);
  SuiteReport report;
  report.suite = spec.name;
  report.statement = spec.statement;
  report.seed = options.seed;
  report.field = options.field;
  report.cases = options.cases > 0 ? options.cases : spec.defaultCases;
  if (spec.usesCorpus) report.parameters["corpus"] = corpusParameters();
  Context ctx(report, options);
  spec.run(ctx);
  return report;
}

}  // namespace ideallab
