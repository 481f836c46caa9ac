#include "ideallab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "ideallab/errors.hpp"

namespace ideallab {

namespace {

std::string stripComment(const std::string& line) {
  auto hash = line.find('#');
  std::string s = hash == std::string::npos ? line : line.substr(0, hash);
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> splitWhitespace(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

bool parseInt(const std::string& s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool isIdentifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

void requireUniqueNames(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!isIdentifier(n)) throw InvalidArgument(std::string("invalid ") + what + " name '" + n + "'");
    if (!seen.insert(n).second) throw InvalidArgument(std::string("duplicate ") + what + " '" + n + "'");
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Monomial parseProduct(const std::string& text, const std::vector<std::string>& vars) {
  std::vector<int> exps(vars.size(), 0);
  if (text == "1") return Monomial(std::move(exps));
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t star = text.find('*', start);
    std::string factor = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
    std::string name = factor;
    int power = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      if (!parseInt(factor.substr(caret + 1), power) || power < 0) {
        throw InvalidArgument("bad exponent in '" + factor + "'");
      }
    }
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw InvalidArgument("unknown variable '" + name + "'");
    exps[static_cast<std::size_t>(it - vars.begin())] += power;
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return Monomial(std::move(exps));
}

}  // namespace

Monomial parseMonomial(const std::string& text, const std::vector<std::string>& vars) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  auto tokens = splitWhitespace(s);
  if (tokens.empty()) throw InvalidArgument("empty monomial");
  std::vector<int> exps;
  bool numeric = true;
  for (const auto& t : tokens) {
    int v = 0;
    if (!parseInt(t, v)) {
      numeric = false;
      break;
    }
    exps.push_back(v);
  }
  if (numeric && exps.size() == vars.size()) {
    if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0; })) {
      throw InvalidArgument("negative exponent in '" + text + "'");
    }
    return Monomial(std::move(exps));
  }
  if (tokens.size() != 1) throw InvalidArgument("cannot parse monomial '" + text + "'");
  return parseProduct(tokens.front(), vars);
}

std::string formatMonomial(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t j = 0; j < m.numVars(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[j];
    if (m[j] > 1) out += '^' + std::to_string(m[j]);
  }
  return out.empty() ? "1" : out;
}

std::vector<std::string> formatGenerators(const MonomialIdeal& ideal, const std::vector<std::string>& vars) {
  std::vector<std::string> out;
  for (const Monomial& g : ideal.generators()) out.push_back(formatMonomial(g, vars));
  return out;
}

std::vector<std::string> defaultVariableNames(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= n; ++j) names.push_back("x" + std::to_string(j));
  return names;
}

IdealFile parseIdealFile(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  IdealFile file;
  bool haveHeader = false;
  std::vector<Monomial> gens;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string line = stripComment(raw);
    if (line.empty()) continue;
    try {
      if (!haveHeader) {
        auto tokens = splitWhitespace(line);
        if (tokens.front() != "vars" || tokens.size() < 2) throw InvalidArgument("expected 'vars <name>+' header");
        file.vars.assign(tokens.begin() + 1, tokens.end());
        requireUniqueNames(file.vars, "variable");
        haveHeader = true;
        continue;
      }
      gens.push_back(parseMonomial(line, file.vars));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  if (!haveHeader) throw InvalidArgument("missing 'vars' header");
  file.ideal = MonomialIdeal::normalize(std::move(gens), file.vars.size());
  return file;
}

IdealFile readIdealFile(const std::string& path) { return parseIdealFile(readFile(path)); }

std::string formatIdealFile(const IdealFile& file) {
  std::string out = "vars";
  for (const auto& v : file.vars) out += ' ' + v;
  out += '\n';
  for (const auto& g : formatGenerators(file.ideal, file.vars)) out += g + '\n';
  return out;
}

Hypergraph parseHypergraphFile(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineNo = 0;
  std::vector<std::string> names;
  bool haveHeader = false;
  std::vector<VertexSet> edges;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string line = stripComment(raw);
    if (line.empty()) continue;
    auto tokens = splitWhitespace(line);
    try {
      if (!haveHeader) {
        if (tokens.front() != "vertices" || tokens.size() < 2) {
          throw InvalidArgument("expected 'vertices <name>+' header");
        }
        names.assign(tokens.begin() + 1, tokens.end());
        requireUniqueNames(names, "vertex");
        if (names.size() > 64) throw InvalidArgument("at most 64 vertices are supported");
        haveHeader = true;
        continue;
      }
      if (tokens.front() != "edge") throw InvalidArgument("expected 'edge <name>+'");
      if (tokens.size() < 2) throw InvalidArgument("empty edge");
      VertexSet e = 0;
      for (std::size_t k = 1; k < tokens.size(); ++k) {
        auto it = std::find(names.begin(), names.end(), tokens[k]);
        if (it == names.end()) throw InvalidArgument("unknown vertex '" + tokens[k] + "'");
        e |= singleton(static_cast<int>(it - names.begin()));
      }
      if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
        throw InvalidArgument("repeated edge " + formatVertexSet(e, names));
      }
      edges.push_back(e);
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  if (!haveHeader) throw InvalidArgument("missing 'vertices' header");
  Hypergraph h(std::move(names), std::move(edges));
  h.requireSimple();
  return h;
}

Hypergraph readHypergraphFile(const std::string& path) { return parseHypergraphFile(readFile(path)); }

std::string formatHypergraphFile(const Hypergraph& h) {
  std::string out = "vertices";
  for (const auto& v : h.vertexNames()) out += ' ' + v;
  out += '\n';
  for (VertexSet e : h.edges()) {
    out += "edge";
    forEachElement(e, [&](int v) { out += ' ' + h.vertexNames()[static_cast<std::size_t>(v)]; });
    out += '\n';
  }
  return out;
}

std::string formatVertexSet(VertexSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  forEachElement(s, [&](int v) {
    if (!first) out += ' ';
    out += names[static_cast<std::size_t>(v)];
    first = false;
  });
  return out + "}";
}

}  // namespace ideallab
