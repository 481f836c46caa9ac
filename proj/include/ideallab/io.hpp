#pragma once

#include <string>
#include <vector>

#include "ideallab/hypergraph.hpp"
#include "ideallab/monomial_ideal.hpp"

namespace ideallab {

/// An ideal together with the names of its variables.
///
/// Text form: a header `vars <name>+` followed by one generator per line,
/// either as a product (`x^2*y`, `1` for the unit monomial) or as an exponent
/// vector (`2 1 0`). `#` starts a comment. A line consisting of exactly n
/// integers is always read as an exponent vector.
struct IdealFile {
  std::vector<std::string> vars;
  MonomialIdeal ideal;
};

/// Throws InvalidArgument with a line number on malformed input.
IdealFile parseIdealFile(const std::string& text);
IdealFile readIdealFile(const std::string& path);
/// Canonical text: header, then the generators in canonical order in product form.
std::string formatIdealFile(const IdealFile& file);

/// Product form (`x^2*y`) or exponent vector separated by commas or spaces.
Monomial parseMonomial(const std::string& text, const std::vector<std::string>& vars);
std::string formatMonomial(const Monomial& m, const std::vector<std::string>& vars);
std::vector<std::string> formatGenerators(const MonomialIdeal& ideal, const std::vector<std::string>& vars);
/// x1, x2, ..., xn
std::vector<std::string> defaultVariableNames(std::size_t n);

/// Text form: `vertices <name>+` then `edge <name>+` lines. Loading rejects
/// repeated edges, empty edges and isolated vertices; containment between
/// edges is accepted here and rejected by the operations that need an antichain.
Hypergraph parseHypergraphFile(const std::string& text);
Hypergraph readHypergraphFile(const std::string& path);
std::string formatHypergraphFile(const Hypergraph& h);
/// Edge as a list of vertex names, e.g. "{a b}".
std::string formatVertexSet(VertexSet s, const std::vector<std::string>& names);

}  // namespace ideallab
