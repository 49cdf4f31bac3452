#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zf/clutter.hpp"
#include "zf/hypergraph.hpp"

namespace zf {

/// Text format:
///   # comment lines start with '#', blank lines are skipped
///   n 4
///   e 1 2
///   e 2 3 4
/// JSON format: {"vertices": 4, "edges": [[1,2],[2,3,4]]}.
/// Readers validate (EmptyEdge, VertexOutOfRange, NotAClutter, ...); writers
/// emit edges in stored order. read_hypergraph sniffs the format from the
/// first significant byte ('{' means JSON).

Hypergraph read_hypergraph_text(std::istream& in);
Hypergraph read_hypergraph_json(std::istream& in);
Hypergraph read_hypergraph(std::istream& in);

/// Path "-" reads standard input. Throws IoError when unreadable.
Hypergraph read_hypergraph_file(const std::string& path);

/// Raw family in either format, without the clutter checks; only ranges are
/// enforced. Lets callers feed arbitrary families to minimize/transversal.
std::pair<int, std::vector<VertexSet>> read_family(std::istream& in);
std::pair<int, std::vector<VertexSet>> read_family_file(const std::string& path);

void write_hypergraph_text(std::ostream& out, const Hypergraph& h);
void write_hypergraph_json(std::ostream& out, const Hypergraph& h);
void write_clutter_text(std::ostream& out, const Clutter& c);
void write_clutter_json(std::ostream& out, const Clutter& c);

/// "{1,2}" and "1,2" parsers for command-line set arguments; empty input
/// (or "{}") is the empty set. Throws ParseError / VertexOutOfRange.
VertexSet parse_vertex_list(const std::string& text, int n);

} // namespace zf
