#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "hypermaps/colored.hpp"
#include "hypermaps/sigma.hpp"
#include "hypermaps/tau.hpp"

namespace hypermaps::io {

using Document = std::variant<FlagHypermap, OrientedHypermap, ColoredGraph>;

/// Line-oriented format, '#' starts a comment:
///   format: sigma | tau | colored
///   n: <flags / half-edges / graph vertices>
/// then for sigma   sigma_v:, sigma_e:, optionally sigma_f: in cycle notation
///      for tau     tau0:, tau1:, tau2:
///      for colored colors: <D+1>, then one "edge: u v c" line per matched pair.
/// A sigma_f contradicting (sigma_e sigma_v)^-1, a tau with a fixed point or
/// an incomplete matching raise ValidationError; syntax errors raise
/// ParseError with line and column.
Document parse_document(std::string_view text);

Document load_document(const std::string& path);

/// Canonical text: fixed key order, cycles in canonical form, colored edges
/// sorted by (color, min endpoint). parse(serialize(x)) == x, and serialize
/// is a fixed point on parsed canonical text.
std::string serialize(const FlagHypermap& hm);
std::string serialize(const OrientedHypermap& hm);
std::string serialize(const ColoredGraph& g);
std::string serialize(const Document& doc);

/// Deterministic Graphviz text: nodes 1..n, one edge statement per matched
/// pair per color sorted by (color, min endpoint), colored from a fixed
/// palette and labeled with the color index.
std::string export_dot(const ColoredGraph& g);

}  // namespace hypermaps::io

namespace hypermaps::cli {

/// Runs the command-line tool on args (without the program name), writing
/// to the given streams. Exit codes: 0 success / true, 1 domain failure
/// (validation failed, not isomorphic, ...), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypermaps::cli
