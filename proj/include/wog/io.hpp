#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "wog/cm.hpp"
#include "wog/complex.hpp"
#include "wog/graph.hpp"
#include "wog/ideal.hpp"
#include "wog/theorems.hpp"

namespace wog {

/// Keys keep insertion order so reports are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct ParsedGraph {
  WeightedOrientedGraph graph;
  /// Human-readable notes, e.g. source weights that were reset to 1.
  std::vector<std::string> notices;
};

/// Parses the 1-based graph document and source-normalizes it. Every failure
/// is a GraphError; syntax and shape problems are GraphErrorKind::malformed.
ParsedGraph parse_graph(const Json& doc);
ParsedGraph parse_graph_text(const std::string& text);

Json to_json(const WeightedOrientedGraph& d);
Json to_json(const SimplicialComplex& delta);
Json to_json(const MonomialIdeal& ideal);
Json to_json(const BettiTable& table);
Json to_json(const CMReport& report);
Json to_json(const Reason& reason);
Json to_json(const EqualityVerdict& verdict);
Json to_json(const CMVerdict& verdict);
Json to_json(const Counterexample& bundle);
Json to_json(const StructureReport& report);

SimplicialComplex complex_from_json(const Json& doc);
MonomialIdeal ideal_from_json(const Json& doc);

Json labels(VertexSet s);

}  // namespace wog
