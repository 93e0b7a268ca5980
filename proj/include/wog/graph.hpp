#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wog/vertex_set.hpp"

namespace wog {

/// The distinct ways a graph document or graph construction can be rejected.
enum class GraphErrorKind {
  malformed,
  loop_edge,
  duplicate_edge,
  nonpositive_weight,
  vertex_out_of_range,
  not_independent,
};

std::string_view to_string(GraphErrorKind kind);

class GraphError : public std::runtime_error {
public:
  GraphError(GraphErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  GraphErrorKind kind() const { return kind_; }

private:
  GraphErrorKind kind_;
};

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1.
class SimpleGraph {
public:
  SimpleGraph() = default;
  /// Edges are unordered pairs; duplicates are merged, loops rejected.
  SimpleGraph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  /// Sorted list of edges (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet neighbors(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }

  /// Graph with vertex v deleted and the remaining vertices relabeled in order.
  SimpleGraph without_vertex(Vertex v) const;
  /// Induced subgraph on `keep`, relabeled in increasing order.
  SimpleGraph induced(VertexSet keep) const;

  bool operator==(const SimpleGraph&) const = default;

private:
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
};

/// Directed simple graph with a positive integer weight on every vertex.
///
/// At most one of (u,v), (v,u) is present and there are no loops. Weights are
/// stored as given; normalize_sources() applies the weight-1 convention for
/// source vertices, and parse_graph() always returns a normalized graph.
class WeightedOrientedGraph {
public:
  WeightedOrientedGraph() = default;
  WeightedOrientedGraph(std::size_t n, std::vector<Edge> edges, std::vector<unsigned> weights);

  std::size_t vertex_count() const { return weights_.size(); }
  /// Directed edges sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  unsigned weight(Vertex v) const { return weights_.at(v); }
  const std::vector<unsigned>& weights() const { return weights_; }

  VertexSet out_neighbors(Vertex v) const { return out_.at(v); }
  VertexSet in_neighbors(Vertex v) const { return in_.at(v); }
  bool has_edge(Vertex from, Vertex to) const { return out_.at(from).contains(to); }

  bool operator==(const WeightedOrientedGraph& o) const {
    return edges_ == o.edges_ && weights_ == o.weights_;
  }

private:
  std::vector<Edge> edges_;
  std::vector<unsigned> weights_;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
};

struct NormalizedGraph {
  WeightedOrientedGraph graph;
  /// Source vertices whose weight was rewritten to 1.
  std::vector<Vertex> changed;
};

/// Sets the weight of every source vertex (nonempty out-neighborhood, empty
/// in-neighborhood) to 1. Isolated vertices keep their weight.
NormalizedGraph normalize_sources(const WeightedOrientedGraph& d);
bool is_normalized(const WeightedOrientedGraph& d);

SimpleGraph underlying_graph(const WeightedOrientedGraph& d);

struct Neighborhoods {
  VertexSet out;
  VertexSet in;
  VertexSet open;
  VertexSet closed;
};

Neighborhoods neighborhoods(const WeightedOrientedGraph& d, Vertex v);

struct ComponentShape {
  enum class Kind { clique, other };
  Kind kind;
  VertexSet vertices;

  std::size_t size() const { return vertices.size(); }
  bool is_edge() const { return kind == Kind::clique && size() == 2; }
  bool operator==(const ComponentShape&) const = default;
};

struct StructureReport {
  VertexSet sinks;
  VertexSet sources;
  VertexSet v_plus;
  VertexSet isolated;
  /// Shortest odd cycle of the underlying graph; nullopt when bipartite.
  std::optional<std::size_t> odd_girth;
  bool triangle_free = true;
  /// Non-isolated connected components in order of their lowest vertex.
  std::vector<ComponentShape> component_shapes;
  bool all_v_plus_sink = true;

  /// Every component (isolated vertices counted as K1) is complete.
  bool disjoint_union_of_cliques() const;
  /// Every non-isolated component is a single edge; isolated vertices allowed.
  bool disjoint_union_of_edges() const;
  /// Same, but any isolated vertex makes this false.
  bool disjoint_union_of_edges_strict() const { return disjoint_union_of_edges() && isolated.empty(); }
};

StructureReport structure_report(const WeightedOrientedGraph& d);

std::optional<std::size_t> odd_girth(const SimpleGraph& g);
std::vector<VertexSet> connected_components(const SimpleGraph& g);

/// Induced subgraph on `keep`, relabeled to 0..|keep|-1 in increasing order.
struct InducedGraph {
  WeightedOrientedGraph graph;
  /// label_map[new] = old vertex.
  std::vector<Vertex> label_map;
};

InducedGraph induced_subgraph(const WeightedOrientedGraph& d, VertexSet keep);

/// D minus the closed neighborhood of S. Throws GraphError(not_independent)
/// when S is not independent in the underlying graph.
InducedGraph localization_graph(const WeightedOrientedGraph& d, VertexSet s);

}  // namespace wog
