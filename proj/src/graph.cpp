#include "wog/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace wog {

std::string_view to_string(GraphErrorKind kind) {
  switch (kind) {
    case GraphErrorKind::malformed: return "malformed";
    case GraphErrorKind::loop_edge: return "loop_edge";
    case GraphErrorKind::duplicate_edge: return "duplicate_edge";
    case GraphErrorKind::nonpositive_weight: return "nonpositive_weight";
    case GraphErrorKind::vertex_out_of_range: return "vertex_out_of_range";
    case GraphErrorKind::not_independent: return "not_independent";
  }
  return "unknown";
}

namespace {

void check_vertex_count(std::size_t n) {
  if (n > kMaxVertices) {
    throw GraphError(GraphErrorKind::vertex_out_of_range,
                     "graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
}

std::string label(Vertex v) { return std::to_string(v + 1); }

}  // namespace

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<Edge>& edges) : adj_(n) {
  check_vertex_count(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw GraphError(GraphErrorKind::vertex_out_of_range, "edge endpoint out of range");
    if (u == v) throw GraphError(GraphErrorKind::loop_edge, "loop at vertex " + label(u));
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj_[u].members())
      if (u < v) edges_.emplace_back(u, v);
}

SimpleGraph SimpleGraph::without_vertex(Vertex v) const {
  return induced(VertexSet::full(vertex_count()) - VertexSet{v});
}

SimpleGraph SimpleGraph::induced(VertexSet keep) const {
  std::vector<Vertex> old_to_new(vertex_count(), vertex_count());
  std::size_t k = 0;
  for (Vertex v : keep.members()) old_to_new.at(v) = k++;
  std::vector<Edge> es;
  for (auto [u, v] : edges_)
    if (keep.contains(u) && keep.contains(v)) es.emplace_back(old_to_new[u], old_to_new[v]);
  return SimpleGraph(k, es);
}

WeightedOrientedGraph::WeightedOrientedGraph(std::size_t n, std::vector<Edge> edges,
                                             std::vector<unsigned> weights)
    : edges_(std::move(edges)), weights_(std::move(weights)), out_(n), in_(n) {
  check_vertex_count(n);
  if (weights_.size() != n) throw GraphError(GraphErrorKind::malformed, "weights must have length n");
  for (Vertex v = 0; v < n; ++v)
    if (weights_[v] == 0)
      throw GraphError(GraphErrorKind::nonpositive_weight, "vertex " + label(v) + " has nonpositive weight");
  for (auto [u, v] : edges_) {
    if (u >= n || v >= n) throw GraphError(GraphErrorKind::vertex_out_of_range, "edge endpoint out of range");
    if (u == v) throw GraphError(GraphErrorKind::loop_edge, "loop at vertex " + label(u));
    if (out_[u].contains(v) || out_[v].contains(u))
      throw GraphError(GraphErrorKind::duplicate_edge, "duplicate edge {" + label(u) + "," + label(v) + "}");
    out_[u].insert(v);
    in_[v].insert(u);
  }
  std::sort(edges_.begin(), edges_.end());
}

NormalizedGraph normalize_sources(const WeightedOrientedGraph& d) {
  std::vector<unsigned> w = d.weights();
  std::vector<Vertex> changed;
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    if (!d.out_neighbors(v).empty() && d.in_neighbors(v).empty() && w[v] != 1) {
      w[v] = 1;
      changed.push_back(v);
    }
  }
  return {WeightedOrientedGraph(d.vertex_count(), d.edges(), std::move(w)), std::move(changed)};
}

bool is_normalized(const WeightedOrientedGraph& d) {
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (!d.out_neighbors(v).empty() && d.in_neighbors(v).empty() && d.weight(v) != 1) return false;
  return true;
}

SimpleGraph underlying_graph(const WeightedOrientedGraph& d) {
  return SimpleGraph(d.vertex_count(), d.edges());
}

Neighborhoods neighborhoods(const WeightedOrientedGraph& d, Vertex v) {
  if (v >= d.vertex_count()) throw GraphError(GraphErrorKind::vertex_out_of_range, "vertex out of range");
  Neighborhoods nb;
  nb.out = d.out_neighbors(v);
  nb.in = d.in_neighbors(v);
  nb.open = nb.out | nb.in;
  nb.closed = nb.open | VertexSet{v};
  return nb;
}

std::vector<VertexSet> connected_components(const SimpleGraph& g) {
  std::vector<VertexSet> comps;
  VertexSet seen;
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp{s};
    VertexSet frontier{s};
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier.members()) next = next | g.neighbors(v);
      frontier = next - comp;
      comp = comp | next;
    }
    seen = seen | comp;
    comps.push_back(comp);
  }
  return comps;
}

std::optional<std::size_t> odd_girth(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::size_t best = unset;
  std::vector<std::size_t> dist(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), unset);
    dist[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u).members()) {
        if (dist[w] == unset) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        } else if (dist[w] == dist[u]) {
          // Same BFS layer: closes an odd walk through the root.
          best = std::min(best, 2 * dist[u] + 1);
        }
      }
    }
  }
  if (best == unset) return std::nullopt;
  return best;
}

bool StructureReport::disjoint_union_of_cliques() const {
  return std::all_of(component_shapes.begin(), component_shapes.end(),
                     [](const ComponentShape& c) { return c.kind == ComponentShape::Kind::clique; });
}

bool StructureReport::disjoint_union_of_edges() const {
  return std::all_of(component_shapes.begin(), component_shapes.end(),
                     [](const ComponentShape& c) { return c.is_edge(); });
}

StructureReport structure_report(const WeightedOrientedGraph& d) {
  StructureReport r;
  const SimpleGraph g = underlying_graph(d);
  for (Vertex v = 0; v < d.vertex_count(); ++v) {
    const bool has_out = !d.out_neighbors(v).empty();
    const bool has_in = !d.in_neighbors(v).empty();
    if (!has_out && !has_in) r.isolated.insert(v);
    if (!has_out && has_in) r.sinks.insert(v);
    if (has_out && !has_in) r.sources.insert(v);
    if (d.weight(v) >= 2) {
      r.v_plus.insert(v);
      if (has_out) r.all_v_plus_sink = false;
    }
  }
  r.odd_girth = odd_girth(g);
  r.triangle_free = !r.odd_girth || *r.odd_girth > 3;
  for (VertexSet comp : connected_components(g)) {
    if (comp.size() == 1) continue;
    bool complete = true;
    for (Vertex v : comp.members())
      if (g.neighbors(v) != comp - VertexSet{v}) complete = false;
    r.component_shapes.push_back(
        {complete ? ComponentShape::Kind::clique : ComponentShape::Kind::other, comp});
  }
  return r;
}

InducedGraph induced_subgraph(const WeightedOrientedGraph& d, VertexSet keep) {
  if (!keep.subset_of(VertexSet::full(d.vertex_count())))
    throw GraphError(GraphErrorKind::vertex_out_of_range, "induced vertex set out of range");
  InducedGraph out;
  out.label_map = keep.members();
  std::vector<Vertex> old_to_new(d.vertex_count(), 0);
  for (std::size_t i = 0; i < out.label_map.size(); ++i) old_to_new[out.label_map[i]] = i;
  std::vector<Edge> es;
  for (auto [u, v] : d.edges())
    if (keep.contains(u) && keep.contains(v)) es.emplace_back(old_to_new[u], old_to_new[v]);
  std::vector<unsigned> w;
  for (Vertex v : out.label_map) w.push_back(d.weight(v));
  out.graph = WeightedOrientedGraph(out.label_map.size(), std::move(es), std::move(w));
  return out;
}

InducedGraph localization_graph(const WeightedOrientedGraph& d, VertexSet s) {
  VertexSet closed = s;
  for (Vertex v : s.members()) {
    const Neighborhoods nb = neighborhoods(d, v);
    if (nb.open.intersects(s))
      throw GraphError(GraphErrorKind::not_independent, "localization set is not independent");
    closed = closed | nb.closed;
  }
  return induced_subgraph(d, closed.complement(d.vertex_count()));
}

}  // namespace wog
