#include "wog/generate.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wog/complex.hpp"

namespace wog {

namespace {

constexpr std::size_t kMaxEnumerated = 6;

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  return pairs;
}

bool connected(const SimpleGraph& g) { return g.vertex_count() == 0 || connected_components(g).size() == 1; }

// Lexicographically smallest edge list over all relabelings.
std::vector<Edge> canonical_form(const SimpleGraph& g) {
  std::vector<Vertex> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> relabeled;
    for (auto [u, v] : g.edges()) relabeled.emplace_back(std::minmax(perm[u], perm[v]));
    std::sort(relabeled.begin(), relabeled.end());
    if (first || relabeled < best) best = std::move(relabeled);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::vector<SimpleGraph> all_graphs(std::size_t n, bool connected_only) {
  if (n > kMaxEnumerated) throw std::invalid_argument("graph enumeration is limited to 6 vertices");
  const auto pairs = all_pairs(n);
  std::vector<SimpleGraph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if ((mask >> i) & 1U) edges.push_back(pairs[i]);
    SimpleGraph g(n, edges);
    if (!connected_only || connected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<SimpleGraph> nonisomorphic_graphs(std::size_t n, bool connected_only) {
  std::set<std::vector<Edge>> seen;
  std::vector<SimpleGraph> out;
  for (const SimpleGraph& g : all_graphs(n, connected_only)) {
    auto form = canonical_form(g);
    if (seen.insert(form).second) out.emplace_back(n, form);
  }
  return out;
}

std::vector<WeightedOrientedGraph> all_weighted_orientations(const SimpleGraph& g, unsigned max_weight) {
  if (max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");
  const auto& edges = g.edges();
  const std::size_t n = g.vertex_count();
  if (edges.size() > 20) throw std::invalid_argument("too many edges to enumerate orientations");
  std::set<std::pair<std::vector<Edge>, std::vector<unsigned>>> seen;
  std::vector<WeightedOrientedGraph> out;
  std::vector<unsigned> weights(n, 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<Edge> oriented;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      oriented.push_back(((mask >> i) & 1U) ? Edge{v, u} : Edge{u, v});
    }
    std::fill(weights.begin(), weights.end(), 1);
    while (true) {
      WeightedOrientedGraph d = normalize_sources(WeightedOrientedGraph(n, oriented, weights)).graph;
      if (seen.emplace(d.edges(), d.weights()).second) out.push_back(std::move(d));
      // Odometer over weights.
      std::size_t i = 0;
      while (i < n && weights[i] == max_weight) weights[i++] = 1;
      if (i == n) break;
      ++weights[i];
    }
  }
  return out;
}

WeightedOrientedGraph random_weighted_orientation(const SimpleGraph& g, unsigned max_weight, std::mt19937_64& rng) {
  if (max_weight < 1) throw std::invalid_argument("max_weight must be at least 1");
  std::bernoulli_distribution flip(0.5);
  std::uniform_int_distribution<unsigned> weight(1, max_weight);
  std::vector<Edge> oriented;
  for (auto [u, v] : g.edges()) oriented.push_back(flip(rng) ? Edge{v, u} : Edge{u, v});
  std::vector<unsigned> weights(g.vertex_count());
  for (auto& w : weights) w = weight(rng);
  return normalize_sources(WeightedOrientedGraph(g.vertex_count(), oriented, weights)).graph;
}

WeightedOrientedGraph random_weighted_graph(std::size_t n, double edge_probability, unsigned max_weight,
                                            std::mt19937_64& rng) {
  std::bernoulli_distribution keep(edge_probability);
  std::vector<Edge> edges;
  for (auto e : all_pairs(n))
    if (keep(rng)) edges.push_back(e);
  return random_weighted_orientation(SimpleGraph(n, edges), max_weight, rng);
}

}  // namespace wog
