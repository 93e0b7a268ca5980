#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "wog/graph.hpp"

namespace wog {

/// Every labeled simple graph on n vertices (n ≤ 6).
std::vector<SimpleGraph> all_graphs(std::size_t n, bool connected_only = false);

/// One representative per isomorphism class (n ≤ 6).
std::vector<SimpleGraph> nonisomorphic_graphs(std::size_t n, bool connected_only = false);

/// Every orientation of g with every weight assignment in [1, max_weight],
/// source-normalized and deduplicated.
std::vector<WeightedOrientedGraph> all_weighted_orientations(const SimpleGraph& g, unsigned max_weight);

/// Random orientation and weights of g; weights are source-normalized.
WeightedOrientedGraph random_weighted_orientation(const SimpleGraph& g, unsigned max_weight, std::mt19937_64& rng);

/// Erdős–Rényi graph with a random orientation and weights.
WeightedOrientedGraph random_weighted_graph(std::size_t n, double edge_probability, unsigned max_weight,
                                            std::mt19937_64& rng);

}  // namespace wog
