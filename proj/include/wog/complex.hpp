#pragma once

#include <optional>
#include <vector>

#include "wog/graph.hpp"
#include "wog/vertex_set.hpp"

namespace wog {

/// A simplicial complex on the ambient vertex set [0, n), stored by facets.
///
/// The void complex has no faces at all; the empty complex {∅} has the single
/// facet ∅. Facets are kept as a sorted antichain.
class SimplicialComplex {
public:
  /// The void complex on n vertices.
  explicit SimplicialComplex(std::size_t n = 0);

  /// Complex generated by `faces` (any family; non-maximal members are dropped).
  /// An empty family gives the void complex.
  static SimplicialComplex from_faces(std::size_t n, std::vector<VertexSet> faces);
  static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n); }
  static SimplicialComplex empty_complex(std::size_t n) { return from_faces(n, {VertexSet{}}); }
  static SimplicialComplex simplex(std::size_t n, VertexSet vertices) { return from_faces(n, {vertices}); }

  std::size_t ambient_size() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for both {∅} and the void complex; use is_void() to tell them apart.
  int dim() const;
  bool is_pure() const;
  bool contains(VertexSet face) const;
  /// Union of all facets.
  VertexSet vertices() const;
  /// Every face, sorted by size then lexicographically.
  std::vector<VertexSet> faces() const;
  /// The 1-skeleton on vertices() has at most one component.
  bool is_connected() const;

  bool operator==(const SimplicialComplex&) const = default;

private:
  std::size_t n_ = 0;
  std::vector<VertexSet> facets_;
};

/// Maximal independent sets of g, sorted canonically.
std::vector<VertexSet> maximal_independent_sets(const SimpleGraph& g);

SimplicialComplex independence_complex(const SimpleGraph& g);

/// Complements of the maximal independent sets, sorted canonically.
std::vector<VertexSet> minimal_vertex_covers(const SimpleGraph& g);

bool is_vertex_cover(const SimpleGraph& g, VertexSet c);

/// A vertex cover with its L1/L2/L3 partition relative to an orientation.
struct StrongCover {
  VertexSet cover;
  /// Members with an out-neighbor outside the cover.
  VertexSet l1;
  /// Members not in l1 with an in-neighbor outside the cover.
  VertexSet l2;
  /// Members whose whole neighborhood lies in the cover.
  VertexSet l3;

  bool minimal() const { return l3.empty(); }
  bool operator==(const StrongCover&) const = default;
};

/// L-partition of a vertex cover `c` of the underlying graph of d.
StrongCover l_partition(const WeightedOrientedGraph& d, VertexSet c);

/// Minimal, or every L3 vertex has an in-edge from an L2 ∪ L3 vertex of weight ≥ 2.
bool is_strong(const WeightedOrientedGraph& d, const StrongCover& c);

/// All strong vertex covers of d, sorted canonically by cover.
std::vector<StrongCover> strong_vertex_covers(const WeightedOrientedGraph& d);

/// Throws std::invalid_argument when `face` is not a face of `delta`.
SimplicialComplex link(const SimplicialComplex& delta, VertexSet face);

/// Exchange property over every pair of faces with |F| > |H|.
bool is_matroid(const SimplicialComplex& delta);

struct WellCoveredReport {
  std::size_t alpha = 0;
  bool well_covered = false;
  bool in_w2 = false;
};

WellCoveredReport well_covered_report(const SimpleGraph& g);

/// Stanley-Reisner complex of the squarefree ideal whose minimal generators
/// have the given supports. An empty support (the unit ideal) gives the void
/// complex; no supports (the zero ideal) gives the full simplex.
SimplicialComplex stanley_reisner_complex(std::size_t n, const std::vector<VertexSet>& supports);

/// Minimal nonfaces; the generator supports of the Stanley-Reisner ideal.
std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& delta);

}  // namespace wog
