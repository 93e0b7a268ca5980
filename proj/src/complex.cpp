#include "wog/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace wog {

namespace {

void sort_unique(std::vector<VertexSet>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void check_ambient(std::size_t n) {
  if (n > kMaxVertices)
    throw std::invalid_argument("complexes are limited to " + std::to_string(kMaxVertices) + " vertices");
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n) : n_(n) { check_ambient(n); }

SimplicialComplex SimplicialComplex::from_faces(std::size_t n, std::vector<VertexSet> faces) {
  SimplicialComplex c(n);
  for (VertexSet f : faces)
    if (!f.subset_of(VertexSet::full(n))) throw std::invalid_argument("face outside the ambient vertex set");
  sort_unique(faces);
  // Sorted by size, so a face can only be contained in a later one.
  for (std::size_t i = 0; i < faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < faces.size() && maximal; ++j)
      if (faces[i].subset_of(faces[j])) maximal = false;
    if (maximal) c.facets_.push_back(faces[i]);
  }
  return c;
}

int SimplicialComplex::dim() const {
  std::size_t d = 0;
  for (VertexSet f : facets_) d = std::max(d, f.size());
  return static_cast<int>(d) - 1;
}

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(),
                     [&](VertexSet f) { return f.size() == facets_.front().size(); });
}

bool SimplicialComplex::contains(VertexSet face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return face.subset_of(f); });
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet all;
  for (VertexSet f : facets_) all = all | f;
  return all;
}

std::vector<VertexSet> SimplicialComplex::faces() const {
  std::unordered_set<VertexSet, VertexSetHash> seen;
  for (VertexSet f : facets_) for_each_subset(f, [&](VertexSet s) { seen.insert(s); });
  std::vector<VertexSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::is_connected() const {
  const VertexSet verts = vertices();
  if (verts.empty()) return true;
  VertexSet comp{verts.front()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (VertexSet f : facets_) {
      if (f.intersects(comp) && !f.subset_of(comp)) {
        comp = comp | f;
        grew = true;
      }
    }
  }
  return comp == verts;
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph.
void bron_kerbosch(const std::vector<VertexSet>& non_adj, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  const VertexSet px = p | x;
  Vertex pivot = px.front();
  std::size_t best = 0;
  for (Vertex u : px.members()) {
    const std::size_t s = (p & non_adj[u]).size();
    if (s >= best) {
      best = s;
      pivot = u;
    }
  }
  for (Vertex v : (p - non_adj[pivot]).members()) {
    bron_kerbosch(non_adj, r | VertexSet{v}, p & non_adj[v], x & non_adj[v], out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexSet> non_adj(n);
  for (Vertex v = 0; v < n; ++v) non_adj[v] = VertexSet::full(n) - g.neighbors(v) - VertexSet{v};
  std::vector<VertexSet> out;
  bron_kerbosch(non_adj, {}, VertexSet::full(n), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex independence_complex(const SimpleGraph& g) {
  return SimplicialComplex::from_faces(g.vertex_count(), maximal_independent_sets(g));
}

std::vector<VertexSet> minimal_vertex_covers(const SimpleGraph& g) {
  std::vector<VertexSet> out;
  for (VertexSet s : maximal_independent_sets(g)) out.push_back(s.complement(g.vertex_count()));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_vertex_cover(const SimpleGraph& g, VertexSet c) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return c.contains(e.first) || c.contains(e.second); });
}

StrongCover l_partition(const WeightedOrientedGraph& d, VertexSet c) {
  StrongCover sc;
  sc.cover = c;
  for (Vertex x : c.members()) {
    if (!d.out_neighbors(x).subset_of(c)) {
      sc.l1.insert(x);
    } else if (!d.in_neighbors(x).subset_of(c)) {
      sc.l2.insert(x);
    } else {
      sc.l3.insert(x);
    }
  }
  return sc;
}

bool is_strong(const WeightedOrientedGraph& d, const StrongCover& c) {
  if (c.minimal()) return true;
  const VertexSet witnesses = c.l2 | c.l3;
  for (Vertex x : c.l3.members()) {
    bool found = false;
    for (Vertex y : (d.in_neighbors(x) & witnesses).members())
      if (d.weight(y) >= 2) found = true;
    if (!found) return false;
  }
  return true;
}

std::vector<StrongCover> strong_vertex_covers(const WeightedOrientedGraph& d) {
  const std::size_t n = d.vertex_count();
  const SimpleGraph g = underlying_graph(d);
  std::vector<StrongCover> out;
  for_each_subset(VertexSet::full(n), [&](VertexSet c) {
    if (!is_vertex_cover(g, c)) return;
    StrongCover sc = l_partition(d, c);
    if (is_strong(d, sc)) out.push_back(sc);
  });
  std::sort(out.begin(), out.end(), [](const StrongCover& a, const StrongCover& b) { return a.cover < b.cover; });
  return out;
}

SimplicialComplex link(const SimplicialComplex& delta, VertexSet face) {
  if (!delta.contains(face)) throw std::invalid_argument("link of a set that is not a face");
  std::vector<VertexSet> fs;
  for (VertexSet f : delta.facets())
    if (face.subset_of(f)) fs.push_back(f - face);
  return SimplicialComplex::from_faces(delta.ambient_size(), std::move(fs));
}

bool is_matroid(const SimplicialComplex& delta) {
  const std::vector<VertexSet> faces = delta.faces();
  const std::unordered_set<VertexSet, VertexSetHash> member(faces.begin(), faces.end());
  for (VertexSet f : faces) {
    for (VertexSet h : faces) {
      if (f.size() <= h.size()) continue;
      bool exchange = false;
      for (Vertex x : (f - h).members()) {
        if (member.count(h | VertexSet{x})) {
          exchange = true;
          break;
        }
      }
      if (!exchange) return false;
    }
  }
  return true;
}

namespace {

bool well_covered_with_alpha(const SimpleGraph& g, std::size_t& alpha) {
  const std::vector<VertexSet> mis = maximal_independent_sets(g);
  alpha = 0;
  for (VertexSet s : mis) alpha = std::max(alpha, s.size());
  return std::all_of(mis.begin(), mis.end(), [&](VertexSet s) { return s.size() == alpha; });
}

}  // namespace

WellCoveredReport well_covered_report(const SimpleGraph& g) {
  WellCoveredReport r;
  r.well_covered = well_covered_with_alpha(g, r.alpha);
  r.in_w2 = r.well_covered;
  for (Vertex v = 0; v < g.vertex_count() && r.in_w2; ++v) {
    std::size_t a = 0;
    const bool wc = well_covered_with_alpha(g.without_vertex(v), a);
    if (!wc || a != r.alpha) r.in_w2 = false;
  }
  return r;
}

namespace {

void sr_facets(std::size_t n, const std::vector<VertexSet>& supports, Vertex v, VertexSet face,
               std::vector<VertexSet>& out) {
  auto is_face = [&](VertexSet s) {
    return std::none_of(supports.begin(), supports.end(), [&](VertexSet g) { return g.subset_of(s); });
  };
  if (v == n) {
    for (Vertex u = 0; u < n; ++u)
      if (!face.contains(u) && is_face(face | VertexSet{u})) return;
    out.push_back(face);
    return;
  }
  const VertexSet with = face | VertexSet{v};
  if (is_face(with)) sr_facets(n, supports, v + 1, with, out);
  sr_facets(n, supports, v + 1, face, out);
}

}  // namespace

SimplicialComplex stanley_reisner_complex(std::size_t n, const std::vector<VertexSet>& supports) {
  check_ambient(n);
  for (VertexSet s : supports)
    if (s.empty()) return SimplicialComplex::void_complex(n);
  std::vector<VertexSet> facets;
  sr_facets(n, supports, 0, {}, facets);
  return SimplicialComplex::from_faces(n, std::move(facets));
}

std::vector<VertexSet> minimal_nonfaces(const SimplicialComplex& delta) {
  const std::size_t n = delta.ambient_size();
  if (delta.is_void()) return {VertexSet{}};
  std::vector<VertexSet> out;
  for_each_subset(VertexSet::full(n), [&](VertexSet s) {
    if (delta.contains(s)) return;
    for (Vertex v : s.members())
      if (!delta.contains(s - VertexSet{v})) return;
    out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace wog
