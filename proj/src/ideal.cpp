#include "wog/ideal.hpp"

#include <algorithm>
#include <set>

namespace wog {

namespace {

void require_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.ambient_size() != b.ambient_size()) throw DimensionMismatch("ideals live in rings of different dimension");
}

void require_ring(const MonomialIdeal& a, const Monomial& m) {
  if (a.ambient_size() != m.size()) throw DimensionMismatch("monomial and ideal live in different rings");
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> gens) : n_(n) {
  for (const Monomial& g : gens)
    if (g.size() != n) throw DimensionMismatch("generator has the wrong number of variables");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // Graded order: a divisor always precedes its multiples.
  for (Monomial& g : gens) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

std::vector<Exponent> MonomialIdeal::max_exponents() const {
  std::vector<Exponent> rho(n_, 0);
  for (const Monomial& g : gens_)
    for (std::size_t i = 0; i < n_; ++i) rho[i] = std::max(rho[i], g[i]);
  return rho;
}

std::vector<VertexSet> MonomialIdeal::supports() const {
  std::vector<VertexSet> out;
  for (const Monomial& g : gens_) out.push_back(g.support());
  return out;
}

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> gens) { return MonomialIdeal(n, std::move(gens)); }

bool member(const MonomialIdeal& ideal, const Monomial& m) {
  require_ring(ideal, m);
  return std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Monomial& g) { return g.divides(m); });
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_ring(a, b);
  return a.gens() == b.gens();
}

bool contains(const MonomialIdeal& big, const MonomialIdeal& small) {
  require_ring(big, small);
  return std::all_of(small.gens().begin(), small.gens().end(), [&](const Monomial& g) { return member(big, g); });
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_ring(a, b);
  std::vector<Monomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ambient_size(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& g : a.gens())
    for (const Monomial& h : b.gens()) gens.push_back(g * h);
  return MonomialIdeal(a.ambient_size(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned t) {
  if (t == 0) throw std::invalid_argument("power exponent must be at least 1");
  MonomialIdeal p = ideal;
  for (unsigned k = 1; k < t; ++k) p = product(p, ideal);
  return p;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const Monomial& g : a.gens())
    for (const Monomial& h : b.gens()) gens.push_back(g.lcm(h));
  return MonomialIdeal(a.ambient_size(), std::move(gens));
}

MonomialIdeal intersect_all(std::size_t n, const std::vector<MonomialIdeal>& ideals) {
  MonomialIdeal acc = MonomialIdeal::unit(n);
  for (const MonomialIdeal& i : ideals) acc = intersect(acc, i);
  return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  require_ring(ideal, m);
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const Monomial& g : ideal.gens()) gens.push_back(g.colon(m));
  return MonomialIdeal(ideal.ambient_size(), std::move(gens));
}

MonomialIdeal saturate(const MonomialIdeal& ideal, Vertex v) {
  if (v >= ideal.ambient_size()) throw std::out_of_range("saturation variable out of range");
  const Monomial xv = Monomial::variable(ideal.ambient_size(), v);
  const Exponent bound = ideal.max_exponents()[v];
  MonomialIdeal cur = ideal;
  for (Exponent step = 0;; ++step) {
    MonomialIdeal next = colon(cur, xv);
    if (next == cur) return cur;
    if (step > bound) throw std::logic_error("saturation did not stabilize within the exponent bound");
    cur = std::move(next);
  }
}

MonomialIdeal saturate(const MonomialIdeal& ideal, VertexSet vars) {
  MonomialIdeal cur = ideal;
  for (Vertex v : vars.members()) cur = saturate(cur, v);
  return cur;
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) {
    std::vector<Exponent> e(ideal.ambient_size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = g[i] > 0 ? 1 : 0;
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.ambient_size(), std::move(gens));
}

MonomialIdeal prime_ideal(std::size_t n, VertexSet s) {
  std::vector<Monomial> gens;
  for (Vertex v : s.members()) gens.push_back(Monomial::variable(n, v));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal w_action(const MonomialIdeal& ideal, const std::vector<Exponent>& w) {
  if (w.size() != ideal.ambient_size()) throw DimensionMismatch("weight vector has the wrong length");
  if (std::any_of(w.begin(), w.end(), [](Exponent e) { return e == 0; }))
    throw std::invalid_argument("weight vector entries must be positive");
  std::vector<Monomial> gens;
  for (const Monomial& g : ideal.gens()) gens.push_back(g.scaled(w));
  return MonomialIdeal(ideal.ambient_size(), std::move(gens));
}

SimplicialComplex radical_complex(const MonomialIdeal& ideal) {
  return stanley_reisner_complex(ideal.ambient_size(), radical(ideal).supports());
}

std::vector<VertexSet> minimal_primes(const MonomialIdeal& ideal) {
  const SimplicialComplex delta = radical_complex(ideal);
  std::vector<VertexSet> out;
  for (VertexSet f : delta.facets()) out.push_back(f.complement(ideal.ambient_size()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> associated_primes(const MonomialIdeal& ideal, std::uint64_t max_box) {
  if (ideal.is_zero() || ideal.is_unit()) throw std::invalid_argument("associated primes need a proper nonzero ideal");
  const std::vector<Exponent> rho = ideal.max_exponents();
  if (box_size(rho) > max_box) throw std::length_error("exponent box exceeds the configured limit");
  std::set<VertexSet> primes;
  for_each_box_point(rho, [&](const Monomial& f) {
    if (member(ideal, f)) return;
    const MonomialIdeal q = colon(ideal, f);
    VertexSet s;
    for (const Monomial& g : q.gens()) {
      if (g.degree() != 1) return;
      s = s | g.support();
    }
    primes.insert(s);
  });
  return {primes.begin(), primes.end()};
}

std::size_t krull_dim(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw std::invalid_argument("the unit ideal has no Krull dimension");
  return static_cast<std::size_t>(radical_complex(ideal).dim() + 1);
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph& d) {
  const std::size_t n = d.vertex_count();
  std::vector<Monomial> gens;
  for (auto [i, j] : d.edges()) {
    std::vector<Exponent> e(n, 0);
    e[i] = 1;
    e[j] = d.weight(j);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal cover_ideal(const WeightedOrientedGraph& d, const StrongCover& c) {
  const SimpleGraph g = underlying_graph(d);
  if (!is_vertex_cover(g, c.cover) || l_partition(d, c.cover) != c || !is_strong(d, c))
    throw NotStrongCover("vertex set is not a strong vertex cover");
  const std::size_t n = d.vertex_count();
  std::vector<Monomial> gens;
  for (Vertex v : c.cover.members())
    gens.push_back(Monomial::variable(n, v, c.l1.contains(v) ? 1 : d.weight(v)));
  return MonomialIdeal(n, std::move(gens));
}

std::vector<PrimaryComponent> primary_decomposition(const WeightedOrientedGraph& d) {
  std::vector<PrimaryComponent> out;
  for (const StrongCover& c : strong_vertex_covers(d)) out.push_back({c, cover_ideal(d, c)});
  return out;
}

MonomialIdeal symbolic_power(const WeightedOrientedGraph& d, unsigned t) {
  if (t == 0) throw std::invalid_argument("symbolic power exponent must be at least 1");
  std::vector<MonomialIdeal> parts;
  for (VertexSet c : minimal_vertex_covers(underlying_graph(d)))
    parts.push_back(power(cover_ideal(d, l_partition(d, c)), t));
  return intersect_all(d.vertex_count(), parts);
}

MonomialIdeal symbolic_power_by_localization(const MonomialIdeal& ideal, unsigned t) {
  const std::size_t n = ideal.ambient_size();
  const MonomialIdeal pt = power(ideal, t);
  if (ideal.is_zero()) return pt;
  std::vector<MonomialIdeal> parts;
  for (VertexSet p : minimal_primes(ideal)) parts.push_back(saturate(pt, p.complement(n)));
  return intersect_all(n, parts);
}

}  // namespace wog
