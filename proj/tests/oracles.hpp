#pragma once
// Brute-force reference implementations used only by the tests. Each one
// works straight from a definition and shares no code with the library
// kernels it is compared against.

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "wog/complex.hpp"
#include "wog/graph.hpp"
#include "wog/ideal.hpp"

namespace oracle {

using Exps = std::vector<unsigned>;
using Gens = std::vector<Exps>;

inline bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline bool member(const Gens& gens, const Exps& m) {
  return std::any_of(gens.begin(), gens.end(), [&](const Exps& g) { return divides(g, m); });
}

inline Gens gens_of(const wog::MonomialIdeal& ideal) {
  Gens out;
  for (const auto& g : ideal.gens()) out.emplace_back(g.exponents().begin(), g.exponents().end());
  return out;
}

/// Minimal generators as a set, for order-independent comparison.
inline std::set<Exps> minimal(const Gens& gens) {
  std::set<Exps> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
      if (gens[j] != gens[i] && divides(gens[j], gens[i])) redundant = true;
    if (!redundant) out.insert(gens[i]);
  }
  return out;
}

inline std::set<Exps> as_set(const wog::MonomialIdeal& ideal) {
  const Gens g = gens_of(ideal);
  return {g.begin(), g.end()};
}

/// All t-fold products of generators.
inline std::set<Exps> power(const Gens& gens, unsigned t) {
  Gens current = {Exps(gens.empty() ? 0 : gens.front().size(), 0)};
  for (unsigned s = 0; s < t; ++s) {
    Gens next;
    for (const auto& c : current)
      for (const auto& g : gens) {
        Exps p(c.size());
        for (std::size_t i = 0; i < p.size(); ++i) p[i] = c[i] + g[i];
        next.push_back(p);
      }
    auto m = minimal(next);
    current.assign(m.begin(), m.end());
  }
  return {current.begin(), current.end()};
}

/// Visits every exponent vector in [0, bound].
template <class F>
void box(const Exps& bound, F&& f) {
  Exps a(bound.size(), 0);
  while (true) {
    f(a);
    std::size_t i = 0;
    while (i < a.size() && a[i] == bound[i]) a[i++] = 0;
    if (i == a.size()) return;
    ++a[i];
  }
}

// ---------- graphs ----------

struct Digraph {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<unsigned> w;
};

inline Digraph from(const wog::WeightedOrientedGraph& d) {
  Digraph g{d.vertex_count(), {}, d.weights()};
  for (auto [u, v] : d.edges()) g.edges.emplace_back(u, v);
  return g;
}

inline bool is_cover(const Digraph& g, std::uint32_t c) {
  for (auto [u, v] : g.edges)
    if (!((c >> u) & 1U) && !((c >> v) & 1U)) return false;
  return true;
}

inline bool is_minimal_cover(const Digraph& g, std::uint32_t c) {
  if (!is_cover(g, c)) return false;
  for (std::size_t v = 0; v < g.n; ++v)
    if (((c >> v) & 1U) && is_cover(g, c & ~(1U << v))) return false;
  return true;
}

/// L1/L2/L3 membership of v in cover c straight from the definitions.
inline int level(const Digraph& g, std::uint32_t c, std::size_t v) {
  bool out_outside = false, in_outside = false;
  for (auto [a, b] : g.edges) {
    if (a == v && !((c >> b) & 1U)) out_outside = true;
    if (b == v && !((c >> a) & 1U)) in_outside = true;
  }
  if (out_outside) return 1;
  if (in_outside) return 2;
  return 3;
}

inline bool is_strong_cover(const Digraph& g, std::uint32_t c) {
  if (!is_cover(g, c)) return false;
  for (std::size_t v = 0; v < g.n; ++v) {
    if (!((c >> v) & 1U) || level(g, c, v) != 3) continue;
    bool witnessed = false;
    for (auto [a, b] : g.edges)
      if (b == v && ((c >> a) & 1U) && level(g, c, a) >= 2 && g.w[a] >= 2) witnessed = true;
    if (!witnessed) return false;
  }
  return true;
}

/// Generators of I_C: x_i for L1, x_j^{w_j} otherwise.
inline Exps cover_exponents(const Digraph& g, std::uint32_t c) {
  Exps e(g.n, 0);
  for (std::size_t v = 0; v < g.n; ++v)
    if ((c >> v) & 1U) e[v] = level(g, c, v) == 1 ? 1 : g.w[v];
  return e;
}

/// m ∈ I_C^t for I_C generated by pure powers x_i^{e_i}, i ∈ C.
inline bool in_cover_power(const Exps& e, const Exps& m, unsigned t) {
  unsigned total = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] > 0) total += m[i] / e[i];
  return total >= t;
}

/// m ∈ I^{(t)} as membership in every I_C^t over minimal covers.
inline bool in_symbolic_power(const Digraph& g, const Exps& m, unsigned t) {
  for (std::uint32_t c = 0; c < (1U << g.n); ++c)
    if (is_minimal_cover(g, c) && !in_cover_power(cover_exponents(g, c), m, t)) return false;
  return true;
}

inline Gens edge_gens(const Digraph& g) {
  Gens out;
  for (auto [u, v] : g.edges) {
    Exps e(g.n, 0);
    e[u] += 1;
    e[v] += g.w[v];
    out.push_back(e);
  }
  return out;
}

inline std::size_t odd_girth_by_walks(std::size_t n, const std::vector<std::vector<bool>>& adj) {
  // Shortest odd closed walk has the length of the shortest odd cycle.
  std::vector<std::vector<bool>> reach = adj;
  for (std::size_t len = 1; len <= 2 * n + 1; ++len) {
    if (len % 2 == 1)
      for (std::size_t v = 0; v < n; ++v)
        if (reach[v][v]) return len;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (reach[a][b])
          for (std::size_t c = 0; c < n; ++c)
            if (adj[b][c]) next[a][c] = true;
    reach = std::move(next);
  }
  return 0;  // bipartite
}

inline std::vector<std::vector<bool>> adjacency(const wog::SimpleGraph& g) {
  std::vector<std::vector<bool>> adj(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

inline std::vector<std::uint32_t> maximal_independent(const wog::SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  auto independent = [&](std::uint32_t s) {
    for (auto [u, v] : g.edges())
      if (((s >> u) & 1U) && ((s >> v) & 1U)) return false;
    return true;
  };
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1U << n); ++s) {
    if (!independent(s)) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v)
      if (!((s >> v) & 1U) && independent(s | (1U << v))) maximal = false;
    if (maximal) out.push_back(s);
  }
  return out;
}

// ---------- homology ----------

using Rational = boost::multiprecision::cpp_rational;

/// Rank over Q by plain Gauss-Jordan on exact rationals.
template <class Int>
std::size_t rational_rank(const std::vector<std::vector<Int>>& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (auto x : row) r.emplace_back(static_cast<long long>(x));
    a.push_back(std::move(r));
  }
  std::size_t rank = 0;
  const std::size_t cols = a.front().size();
  for (std::size_t col = 0; col < cols && rank < a.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.size() && a[pivot][col] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Rational factor = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

/// Reduced Betti numbers of the complex generated by the given facets, index k+1 for H̃_k.
inline std::vector<std::size_t> reduced_betti(const std::vector<std::uint32_t>& facets, std::size_t n) {
  if (facets.empty()) return {0};
  std::set<std::uint32_t> faces;
  for (auto f : facets)
    for (std::uint32_t s = f;; s = (s - 1) & f) {
      faces.insert(s);
      if (s == 0) break;
    }
  std::map<int, std::vector<std::uint32_t>> by_dim;
  int top = -1;
  for (auto f : faces) {
    const int d = __builtin_popcount(f) - 1;
    by_dim[d].push_back(f);
    top = std::max(top, d);
  }
  // boundary rank from dimension d to d-1
  auto boundary_rank = [&](int d) -> std::size_t {
    if (d < 0 || !by_dim.count(d) || !by_dim.count(d - 1)) return 0;
    const auto& rows = by_dim[d - 1];
    const auto& cols = by_dim[d];
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int sign = 1;
      for (std::size_t v = 0; v < n; ++v) {
        if (!((cols[j] >> v) & 1U)) continue;
        const std::uint32_t face = cols[j] & ~(1U << v);
        const auto it = std::lower_bound(rows.begin(), rows.end(), face);
        m[static_cast<std::size_t>(it - rows.begin())][j] = sign;
        sign = -sign;
      }
    }
    return rational_rank(m);
  };
  std::vector<std::size_t> out;
  for (int d = -1; d <= top; ++d) {
    const std::size_t chains = by_dim[d].size();
    out.push_back(chains - boundary_rank(d) - boundary_rank(d + 1));
  }
  return out;
}

inline std::vector<std::uint32_t> masks(const wog::SimplicialComplex& delta) {
  std::vector<std::uint32_t> out;
  for (auto f : delta.facets()) {
    std::uint32_t m = 0;
    for (auto v : f.members()) m |= 1U << v;
    out.push_back(m);
  }
  return out;
}

// ---------- Betti numbers via Hochster's formula ----------

/// β_{i,σ}(R/I_Δ) = dim H̃_{|σ|−i−1}(Δ restricted to σ), squarefree degrees only.
inline std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> hochster(const wog::SimplicialComplex& delta) {
  const std::size_t n = delta.ambient_size();
  std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> out;
  const auto facets = masks(delta);
  for (std::uint32_t sigma = 0; sigma < (1U << n); ++sigma) {
    std::vector<std::uint32_t> restricted;
    for (auto f : facets) restricted.push_back(f & sigma);
    // Keep only maximal restricted faces; void stays void.
    const auto betti = reduced_betti(restricted, n);
    const int size = __builtin_popcount(sigma);
    for (std::size_t idx = 0; idx < betti.size(); ++idx) {
      if (betti[idx] == 0) continue;
      const int k = static_cast<int>(idx) - 1;  // H̃_k
      const int i = size - k - 1;
      if (i >= 0) out[{static_cast<std::size_t>(i), sigma}] += betti[idx];
    }
  }
  return out;
}

// ---------- random instances ----------

inline wog::MonomialIdeal random_ideal(std::mt19937_64& rng, std::size_t n, std::size_t max_gens, unsigned max_exp) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<wog::Monomial> gens;
  const std::size_t k = count(rng);
  while (gens.size() < k) {
    std::vector<wog::Exponent> e(n);
    for (auto& x : e) x = exp(rng);
    wog::Monomial m(e);
    if (!m.is_unit()) gens.push_back(m);
  }
  return wog::MonomialIdeal(n, gens);
}

}  // namespace oracle
