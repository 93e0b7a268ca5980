#include "wog/cm.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "wog/homology.hpp"

namespace wog {

namespace {

// Facets of the downward-closed family {F ⊆ ground : is_face(F)}.
template <class Pred>
SimplicialComplex complex_from_predicate(std::size_t n, VertexSet ground, Pred&& is_face) {
  std::vector<VertexSet> facets;
  for_each_subset(ground, [&](VertexSet f) {
    if (!is_face(f)) return;
    for (Vertex v : (ground - f).members())
      if (is_face(f | VertexSet{v})) return;
    facets.push_back(f);
  });
  return SimplicialComplex::from_faces(n, std::move(facets));
}

void require_ring(const MonomialIdeal& ideal, const Monomial& a) {
  if (ideal.ambient_size() != a.size()) throw DimensionMismatch("degree vector has the wrong length");
}

}  // namespace

SimplicialComplex degree_complex(const MonomialIdeal& ideal, const Monomial& a) {
  require_ring(ideal, a);
  const std::size_t n = ideal.ambient_size();
  return complex_from_predicate(n, VertexSet::full(n), [&](VertexSet f) {
    // x^a ∈ I R[x_F^{-1}] iff some generator divides x^a away from F.
    for (const Monomial& g : ideal.gens()) {
      bool divides = true;
      for (std::size_t i = 0; i < n && divides; ++i)
        if (!f.contains(i) && g[i] > a[i]) divides = false;
      if (divides) return false;
    }
    return true;
  });
}

SimplicialComplex degree_complex_by_colon(const MonomialIdeal& ideal, const Monomial& a) {
  return stanley_reisner_complex(ideal.ambient_size(), radical(colon(ideal, a)).supports());
}

std::vector<VertexSet> symbolic_degree_covers(const WeightedOrientedGraph& d, unsigned t, const Monomial& a) {
  if (t == 0) throw std::invalid_argument("symbolic power exponent must be at least 1");
  if (a.size() != d.vertex_count()) throw DimensionMismatch("degree vector has the wrong length");
  std::vector<VertexSet> out;
  for (VertexSet c : minimal_vertex_covers(underlying_graph(d))) {
    const StrongCover part = l_partition(d, c);
    std::uint64_t total = 0;
    for (Vertex v : c.members()) total += part.l1.contains(v) ? a[v] : a[v] / d.weight(v);
    if (total <= t - 1) out.push_back(c);
  }
  return out;
}

std::vector<VertexSet> symbolic_degree_facets(const WeightedOrientedGraph& d, unsigned t, const Monomial& a) {
  std::vector<VertexSet> out;
  for (VertexSet c : symbolic_degree_covers(d, t, a)) out.push_back(c.complement(d.vertex_count()));
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex koszul_complex(const MonomialIdeal& ideal, const Monomial& a) {
  require_ring(ideal, a);
  const std::size_t n = ideal.ambient_size();
  return complex_from_predicate(n, a.support(), [&](VertexSet tau) {
    std::vector<Exponent> e = a.exponents();
    for (Vertex v : tau.members()) --e[v];
    return member(ideal, Monomial(std::move(e)));
  });
}

std::size_t BettiTable::projective_dimension() const {
  std::size_t pd = 0;
  for (const auto& [key, rank] : entries)
    if (rank != 0) pd = std::max(pd, key.first);
  return pd;
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal, std::uint64_t cap) {
  std::unordered_set<Monomial, MonomialHash> seen(ideal.gens().begin(), ideal.gens().end());
  std::vector<Monomial> frontier = ideal.gens();
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& l : frontier) {
      for (const Monomial& g : ideal.gens()) {
        Monomial m = l.lcm(g);
        if (seen.insert(m).second) {
          if (seen.size() > cap) throw std::length_error("lcm lattice exceeds the configured limit");
          next.push_back(std::move(m));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

BettiTable betti_table(const MonomialIdeal& ideal, const BettiOptions& options) {
  if (ideal.is_unit()) throw std::invalid_argument("Betti numbers of the unit ideal are not defined");
  BettiTable table;
  table.field = options.field;
  const std::size_t n = ideal.ambient_size();
  table.entries[{0, Monomial(n)}] = 1;
  if (ideal.is_zero()) return table;

  std::vector<Monomial> degrees;
  if (options.support == BettiSupport::box) {
    const std::vector<Exponent> rho = ideal.max_exponents();
    const std::uint64_t size = box_size(rho);
    if (size > options.max_degrees) throw std::length_error("exponent box exceeds the configured limit");
    for_each_box_point(rho, [&](const Monomial& a) {
      if (!a.is_unit()) degrees.push_back(a);
    });
  } else {
    degrees = lcm_lattice(ideal, options.max_degrees);
  }

  // ranks[k] holds H̃_{i-2}(K^a) for i = 0..n+1, per degree.
  std::vector<HomologyProfile> profiles(degrees.size());
  const auto work = [&](std::size_t k) { profiles[k] = homology_ranks(koszul_complex(ideal, degrees[k]), options.field); };
  if (options.exec == Exec::parallel) {
    ExceptionSink sink;
    const auto count = static_cast<std::ptrdiff_t>(degrees.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k) sink.run([&] { work(static_cast<std::size_t>(k)); });
    sink.rethrow();
  } else {
    for (std::size_t k = 0; k < degrees.size(); ++k) work(k);
  }

  for (std::size_t k = 0; k < degrees.size(); ++k) {
    const HomologyProfile& h = profiles[k];
    for (std::size_t idx = 0; idx < h.ranks.size(); ++idx)
      if (h.ranks[idx] != 0) table.entries[{idx + 1, degrees[k]}] = h.ranks[idx];
  }
  return table;
}

std::string to_string(DepthMethod m) {
  switch (m) {
    case DepthMethod::betti: return "betti";
    case DepthMethod::colon: return "colon";
    case DepthMethod::both: return "both";
  }
  return "betti";
}

DepthMethod parse_depth_method(const std::string& text) {
  if (text == "betti") return DepthMethod::betti;
  if (text == "colon") return DepthMethod::colon;
  if (text == "both") return DepthMethod::both;
  throw std::invalid_argument("unknown depth method '" + text + "'");
}

BettiDepth depth_by_betti(const MonomialIdeal& ideal, const BettiOptions& options) {
  const BettiTable table = betti_table(ideal, options);
  const std::size_t pd = table.projective_dimension();
  BettiDepth out{ideal.ambient_size() - pd, pd, Monomial(ideal.ambient_size())};
  for (const auto& [key, rank] : table.entries) {
    if (key.first == pd && rank != 0) {
      out.top_degree = key.second;
      break;
    }
  }
  return out;
}

namespace {

using SupportKey = std::vector<std::uint32_t>;

struct SupportKeyHash {
  std::size_t operator()(const SupportKey& k) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto b : k) h = (h ^ b) * 0x100000001b3ull;
    return h;
  }
};

// Radicals √(I : f) over the exponent box, deduplicated by generator supports.
struct ColonScan {
  std::vector<SupportKey> radicals;
  /// For each box point, the index into `radicals`, or -1 when f ∈ I.
  std::vector<long> radical_of_point;
  std::vector<Exponent> rho;
};

SupportKey radical_key(const MonomialIdeal& ideal, const Monomial& f) {
  SupportKey key;
  for (VertexSet s : radical(colon(ideal, f)).supports()) key.push_back(s.bits());
  return key;
}

ColonScan scan_colons(const MonomialIdeal& ideal, std::uint64_t max_box, Exec exec) {
  ColonScan scan;
  scan.rho = ideal.max_exponents();
  const std::uint64_t size = box_size(scan.rho);
  if (size > max_box) throw std::length_error("exponent box exceeds the configured limit");
  std::vector<SupportKey> keys(size);
  std::vector<char> inside(size, 0);
  const auto work = [&](std::uint64_t k) {
    const Monomial f = box_point(scan.rho, k);
    if (member(ideal, f)) {
      inside[k] = 1;
    } else {
      keys[k] = radical_key(ideal, f);
    }
  };
  if (exec == Exec::parallel) {
    ExceptionSink sink;
    const auto count = static_cast<std::int64_t>(size);
#pragma omp parallel for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) sink.run([&] { work(static_cast<std::uint64_t>(k)); });
    sink.rethrow();
  } else {
    for (std::uint64_t k = 0; k < size; ++k) work(k);
  }
  std::unordered_map<SupportKey, long, SupportKeyHash> index;
  scan.radical_of_point.assign(size, -1);
  for (std::uint64_t k = 0; k < size; ++k) {
    if (inside[k]) continue;
    auto [it, fresh] = index.try_emplace(keys[k], static_cast<long>(scan.radicals.size()));
    if (fresh) scan.radicals.push_back(keys[k]);
    scan.radical_of_point[k] = it->second;
  }
  return scan;
}

SimplicialComplex complex_of_key(std::size_t n, const SupportKey& key) {
  std::vector<VertexSet> supports;
  for (auto b : key) supports.emplace_back(b);
  return stanley_reisner_complex(n, supports);
}

template <class T, class F>
std::vector<T> map_radicals(const ColonScan& scan, Exec exec, F&& f) {
  std::vector<T> out(scan.radicals.size());
  if (exec == Exec::parallel) {
    ExceptionSink sink;
    const auto count = static_cast<std::ptrdiff_t>(scan.radicals.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t k = 0; k < count; ++k)
      sink.run([&] { out[static_cast<std::size_t>(k)] = f(scan.radicals[static_cast<std::size_t>(k)]); });
    sink.rethrow();
  } else {
    for (std::size_t k = 0; k < scan.radicals.size(); ++k) out[k] = f(scan.radicals[k]);
  }
  return out;
}

ColonDepth colon_depth_from_scan(const MonomialIdeal& ideal, const ColonScan& scan, const Field& field, Exec exec) {
  const std::size_t n = ideal.ambient_size();
  const std::vector<std::size_t> depths =
      map_radicals<std::size_t>(scan, exec, [&](const SupportKey& key) { return sr_depth(complex_of_key(n, key), field); });
  std::optional<ColonDepth> best;
  for (std::uint64_t k = 0; k < scan.radical_of_point.size(); ++k) {
    const long r = scan.radical_of_point[k];
    if (r < 0) continue;
    const std::size_t dep = depths[static_cast<std::size_t>(r)];
    if (!best || dep < best->depth) {
      best = ColonDepth{dep, box_point(scan.rho, k)};
    } else if (dep == best->depth) {
      Monomial f = box_point(scan.rho, k);
      if (f < best->witness) best->witness = std::move(f);
    }
  }
  if (!best) throw std::invalid_argument("the unit ideal has no depth");
  return *best;
}

}  // namespace

ColonDepth depth_by_colon(const MonomialIdeal& ideal, const Field& field, std::uint64_t max_box, Exec exec) {
  if (ideal.is_unit()) throw std::invalid_argument("the unit ideal has no depth");
  return colon_depth_from_scan(ideal, scan_colons(ideal, max_box, exec), field, exec);
}

CMReport is_cm(const MonomialIdeal& ideal, const CMOptions& options) {
  if (ideal.is_unit()) throw std::invalid_argument("the unit ideal is not a proper ideal");
  CMReport report;
  report.field = options.field;
  report.method = options.method;
  report.dim = krull_dim(ideal);

  if (options.method != DepthMethod::colon) {
    BettiOptions bo;
    bo.field = options.field;
    bo.exec = options.exec;
    const BettiDepth bd = depth_by_betti(ideal, bo);
    report.depth_betti = bd.depth;
    report.pd = bd.pd;
    if (bd.depth < report.dim) report.witness = CMWitness{CMWitness::Kind::betti, bd.pd, bd.top_degree};
  }

  std::optional<ColonScan> scan;
  if (options.method != DepthMethod::betti || options.lemma_path) scan = scan_colons(ideal, options.max_box, options.exec);

  if (options.method != DepthMethod::betti) {
    const ColonDepth cd = colon_depth_from_scan(ideal, *scan, options.field, options.exec);
    report.depth_colon = cd.depth;
    if (!report.pd) report.pd = ideal.ambient_size() - cd.depth;
    if (report.depth_betti && *report.depth_betti != cd.depth)
      throw OracleInconsistency("depth by Betti numbers (" + std::to_string(*report.depth_betti) +
                                ") differs from depth by colons (" + std::to_string(cd.depth) + ")");
    if (!report.witness && cd.depth < report.dim) report.witness = CMWitness{CMWitness::Kind::colon, cd.depth, cd.witness};
  }

  report.cm = report.depth() == report.dim;

  if (options.lemma_path) {
    const std::size_t n = ideal.ambient_size();
    bool unmixed = true;
    bool flagged = false;
    if (!ideal.is_zero()) {
      const std::vector<VertexSet> ass = associated_primes(ideal, options.max_box);
      const std::vector<VertexSet> mins = minimal_primes(ideal);
      unmixed = std::all_of(ass.begin(), ass.end(), [&](VertexSet p) { return p.size() == ass.front().size(); });
      const bool min_equidim =
          std::all_of(mins.begin(), mins.end(), [&](VertexSet p) { return p.size() == mins.front().size(); });
      flagged = min_equidim && ass.size() > mins.size();
    }
    const std::vector<char> each_cm = map_radicals<char>(
        *scan, options.exec, [&](const SupportKey& key) -> char { return reisner_cm(complex_of_key(n, key), options.field); });
    const bool all_cm = std::all_of(each_cm.begin(), each_cm.end(), [](char c) { return c != 0; });
    report.unmixed = unmixed;
    report.embedded_primes_flag = flagged;
    report.lemma_cm = unmixed && all_cm;
    if (*report.lemma_cm != report.cm)
      throw OracleInconsistency("unmixed-plus-colon criterion disagrees with depth = dim");
  }
  return report;
}

}  // namespace wog
