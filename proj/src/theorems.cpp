#include "wog/theorems.hpp"

#include <algorithm>
#include <mutex>

#include "wog/homology.hpp"

namespace wog {

namespace {

long label(Vertex v) { return static_cast<long>(v) + 1; }

[[noreturn]] void disagree(std::string theorem, const WeightedOrientedGraph& d, unsigned t, std::string message,
                           std::vector<std::pair<std::string, MonomialIdeal>> ideals, const CMOptions* cm = nullptr) {
  Counterexample bundle;
  bundle.theorem = std::move(theorem);
  bundle.graph = d;
  bundle.t = t;
  bundle.message = std::move(message);
  if (cm && !ideals.empty() && !ideals.back().second.is_unit()) {
    BettiOptions bo;
    bo.field = cm->field;
    bo.exec = cm->exec;
    bundle.betti = betti_table(ideals.back().second, bo);
  }
  bundle.ideals = std::move(ideals);
  throw DisagreementError(std::move(bundle));
}

std::vector<Reason> sink_reasons(const WeightedOrientedGraph& d, const StructureReport& rep) {
  std::vector<Reason> out;
  for (Vertex v : rep.v_plus.members())
    if (!d.out_neighbors(v).empty()) out.push_back({"non_sink_weighted_vertex", label(v)});
  return out;
}

// Underlying graph with isolated vertices removed.
SimpleGraph without_isolated(const SimpleGraph& g, const StructureReport& rep) {
  return g.induced(rep.isolated.complement(g.vertex_count()));
}

}  // namespace

EqualityVerdict powers_equal(const WeightedOrientedGraph& input, unsigned t, bool verify) {
  if (t < 2) throw std::invalid_argument("the equality criterion needs t >= 2");
  const WeightedOrientedGraph d = normalize_sources(input).graph;
  const StructureReport rep = structure_report(d);
  EqualityVerdict v;
  v.t = t;
  v.reasons = sink_reasons(d, rep);
  if (rep.odd_girth && *rep.odd_girth <= 2 * t - 1)
    v.reasons.push_back({"odd_cycle_length", static_cast<long>(*rep.odd_girth)});
  v.structural = v.reasons.empty();
  if (!verify) return v;

  const MonomialIdeal ordinary = power(edge_ideal(d), t);
  const MonomialIdeal symbolic = symbolic_power(d, t);
  if (!contains(symbolic, ordinary))
    disagree("equal", d, t, "ordinary power not contained in the symbolic power",
             {{"ordinary", ordinary}, {"symbolic", symbolic}});
  v.direct = ordinary == symbolic;
  if (!*v.direct) {
    for (const Monomial& g : symbolic.gens()) {
      if (!member(ordinary, g)) {
        v.witness = g;
        break;
      }
    }
    if (!v.witness || !member(symbolic, *v.witness) || member(ordinary, *v.witness))
      disagree("equal", d, t, "witness extraction failed", {{"ordinary", ordinary}, {"symbolic", symbolic}});
  }
  if (*v.direct != v.structural)
    disagree("equal", d, t,
             std::string("structural criterion says ") + (v.structural ? "equal" : "different") +
                 " but the ideals are " + (*v.direct ? "equal" : "different"),
             {{"ordinary", ordinary}, {"symbolic", symbolic}});
  return v;
}

CMVerdict symbolic_cm_all_t(const WeightedOrientedGraph& input, unsigned verify_up_to, const CMOptions& options) {
  const WeightedOrientedGraph d = normalize_sources(input).graph;
  const StructureReport rep = structure_report(d);
  CMVerdict v;
  v.theorem = "cmsymbolic";
  for (const ComponentShape& c : rep.component_shapes)
    if (c.kind != ComponentShape::Kind::clique) v.reasons.push_back({"component_not_clique", label(c.vertices.front())});
  v.structural = v.reasons.empty();
  for (unsigned t = 1; t <= verify_up_to; ++t) {
    const MonomialIdeal ideal = symbolic_power(d, t);
    CMReport r = is_cm(ideal, options);
    if (!r.cm) v.failing_t.push_back(t);
    v.oracle.push_back({t, std::move(r)});
    if (v.structural && !v.failing_t.empty())
      disagree("cmsymbolic", d, t, "components are cliques but the symbolic power is not Cohen-Macaulay",
               {{"symbolic", ideal}}, &options);
  }
  if (verify_up_to > 0) v.agreement = true;
  return v;
}

CMVerdict ordinary_cm(const WeightedOrientedGraph& input, std::optional<unsigned> t, bool verify,
                      const CMOptions& options, unsigned scan_to) {
  if (t && *t == 0) throw std::invalid_argument("power exponent must be at least 1");
  const WeightedOrientedGraph d = normalize_sources(input).graph;
  const StructureReport rep = structure_report(d);
  const SimpleGraph g = underlying_graph(d);
  const MonomialIdeal base = edge_ideal(d);
  CMVerdict v;
  v.t = t;

  auto run_oracle = [&](unsigned s) {
    const MonomialIdeal ideal = power(base, s);
    v.oracle.push_back({s, is_cm(ideal, options)});
    if (!v.oracle.back().report.cm) v.failing_t.push_back(s);
    return ideal;
  };
  auto edges_reasons = [&] {
    for (const ComponentShape& c : rep.component_shapes)
      if (!c.is_edge()) v.reasons.push_back({"component_not_edge", label(c.vertices.front())});
    v.structural = v.reasons.empty();
    v.structural_literal = v.structural && rep.isolated.empty();
  };

  if (t && *t == 1) {
    // No structural criterion at t = 1: the verdict is the oracle's, checked
    // against the necessary condition that the independence complex is CM.
    v.theorem = "oracle";
    const MonomialIdeal ideal = run_oracle(1);
    v.structural = v.oracle.back().report.cm;
    const bool radical_cm = reisner_cm(independence_complex(g), options.field);
    if (!radical_cm) v.reasons.push_back({"independence_complex_not_cm", 0});
    v.agreement = !v.structural || radical_cm;
    if (!*v.agreement)
      disagree("radical", d, 1, "I(D) is Cohen-Macaulay but its radical is not", {{"power", ideal}}, &options);
    return v;
  }

  if (t && *t == 2) {
    v.theorem = "cmPower2";
    v.reasons = sink_reasons(d, rep);
    const bool sinks_ok = v.reasons.empty();
    if (!rep.triangle_free) v.reasons.push_back({"contains_triangle", 3});
    const SimpleGraph core = without_isolated(g, rep);
    const WellCoveredReport wc = well_covered_report(core);
    if (!wc.in_w2) v.reasons.push_back({wc.well_covered ? "not_in_w2" : "not_well_covered", 0});
    v.structural = v.reasons.empty();
    v.structural_literal = sinks_ok && rep.triangle_free && well_covered_report(g).in_w2;
    if (verify) {
      const MonomialIdeal ideal = run_oracle(2);
      v.agreement = v.oracle.back().report.cm == v.structural;
      if (!*v.agreement)
        disagree("cmPower2", d, 2, "structural criterion and oracle disagree on I^2", {{"power", ideal}}, &options);
    }
    return v;
  }

  if (t) {
    v.theorem = "cmPowers";
    edges_reasons();
    if (verify) {
      const MonomialIdeal ideal = run_oracle(*t);
      v.agreement = v.oracle.back().report.cm == v.structural;
      if (!*v.agreement)
        disagree("cmPowers", d, *t, "structural criterion and oracle disagree", {{"power", ideal}}, &options);
    }
    return v;
  }

  v.theorem = "cmordinary";
  edges_reasons();
  if (verify) {
    for (unsigned s = 1; s <= scan_to; ++s) {
      const MonomialIdeal ideal = run_oracle(s);
      const bool cm = v.oracle.back().report.cm;
      // Disjoint edges force CM at every t; otherwise every t ≥ 3 must fail.
      if ((v.structural && !cm) || (!v.structural && s >= 3 && cm))
        disagree("cmordinary", d, s, "structural criterion and oracle disagree", {{"power", ideal}}, &options);
    }
    v.agreement = true;
  }
  return v;
}

WeightedOrientedGraph example_family(unsigned k) {
  if (k < 1) throw std::invalid_argument("family parameter k must be at least 1");
  return WeightedOrientedGraph(4, {{0, 1}, {1, 2}, {2, 3}}, {1, k, k, 1});
}

std::optional<std::array<unsigned, 4>> family_system_solution(unsigned k, unsigned t) {
  if (k < 1 || t < 1) throw std::invalid_argument("family parameters must be positive");
  const unsigned bound = t * k;
  for (unsigned a1 = 0; a1 <= bound; ++a1)
    for (unsigned a2 = 0; a2 <= bound; ++a2)
      for (unsigned a3 = 0; a3 <= bound; ++a3)
        for (unsigned a4 = 0; a4 <= bound; ++a4)
          if (a2 / k + a3 >= t && a1 + a3 <= t - 1 && a2 + a4 <= t - 1) return std::array{a1, a2, a3, a4};
  return std::nullopt;
}

FamilyScan scan_family(unsigned k, unsigned scan_to, const CMOptions& options) {
  const WeightedOrientedGraph d = example_family(k);
  FamilyScan scan;
  scan.k = k;
  for (unsigned t = 1; t <= scan_to; ++t) {
    const bool cm = is_cm(symbolic_power(d, t), options).cm;
    (cm ? scan.cm_at : scan.not_cm_at).push_back(t);
    auto sol = family_system_solution(k, t);
    if (cm == sol.has_value() || cm != (t <= k)) scan.agreement = false;
    scan.system.emplace_back(t, sol);
  }
  return scan;
}

SweepSummary sweep(const std::vector<WeightedOrientedGraph>& graphs, const SweepOptions& options) {
  SweepSummary summary;
  summary.instances = graphs.size();
  std::mutex mu;
  CMOptions cm = options.cm;
  // Parallelism lives at the instance level.
  cm.exec = Exec::serial;

  const auto one = [&](const WeightedOrientedGraph& d) {
    std::size_t checks = 0;
    std::size_t witnesses = 0;
    std::size_t unsound = 0;
    std::vector<Counterexample> found;
    auto guarded = [&](auto&& f) {
      try {
        f();
      } catch (const DisagreementError& e) {
        found.push_back(e.bundle());
      }
      ++checks;
    };
    for (unsigned t = 2; options.equality && t <= options.max_t; ++t) {
      guarded([&] {
        const EqualityVerdict v = powers_equal(d, t, true);
        if (v.witness) {
          ++witnesses;
          const WeightedOrientedGraph nd = normalize_sources(d).graph;
          if (!member(symbolic_power(nd, t), *v.witness) || member(power(edge_ideal(nd), t), *v.witness)) ++unsound;
        }
      });
    }
    for (unsigned t = 1; options.ordinary && t <= options.max_t; ++t) guarded([&] { ordinary_cm(d, t, true, cm); });
    if (options.symbolic) guarded([&] { symbolic_cm_all_t(d, options.max_t, cm); });
    std::lock_guard lock(mu);
    summary.checks += checks;
    summary.witnesses += witnesses;
    summary.unsound_witnesses += unsound;
    for (auto& c : found) summary.disagreements.push_back(std::move(c));
  };

  if (options.exec == Exec::parallel) {
    ExceptionSink sink;
    const auto count = static_cast<std::ptrdiff_t>(graphs.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) sink.run([&] { one(graphs[static_cast<std::size_t>(i)]); });
    sink.rethrow();
  } else {
    for (const auto& d : graphs) one(d);
  }
  // Deterministic order regardless of scheduling.
  std::sort(summary.disagreements.begin(), summary.disagreements.end(), [](const Counterexample& a, const Counterexample& b) {
    if (a.graph.edges() != b.graph.edges()) return a.graph.edges() < b.graph.edges();
    if (a.graph.weights() != b.graph.weights()) return a.graph.weights() < b.graph.weights();
    return std::tie(a.theorem, a.t) < std::tie(b.theorem, b.t);
  });
  return summary;
}

}  // namespace wog
