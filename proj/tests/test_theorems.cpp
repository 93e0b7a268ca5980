#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "wog/generate.hpp"
#include "wog/io.hpp"
#include "wog/theorems.hpp"

using namespace wog;

namespace {

using M = Monomial;

WeightedOrientedGraph e4(unsigned k = 2) { return example_family(k); }
WeightedOrientedGraph k3(std::vector<unsigned> w = {1, 1, 1}) {
  return normalize_sources(WeightedOrientedGraph(3, {{0, 1}, {0, 2}, {1, 2}}, std::move(w))).graph;
}
WeightedOrientedGraph sink_c5() {
  return WeightedOrientedGraph(5, {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 0}}, {1, 2, 1, 2, 1});
}

bool has_reason(const std::vector<Reason>& reasons, const std::string& kind) {
  return std::any_of(reasons.begin(), reasons.end(), [&](const Reason& r) { return r.kind == kind; });
}

/// Direct structural reading, independent of the library predicate.
bool equality_expected(const WeightedOrientedGraph& d, unsigned t) {
  for (Vertex v = 0; v < d.vertex_count(); ++v)
    if (d.weight(v) >= 2 && !d.out_neighbors(v).empty()) return false;
  const std::size_t girth = oracle::odd_girth_by_walks(d.vertex_count(), oracle::adjacency(underlying_graph(d)));
  return girth == 0 || girth >= 2 * t + 1;
}

}  // namespace

TEST_CASE("equality examples") {
  const WeightedOrientedGraph edge(2, {{0, 1}}, {1, 3});
  const auto v1 = powers_equal(edge, 2, true);
  CHECK(v1.structural);
  CHECK(v1.direct == true);
  CHECK_FALSE(v1.witness.has_value());

  const WeightedOrientedGraph p3(3, {{0, 1}, {1, 2}}, {1, 2, 1});
  const auto v2 = powers_equal(p3, 2, true);
  CHECK_FALSE(v2.structural);
  CHECK(v2.direct == false);
  CHECK(v2.witness == M{1, 2, 1});
  CHECK((v2.reasons == std::vector<Reason>{{"non_sink_weighted_vertex", 2}}));

  const auto v3 = powers_equal(k3(), 2, true);
  CHECK_FALSE(v3.structural);
  CHECK(v3.direct == false);
  CHECK(v3.witness == M{1, 1, 1});
  CHECK((v3.reasons == std::vector<Reason>{{"odd_cycle_length", 3}}));

  const auto quick = powers_equal(k3(), 2, false);
  CHECK_FALSE(quick.direct.has_value());
  CHECK_THROWS_AS(powers_equal(k3(), 1, true), std::invalid_argument);

  // C5 survives t = 2 but not t = 3.
  const auto c5 = sink_c5();
  CHECK(powers_equal(c5, 2, true).structural);
  CHECK_FALSE(powers_equal(c5, 3, true).structural);
}

TEST_CASE("equality verdict JSON") {
  const auto j = to_json(powers_equal(k3(), 2, true));
  CHECK(j["theorem"] == "equal");
  CHECK(j["t"] == 2);
  CHECK(j["witness"] == Json::array({1, 1, 1}));
  CHECK(j["agreement"] == true);
}

TEST_CASE("equality criterion matches the direct comparison") {
  // Exhaustive over connected graphs with five vertices, weights 1 and 2.
  std::size_t instances = 0;
  for (std::size_t n = 2; n <= 5; ++n)
    for (const SimpleGraph& g : nonisomorphic_graphs(n, true))
      for (const auto& d : all_weighted_orientations(g, 2)) {
        const auto v = powers_equal(d, 2, true);
        REQUIRE(v.structural == equality_expected(d, 2));
        REQUIRE(v.direct == v.structural);
        if (v.witness) {
          REQUIRE(member(symbolic_power(d, 2), *v.witness));
          REQUIRE_FALSE(member(power(edge_ideal(d), 2), *v.witness));
        }
        ++instances;
      }
  CHECK(instances > 1000);
}

TEST_CASE("equality criterion on random six-vertex graphs at t = 3") {
  std::mt19937_64 rng(606);
  for (int i = 0; i < 200; ++i) {
    const auto d = random_weighted_graph(6, 0.4, 2, rng);
    const auto v = powers_equal(d, 3, true);
    CHECK(v.structural == equality_expected(d, 3));
    CHECK(v.direct == v.structural);
  }
}

TEST_CASE("symbolic powers of cliques") {
  const auto vk3 = symbolic_cm_all_t(k3({1, 2, 3}), 3);
  CHECK(vk3.structural);
  CHECK(vk3.failing_t.empty());
  CHECK(vk3.oracle.size() == 3);
  CHECK(vk3.agreement == true);

  const auto ve4 = symbolic_cm_all_t(e4(), 3);
  CHECK_FALSE(ve4.structural);
  CHECK((ve4.failing_t == std::vector<unsigned>{3}));
  CHECK(has_reason(ve4.reasons, "component_not_clique"));

  const WeightedOrientedGraph k3k2(5, {{0, 1}, {0, 2}, {1, 2}, {3, 4}}, {1, 2, 2, 1, 3});
  const auto v = symbolic_cm_all_t(k3k2, 2);
  CHECK(v.structural);
  CHECK(v.failing_t.empty());
  CHECK_FALSE(v.t.has_value());
  CHECK(to_json(v)["t"] == "all");
}

TEST_CASE("ordinary power examples") {
  const WeightedOrientedGraph edges(4, {{0, 1}, {2, 3}}, {1, 2, 1, 2});
  const auto v3 = ordinary_cm(edges, 3u, true);
  CHECK(v3.theorem == "cmPowers");
  CHECK(v3.structural);
  CHECK(v3.oracle.front().report.cm);

  const auto v2 = ordinary_cm(sink_c5(), 2u, true);
  CHECK(v2.theorem == "cmPower2");
  CHECK(v2.structural);
  CHECK(v2.oracle.front().report.cm);

  const auto vk3 = ordinary_cm(k3(), 2u, true);
  CHECK_FALSE(vk3.structural);
  CHECK(has_reason(vk3.reasons, "contains_triangle"));
  CHECK_FALSE(vk3.oracle.front().report.cm);

  const auto all = ordinary_cm(edges, std::nullopt, true);
  CHECK(all.structural);
  CHECK(all.oracle.size() == 3);
  CHECK(all.failing_t.empty());

  const auto t1 = ordinary_cm(sink_c5(), 1u, true);
  CHECK(t1.theorem == "oracle");
  CHECK(t1.structural);
  CHECK(t1.agreement == true);

  const auto p4 = ordinary_cm(WeightedOrientedGraph(4, {{0, 1}, {1, 2}, {2, 3}}, {1, 1, 1, 1}), 2u, true);
  CHECK_FALSE(p4.structural);
  CHECK(has_reason(p4.reasons, "not_in_w2"));
  CHECK_FALSE(p4.oracle.front().report.cm);
}

TEST_CASE("isolated vertices: both readings reported") {
  const WeightedOrientedGraph d(3, {{0, 1}}, {1, 2, 1});
  const auto v2 = ordinary_cm(d, 2u, true);
  CHECK(v2.structural);
  CHECK(v2.structural_literal == false);
  CHECK(v2.oracle.front().report.cm);
  const auto v3 = ordinary_cm(d, 3u, true);
  CHECK(v3.structural);
  CHECK(v3.structural_literal == false);
  CHECK(v3.oracle.front().report.cm);
}

TEST_CASE("disjoint edges are Cohen-Macaulay in every orientation") {
  const SimpleGraph g(4, {{0, 1}, {2, 3}});
  for (const auto& d : all_weighted_orientations(g, 3))
    for (unsigned t = 1; t <= 3; ++t) CHECK(is_cm(power(edge_ideal(d), t)).cm);
}

TEST_CASE("ordinary powers on all small graphs") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (const SimpleGraph& g : nonisomorphic_graphs(n, true))
      for (const auto& d : all_weighted_orientations(g, 2)) {
        const auto v2 = ordinary_cm(d, 2u, true);
        REQUIRE(v2.agreement == true);
        const auto v3 = ordinary_cm(d, 3u, true);
        REQUIRE(v3.agreement == true);
      }
}

TEST_CASE("family examples") {
  CHECK_FALSE(family_system_solution(2, 2).has_value());
  CHECK((family_system_solution(2, 3) == std::array<unsigned, 4>{0, 2, 2, 0}));
  CHECK((family_system_solution(1, 2) == std::array<unsigned, 4>{0, 1, 1, 0}));
  CHECK_THROWS(example_family(0));
  for (unsigned k = 1; k <= 3; ++k) {
    const auto scan = scan_family(k, k + 2);
    std::vector<unsigned> below(k), above{k + 1, k + 2};
    std::iota(below.begin(), below.end(), 1U);
    CHECK(scan.cm_at == below);
    CHECK(scan.not_cm_at == above);
    CHECK(scan.agreement);
  }
}

TEST_CASE("family system solvable exactly above the threshold") {
  for (unsigned k = 1; k <= 4; ++k)
    for (unsigned t = 1; t <= 6; ++t) {
      // A wider box than the library searches, to confirm it loses nothing.
      bool found = false;
      const unsigned bound = 3 * t * k;
      for (unsigned a1 = 0; a1 < t && !found; ++a1)
        for (unsigned a2 = 0; a2 <= bound && !found; ++a2)
          for (unsigned a3 = 0; a3 < t && !found; ++a3)
            for (unsigned a4 = 0; a4 < t && !found; ++a4)
              found = a2 / k + a3 >= t && a1 + a3 + 1 <= t && a2 + a4 + 1 <= t;
      CHECK(found == (t > k));
      CHECK(family_system_solution(k, t).has_value() == found);
    }
}

TEST_CASE("sweep aggregates deterministically") {
  std::mt19937_64 rng(3);
  std::vector<WeightedOrientedGraph> graphs;
  for (int i = 0; i < 25; ++i) graphs.push_back(random_weighted_graph(4, 0.6, 2, rng));
  SweepOptions serial;
  serial.exec = Exec::serial;
  serial.max_t = 2;
  SweepOptions parallel = serial;
  parallel.exec = Exec::parallel;
  const auto a = sweep(graphs, serial);
  const auto b = sweep(graphs, parallel);
  CHECK(a.instances == 25);
  CHECK(a.checks == b.checks);
  CHECK(a.disagreements.empty());
  CHECK(b.disagreements.empty());
  CHECK(a.witnesses == b.witnesses);
  CHECK(a.unsound_witnesses == 0);
}

TEST_CASE("counterexample bundles serialize") {
  Counterexample c{"equal", k3(), 2, "synthetic", {{"power", edge_ideal(k3())}}, betti_table(edge_ideal(k3()))};
  const DisagreementError e(c);
  const auto j = to_json(e.bundle());
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["graph"] == to_json(k3()));
  CHECK(j["ideals"]["power"] == to_json(edge_ideal(k3())));
  CHECK(j["betti"].is_array());
}
