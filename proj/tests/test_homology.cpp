#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "wog/field.hpp"
#include "wog/generate.hpp"
#include "wog/homology.hpp"

using namespace wog;

namespace {

VertexSet vs(std::initializer_list<int> labels) {
  VertexSet s;
  for (int l : labels) s.insert(static_cast<Vertex>(l - 1));
  return s;
}

SimplicialComplex cx(std::size_t n, std::vector<VertexSet> facets) { return SimplicialComplex::from_faces(n, facets); }

SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::uint32_t> pick(1, (1U << n) - 1);
  std::uniform_int_distribution<int> count(1, 5);
  std::vector<VertexSet> facets;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) facets.emplace_back(pick(rng));
  return cx(n, facets);
}

}  // namespace

TEST_CASE("fields") {
  CHECK(Field::parse("q").is_rational());
  CHECK(Field::parse("gf:7").characteristic() == 7);
  CHECK_THROWS_AS(Field::parse("gf:9"), std::invalid_argument);
  CHECK_THROWS_AS(Field::parse("r"), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
  CHECK(is_prime(2147483647ULL));
}

TEST_CASE("matrix ranks") {
  CHECK(rank_rational({{1, 2}, {2, 4}}) == 1);
  CHECK(rank_rational({{1, 0}, {0, 1}}) == 2);
  CHECK(rank_rational({}) == 0);
  CHECK(rank_mod_p({{1, 1}, {1, -1}}, 2) == 1);
  CHECK(rank_rational({{1, 1}, {1, -1}}) == 2);
  // Entries large enough that fraction-free elimination overflows 64 bits.
  const long long big = 3'000'000'000LL;
  CHECK(rank_rational({{big, big + 1, 7}, {big + 2, big, 5}, {2 * big + 2, 2 * big + 1, 12}}) == 2);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 200; ++trial) {
    IntMatrix m(5, std::vector<long>(6));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    CHECK(rank_rational(m) == oracle::rational_rank(m));
  }
}

TEST_CASE("homology of spheres and simple complexes") {
  const auto circle = cx(3, {vs({1, 2}), vs({2, 3}), vs({1, 3})});
  CHECK(homology_ranks(circle).ranks == std::vector<std::size_t>{0, 0, 1});
  CHECK(homology_ranks(circle).rank(1) == 1);
  CHECK(homology_ranks(circle).rank(0) == 0);
  CHECK(homology_ranks(cx(2, {vs({1}), vs({2})})).rank(0) == 1);
  const auto sphere = cx(4, {vs({1, 2, 3}), vs({1, 2, 4}), vs({1, 3, 4}), vs({2, 3, 4})});
  CHECK(homology_ranks(sphere).ranks == std::vector<std::size_t>{0, 0, 0, 1});
  CHECK(homology_ranks(SimplicialComplex::empty_complex(3)).rank(-1) == 1);
  CHECK(homology_ranks(SimplicialComplex::void_complex(3)).acyclic());
  CHECK(homology_ranks(SimplicialComplex::simplex(3, vs({1, 2, 3}))).acyclic());
  const auto two_circles = cx(6, {vs({1, 2}), vs({2, 3}), vs({1, 3}), vs({4, 5}), vs({5, 6}), vs({4, 6})});
  CHECK(homology_ranks(two_circles).rank(0) == 1);
  CHECK(homology_ranks(two_circles).rank(1) == 2);
}

TEST_CASE("projective plane separates characteristic 2") {
  // Six-vertex triangulation of RP^2: H1 has Z/2 torsion.
  const auto rp2 = cx(6, {vs({1, 2, 3}), vs({1, 3, 4}), vs({1, 4, 5}), vs({1, 5, 6}), vs({1, 2, 6}), vs({2, 3, 5}),
                          vs({3, 4, 6}), vs({2, 4, 5}), vs({3, 5, 6}), vs({2, 4, 6})});
  CHECK(homology_ranks(rp2).acyclic());
  const auto mod2 = homology_ranks(rp2, Field::prime(2));
  CHECK(mod2.rank(1) == 1);
  CHECK(mod2.rank(2) == 1);
  CHECK_FALSE(reisner_cm(rp2, Field::prime(2)));
  CHECK(reisner_cm(rp2));
}

TEST_CASE("homology matches the rational oracle and the Euler characteristic") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto delta = random_complex(rng, n);
    const auto expected = oracle::reduced_betti(oracle::masks(delta), n);
    const auto got = homology_ranks(delta);
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(got.rank(static_cast<int>(k) - 1) == expected[k]);
    // Small complexes carry no torsion, so all fields agree.
    CHECK(homology_ranks(delta, Field::prime(2)) .ranks == got.ranks);
    CHECK(homology_ranks(delta, Field::prime(3)).ranks == got.ranks);
  }
}

TEST_CASE("Reisner criterion and depth examples") {
  CHECK(reisner_cm(SimplicialComplex::simplex(3, vs({1, 2, 3}))));
  CHECK_FALSE(reisner_cm(cx(4, {vs({1, 2}), vs({3, 4})})));
  const SimpleGraph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
  CHECK(reisner_cm(independence_complex(c5)));
  CHECK(reisner_cm(SimplicialComplex::void_complex(2)));
  CHECK(sr_depth(cx(2, {vs({1}), vs({2})})) == 1);
  CHECK(sr_depth(SimplicialComplex::simplex(3, vs({1, 2, 3}))) == 3);
  CHECK(sr_depth(cx(3, {vs({1, 2}), vs({3})})) == 1);
  CHECK_THROWS(sr_depth(SimplicialComplex::void_complex(2)));
}

TEST_CASE("sr_depth attains dim + 1 exactly for Cohen-Macaulay complexes") {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const SimpleGraph& g : nonisomorphic_graphs(n)) {
      const auto delta = independence_complex(g);
      const std::size_t depth = sr_depth(delta);
      CHECK(depth <= static_cast<std::size_t>(delta.dim() + 1));
      CHECK((depth == static_cast<std::size_t>(delta.dim() + 1)) == reisner_cm(delta));
      if (!delta.is_connected() && delta.dim() > 0) CHECK_FALSE(reisner_cm(delta));
    }
}
