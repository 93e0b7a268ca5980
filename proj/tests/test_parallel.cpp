#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <omp.h>
#include "oracles.hpp"
#include "wog/cm.hpp"
#include "wog/generate.hpp"
#include "wog/theorems.hpp"

using namespace wog;

namespace {
// Oversubscribe even on one core so the parallel paths really interleave.
const bool kThreads = [] {
  omp_set_num_threads(4);
  return true;
}();
}  // namespace

TEST_CASE("parallel Betti tables equal the serial reference") {
  REQUIRE(kThreads);
  int threads = 0;
#pragma omp parallel
#pragma omp single
  threads = omp_get_num_threads();
  CHECK(threads == 4);
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = oracle::random_ideal(rng, 4, 6, 3);
    if (I.is_unit()) continue;
    BettiOptions serial, parallel;
    serial.exec = Exec::serial;
    parallel.exec = Exec::parallel;
    CHECK(betti_table(I, serial) == betti_table(I, parallel));
  }
  const auto d = example_family(3);
  const auto S = symbolic_power(d, 3);
  BettiOptions serial;
  serial.exec = Exec::serial;
  CHECK(betti_table(S, serial) == betti_table(S));
}

TEST_CASE("parallel colon depth equals the serial reference") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const auto I = oracle::random_ideal(rng, 4, 5, 3);
    if (I.is_unit()) continue;
    const auto a = depth_by_colon(I, Field{}, 1'000'000, Exec::serial);
    const auto b = depth_by_colon(I, Field{}, 1'000'000, Exec::parallel);
    CHECK(a.depth == b.depth);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("exceptions inside parallel regions reach the caller") {
  BettiOptions tiny;
  tiny.max_degrees = 2;
  CHECK_THROWS_AS(betti_table(MonomialIdeal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), tiny), std::length_error);
}
