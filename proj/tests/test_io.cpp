#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "wog/io.hpp"

using namespace wog;

TEST_CASE("graph serializer key order and sorting") {
  const WeightedOrientedGraph d(3, {{2, 1}, {0, 1}}, {1, 4, 1});
  CHECK(to_json(d).dump() == R"({"n":3,"edges":[[1,2],[3,2]],"weights":[1,4,1]})");
}

TEST_CASE("parse_graph rejects structural problems") {
  CHECK_THROWS_AS(parse_graph_text("[]"), GraphError);
  CHECK_THROWS_AS(parse_graph_text(R"({"n":-1,"edges":[],"weights":[]})"), GraphError);
  CHECK_THROWS_AS(parse_graph_text(R"({"n":2,"edges":[[1]],"weights":[1,1]})"), GraphError);
  CHECK_THROWS_AS(parse_graph_text(R"({"n":2,"edges":[[1,2]],"weights":[1]})"), GraphError);
  CHECK_THROWS_AS(parse_graph_text(R"({"n":2,"edges":[[1,2.5]],"weights":[1,1]})"), GraphError);
  CHECK_THROWS_AS(parse_graph_text(R"({"n":21,"edges":[],"weights":[]})"), GraphError);
}

TEST_CASE("structure report JSON") {
  const WeightedOrientedGraph d(5, {{0, 1}, {0, 2}, {1, 2}}, {1, 1, 2, 1, 1});
  const Json j = to_json(structure_report(d));
  CHECK(j["sinks"] == Json::array({3}));
  CHECK(j["isolated"] == Json::array({4, 5}));
  CHECK(j["odd_girth"] == 3);
  CHECK(j["component_shapes"][0]["kind"] == "clique");
  CHECK(j["component_shapes"][0]["size"] == 3);
  const WeightedOrientedGraph path(3, {{0, 1}, {1, 2}}, {1, 1, 1});
  CHECK(to_json(structure_report(path))["odd_girth"] == "infinity");
}

TEST_CASE("verdict JSON carries the fixed keys") {
  CMVerdict v;
  v.theorem = "cmPowers";
  v.t = 3;
  v.structural = true;
  const Json j = to_json(v);
  for (const char* key : {"theorem", "t", "structural", "reasons", "oracle", "witness", "agreement"})
    CHECK(j.contains(key));
  CHECK(j["oracle"].is_null());
  CHECK(j["agreement"].is_null());
}

TEST_CASE("ideal and complex parsers validate") {
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"n":2,"gens":[[1]]})")), GraphError);
  CHECK_THROWS_AS(ideal_from_json(Json::parse(R"({"n":2,"gens":[[1,-1]]})")), GraphError);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"n":2,"facets":[[3]]})")), GraphError);
  CHECK(ideal_from_json(Json::parse(R"({"n":2,"gens":[[1,1],[2,2]]})")).gens().size() == 1);
}
