#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "urlat/generators.hpp"
#include "urlat/io.hpp"

using namespace urlat;
using testutil::el;
using testutil::q;
using testutil::sm;
using testutil::sm_tailed;
using testutil::tail;

TEST_CASE("rationals parse exactly and reject junk") {
  CHECK(parse_rat("3/4") == q("3/4"));
  CHECK(parse_rat("-7") == -7);
  CHECK(parse_rat("0") == 0);
  CHECK(rat_str(q("-2/6")) == "-1/3");
  CHECK(rat_str(q("5")) == "5");
  for (const char* bad : {"", "1/0", "a", "1.5", "2/", "/3", "1 2", "0x10"})
    CHECK_THROWS_AS(parse_rat(bad), ParseError);
}

TEST_CASE("elements round trip") {
  Element x = el({"1", "-2/3", "0"});
  CHECK(element_of_json(json_of_element(x)) == x);
  CHECK_THROWS_AS(element_of_json(parse_json_text("{}")), ParseError);
  CHECK_THROWS_AS(element_of_json(parse_json_text(R"({"dim":2,"coords":["1"]})")), ParseError);
  CHECK_THROWS_AS(element_of_json(parse_json_text(R"({"dim":0,"coords":[]})")), ParseError);
  CHECK_THROWS_AS(element_of_json(parse_json_text(R"({"dim":1,"coords":[1]})")), ParseError);
}

TEST_CASE("scalar maps round trip with and without tails") {
  ScalarMap f = sm({{"1", "5"}, {"-2", "3"}});
  CHECK(scalar_map_of_json(json_of_scalar_map(f)) == f);
  ScalarMap g = sm_tailed({{"-1", "4"}}, tail("1", "1/2", {"0", "1", "2"}, "3/2"));
  CHECK(scalar_map_of_json(json_of_scalar_map(g)) == g);
  CHECK(scalar_map_of_json(json_of_scalar_map(sm({}))) == sm({}));

  CHECK_THROWS_AS(scalar_map_of_json(parse_json_text(R"({"samples":[["1","2"],["1","3"]],"tail":null})")),
                  ParseError);
  CHECK_THROWS_AS(scalar_map_of_json(parse_json_text(R"({"samples":[["0","2"]],"tail":null})")),
                  ParseError);
  CHECK_THROWS_AS(scalar_map_of_json(parse_json_text(
                      R"({"samples":[],"tail":{"start":"1","step":"0","poly":["1"],"ratio":"1"}})")),
                  ParseError);
}

TEST_CASE("operators round trip and reject duplicate entries") {
  Rng rng(31);
  for (int i = 0; i < 30; ++i) {
    UrysonOperator t = gen_finite_operator(rng, rng.range(1, 4), rng.range(1, 3));
    CHECK(operator_of_json(json_of_operator(t)) == t);
  }
  UrysonOperator tt(1, 1);
  tt.set_entry(1, 1, sm_tailed({}, tail("1", "1", {"1"}, "2")));
  CHECK(operator_of_json(json_of_operator(tt)) == tt);

  CHECK_THROWS_AS(operator_of_json(parse_json_text(
                      R"({"n":1,"m":1,"entries":[
                          {"i":1,"j":1,"map":{"samples":[["1","2"]],"tail":null}},
                          {"i":1,"j":1,"map":{"samples":[["1","3"]],"tail":null}}]})")),
                  ParseError);
  CHECK_THROWS_AS(operator_of_json(parse_json_text(R"({"n":0,"m":1,"entries":[]})")), ParseError);
  CHECK_THROWS_AS(operator_of_json(parse_json_text(
                      R"({"n":1,"m":1,"entries":[{"i":2,"j":1,"map":{"samples":[],"tail":null}}]})")),
                  ParseError);
}

TEST_CASE("ideals, tables and kernels round trip") {
  LateralIdeal d = LateralIdeal::disjoint_union(
      {LateralIdeal::fragments_of(el({"1", "0", "0"})), LateralIdeal::order_ideal({el({"0", "0", "3"})})});
  Json j = json_of_ideal(d);
  LateralIdeal back = ideal_of_json(j);
  CHECK(json_of_ideal(back) == j);
  CHECK(back.contains(el({"1", "0", "7"})));

  std::map<Element, Element> table;
  table[el({"0", "0"})] = el({"0"});
  table[el({"2", "0"})] = el({"1/2"});
  CHECK(table_of_json(json_of_table(table)) == table);
  CHECK_THROWS_AS(table_of_json(parse_json_text("[[1,2]]")), ParseError);

  FiniteMeasureSpace a{{q("1"), q("1/2")}}, b{{q("3")}};
  std::map<std::tuple<int, int, Rat>, Rat> vals;
  vals[{2, 1, q("1")}] = q("-4");
  KernelTable kt(a, b, {q("0"), q("1")}, vals);
  KernelTable back_k = kernel_of_json(json_of_kernel(kt));
  CHECK(json_of_kernel(back_k) == json_of_kernel(kt));
  CHECK(back_k.build_operator() == kt.build_operator());
}

TEST_CASE("certificates serialize with the documented shape") {
  UrysonOperator t(1, 1);
  t.set_entry(1, 1, sm({{"1", "7"}}));
  Json j = json_of_certificate(synthesize_majorant(t));
  REQUIRE(j.contains("majorant"));
  REQUIRE(j.contains("probes"));
  REQUIRE(j.at("probes").is_array());
  CHECK(j.at("probes").at(0).contains("S"));
  CHECK(j.at("probes").at(0).contains("c"));
  CHECK(operator_of_json(j.at("majorant")) == synthesize_majorant(t).majorant);
}

TEST_CASE("malformed text and missing files raise parse errors") {
  CHECK_THROWS_AS(parse_json_text("{"), ParseError);
  CHECK_THROWS_AS(parse_json_text(""), ParseError);
  CHECK_THROWS_AS(parse_json_file("/nonexistent/file.json"), ParseError);
}

TEST_CASE("compact and pretty rendering are stable") {
  Json j = json_of_element(el({"1", "2"}));
  CHECK(render_json(j, true) == R"({"dim":2,"coords":["1","2"]})");
  CHECK(render_json(j, false).find('\n') != std::string::npos);
}
