#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_helpers.hpp"
#include "trop/io.hpp"
#include "trop/svg.hpp"

using namespace trop;
using namespace troptest;

TEST_CASE("exact number serialization") {
  CHECK(json_int(Int(5)) == Json(5));
  CHECK(json_int(Int(-5)) == Json(-5));
  Int big = pow_int(10, 30);
  CHECK(json_int(big).is_string());
  CHECK(int_from_json(json_int(big)) == big);

  CHECK(json_rat(Rat(7)) == Json(7));
  CHECK(json_rat(make_rat(3, 6)) == Json("1/2"));
  CHECK(rat_from_json(json_rat(make_rat(22, 7))) == make_rat(22, 7));
  CHECK(rat_from_json(Json("-5/10")) == make_rat(-1, 2));
  CHECK_THROWS_AS(rat_from_json(Json("1/0")), ValidationError);
  CHECK_THROWS_AS(rat_from_json(Json("abc")), ValidationError);
}

TEST_CASE("system parse round-trip") {
  Json j = {
      {"ambient_dim", 2},
      {"polynomials",
       {{{"terms",
          {{{"exponent", {0, 0}}, {"valuation", "1/2"}, {"sign", 1}},
           {{"exponent", {1, 0}}, {"valuation", -3}, {"sign", -1}},
           {{"exponent", {0, 1}}, {"valuation", "2"}}}}}}},
  };
  TropicalSystem sys = parse_system(j);
  CHECK(sys.ambient_dim() == 2);
  CHECK(sys.size() == 1);
  CHECK(sys.poly(0).terms()[0].lift == make_rat(1, 2));
  CHECK(sys.poly(0).terms()[1].lift == Rat(-3));
  CHECK(sys.poly(0).terms()[1].sign == -1);
  CHECK(sys.poly(0).terms()[2].sign == 0);

  Json back = serialize_system(sys);
  TropicalSystem sys2 = parse_system(back);
  CHECK(serialize_system(sys2) == back);
  CHECK(input_digest(back) == input_digest(serialize_system(sys2)));
}

TEST_CASE("parse validation failures") {
  CHECK_THROWS_AS(parse_system(Json::array()), ValidationError);
  CHECK_THROWS_AS(parse_system(Json{{"ambient_dim", 2}}), ValidationError);
  Json dup = {{"ambient_dim", 1},
              {"polynomials",
               {{{"terms",
                  {{{"exponent", {0}}, {"valuation", 0}},
                   {{"exponent", {0}}, {"valuation", 1}}}}}}}};
  CHECK_THROWS_AS(parse_system(dup), ValidationError);
  Json badsign = {{"ambient_dim", 1},
                  {"polynomials",
                   {{{"terms", {{{"exponent", {0}}, {"valuation", 0}, {"sign", 2}}}}}}}};
  CHECK_THROWS_AS(parse_system(badsign), ValidationError);
}

TEST_CASE("svg output is deterministic and structured") {
  auto sys = two_lines();
  SvgOptions opts;
  std::string a = emit_svg(sys, opts);
  std::string b = emit_svg(sys, opts);
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  // two curves and one intersection marker
  CHECK(a.find("circle") != std::string::npos);
  CHECK(a.find("#1f77b4") != std::string::npos);
  CHECK(a.find("#d62728") != std::string::npos);
}

TEST_CASE("svg of a single line has three rays from one vertex") {
  TropicalSystem sys({line()});
  std::string svg = emit_svg(sys);
  std::size_t lines = 0, pos = 0;
  while ((pos = svg.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == 3);
}

TEST_CASE("svg of the conic: 2 vertices, 1 bounded edge, 4 rays") {
  std::vector<TropicalTerm> terms = {{ivec_of({0, 0}), Rat(0), 1},
                                     {ivec_of({1, 0}), Rat(0), 1},
                                     {ivec_of({0, 1}), Rat(0), 1},
                                     {ivec_of({1, 1}), Rat(1), 1}};
  TropicalSystem sys({TropicalPolynomial(2, terms)});
  std::string svg = emit_svg(sys);
  std::size_t lines = 0, pos = 0;
  while ((pos = svg.find("<line", pos)) != std::string::npos) {
    ++lines;
    pos += 5;
  }
  CHECK(lines == 5); // 1 bounded edge + 4 rays
}

TEST_CASE("svg respects an explicit bounding box") {
  TropicalSystem sys({line()});
  SvgOptions opts;
  opts.bbox = {{Rat(-1), Rat(-1), Rat(1), Rat(1)}};
  std::string svg = emit_svg(sys, opts);
  CHECK(svg.find("<svg") != std::string::npos);

  SvgOptions bad;
  bad.bbox = {{Rat(1), Rat(1), Rat(-1), Rat(-1)}};
  CHECK_THROWS_AS(emit_svg(sys, bad), ValidationError);
}

TEST_CASE("svg overlay of curves with empty intersection has no markers") {
  // two parallel binomial lines never meet in a zero-cell
  std::vector<TropicalTerm> t1 = {{ivec_of({0, 0}), Rat(0), 1}, {ivec_of({1, 0}), Rat(0), 1}};
  std::vector<TropicalTerm> t2 = {{ivec_of({0, 0}), Rat(0), 1}, {ivec_of({1, 0}), Rat(1), 1}};
  TropicalSystem sys({TropicalPolynomial(2, t1), TropicalPolynomial(2, t2)});
  std::string svg = emit_svg(sys);
  CHECK(svg.find("circle") == std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
}

TEST_CASE("weight record serialization") {
  auto ms = cayley_trick(two_identical_lines());
  auto cells = ms.maximal_cells();
  REQUIRE(cells.size() == 1);
  Json j = weight_record_json(weight_general(ms, *cells[0]));
  CHECK(j["weight"] == Json(1));
  CHECK(j["transversal"] == Json(false));
  CHECK(j["breakdown"].size() == 1);
}
