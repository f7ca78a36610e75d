#include "fixtures.hpp"

#include "realkirwan/errors.hpp"
#include "realkirwan/gkm_module.hpp"
#include "realkirwan/io.hpp"

#include <doctest.h>

using namespace realkirwan;
using io::json;

namespace {

std::string parse_error(const json& j) {
  try {
    io::graph_from_json(j);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("no error thrown");
  return {};
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(parse_rational("2/4") == Rational(1, 2));
  CHECK(parse_rational(" -3 ") == Rational(-3));
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(format_rational_list(parse_rational_list("1/3,0,5")) == "1/3,0,5");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational_list("1,,2"), Error);
}

TEST_CASE("polytope round trip") {
  for (const auto& name : fixtures::smooth_polytopes()) {
    const auto p = fixtures::polytope(name);
    CHECK(io::polytope_from_json(io::polytope_to_json(p)) == p);
  }
}

TEST_CASE("class round trip") {
  const auto g = fixtures::graph("flag_a2");
  for (const auto& c : basis_in_degree(g, 2)) CHECK(io::class_from_json(g, io::class_to_json(g, c)) == c);
}

TEST_CASE("schema errors name the offending path") {
  auto j = io::graph_to_json(fixtures::graph("cp2"));
  j["edges"][1]["char"] = json::array({1, 2});
  CHECK(parse_error(j).find("/edges/1/char/1") != std::string::npos);

  j = io::graph_to_json(fixtures::graph("cp2"));
  j["vertices"][0]["phi"] = json::array({"1/x", "0"});
  CHECK(parse_error(j).find("/vertices/0/phi") != std::string::npos);

  j = io::graph_to_json(fixtures::graph("cp2"));
  j.erase("q_dim");
  CHECK(parse_error(j).find("q_dim") != std::string::npos);

  j = io::graph_to_json(fixtures::graph("cp2"));
  j["edges"][0]["mult"] = 0;
  parse_error(j);

  CHECK_THROWS_AS(fixtures::graph("unknown_endpoint"), Error);
  CHECK_THROWS_AS(fixtures::graph("malformed"), Error);
  CHECK_THROWS_AS(fixtures::polytope("malformed"), Error);
  CHECK_THROWS_AS(io::read_json_file(fixtures::data_path("graphs/does_not_exist.json")), Error);
}

TEST_CASE("multiplicity defaults to one") {
  auto j = io::graph_to_json(fixtures::graph("cp2"));
  for (auto& e : j["edges"]) e.erase("mult");
  CHECK(io::graph_from_json(j) == fixtures::graph("cp2"));
}
