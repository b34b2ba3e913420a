#include <doctest.h>

#include <filesystem>

#include "support.hpp"
#include "tolfac/io.hpp"
#include "tolfac/lattices.hpp"
#include "tolfac/varieties.hpp"

using namespace tolfac;
using namespace tolfac::test;

namespace {

  std::string fixture(std::string const& name) {
    return std::string(TOLFAC_FIXTURE_DIR) + "/" + name;
  }

  std::string const c3_text = R"({
  "name": "C3",
  "size": 3,
  "operations": [
    {"symbol": "join", "arity": 2, "table": [[0,1,2],[1,1,2],[2,2,2]]},
    {"symbol": "meet", "arity": 2, "table": [[0,0,0],[0,1,1],[0,1,2]]}
  ]
})";

  std::string schema_message(std::string const& text) {
    try {
      parse_algebra(text);
    } catch (SchemaError const& e) {
      return e.what();
    }
    return "";
  }

}  // namespace

TEST_CASE("parse_algebra") {
  auto const c3 = parse_algebra(c3_text);
  CHECK(c3.name == "C3");
  CHECK(c3.algebra == chain(3));

  auto const band = read_algebra_file(fixture("band3.json"));
  CHECK(band.algebra == band3());
  CHECK(read_algebra_file(fixture("c3.json")).algebra == chain(3));
}

TEST_CASE("schema errors name the field") {
  std::string bad = c3_text;
  bad.replace(bad.find("[0,1,2],[1,1,2]"), 7, "[0,1,5]");
  auto const msg = schema_message(bad);
  CHECK(msg.find("operations[0].table[0][2]") != std::string::npos);

  CHECK_FALSE(schema_message(R"({"size": 2, "operations": []})").empty());
  CHECK(schema_message(R"({"name": "x", "size": 2, "operations": [{"symbol": "f", "arity": 1, "table": [0]}]})")
            .find("operations[0].table") != std::string::npos);
  CHECK(schema_message("{ not json").find("line") != std::string::npos);
  CHECK_FALSE(schema_message(R"({"name": "x", "size": -1, "operations": []})").empty());
  CHECK_THROWS_AS(read_algebra_file(fixture("does_not_exist.json")), InvalidArgument);
}

TEST_CASE("canonical text round trips byte for byte") {
  for (auto const& name : {"c3.json", "band3.json", "band3_quotient.json"}) {
    auto const text = read_text_file(fixture(name));
    CHECK(write_algebra(parse_algebra(text)) == text);
  }
  std::vector<FiniteAlgebra> corpus = enumerate_lattices(5);
  corpus.push_back(lat_to_latt(chain(3)));
  corpus.push_back(b4_rotation());
  corpus.push_back(FiniteAlgebra(2, Signature({{"c", 0}, {"f", 1}}), {{1}, {1, 0}}));
  for (auto const& a : corpus) {
    auto const text = write_algebra({"x", a});
    auto const back = parse_algebra(text);
    CHECK(back.algebra == a);
    CHECK(write_algebra(back) == text);
  }
}

TEST_CASE("witness fixture round trip") {
  auto const text = read_text_file(fixture("latt_witness.json"));
  auto const fx   = read_witness_fixture(fixture("latt_witness.json"));
  CHECK(write_witness_fixture(fx) == text);
  CHECK(fx.witness.containers.size() >= 2);
}

TEST_CASE("tolerance literals") {
  auto const t = parse_tolerance("01,12", 3);
  CHECK(t == rel(3, {{0, 1}, {1, 2}}));
  CHECK(parse_tolerance("0-1,1-2", 3) == t);
  CHECK(parse_tolerance("delta", 3) == BinaryRelation::diagonal(3));
  CHECK(parse_tolerance("", 3) == BinaryRelation::diagonal(3));
  CHECK(parse_tolerance("nabla", 3) == BinaryRelation::total(3));
  CHECK(tolerance_literal(t) == "01,12");
  CHECK(tolerance_literal(BinaryRelation::diagonal(3)) == "delta");
  CHECK(parse_tolerance(tolerance_literal(rel(12, {{3, 11}})), 12) == rel(12, {{3, 11}}));
  CHECK_THROWS_AS(parse_tolerance("03", 3), SchemaError);
  CHECK_THROWS_AS(parse_tolerance("0x", 3), SchemaError);
}

TEST_CASE("digest is stable") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
