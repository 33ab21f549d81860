#include <filesystem>
#include <string>

#include "doctest.h"
#include "holopois/errors.hpp"
#include "holopois/parse.hpp"
#include "holopois/structure_file.hpp"
#include "support.hpp"

using namespace holopois;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = HOLOPOIS_FIXTURES_DIR;

ParseError parse_error_of(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0);
}

}  // namespace

TEST_CASE("structure file with bracket lines") {
  auto def = parse_structure(
      "# surface\n"
      "chart: w, z\n"
      "weights: 1, 1\n"
      "poisson:\n"
      "  {w, z} = w*z   # node\n");
  CHECK(def.chart->names() == std::vector<std::string>{"w", "z"});
  CHECK(def.kind == StructureDefinition::Kind::Brackets);
  CHECK(def.bivector == parse_polyvector("w*z dw^dz", def.chart));
}

TEST_CASE("structure file builders") {
  auto jac = parse_structure("chart: x, y, z\npoisson:\n jacobian3 F = x*y*z\n");
  CHECK(jac.kind == StructureDefinition::Kind::Jacobian3);
  REQUIRE(jac.casimir);
  CHECK(jac.bivector == jacobian_poisson_3(*jac.casimir).bivector());

  auto diag = parse_structure("chart: a, b\npoisson:\n diagonal lambda = 0, 2; -2, 0\n");
  CHECK(diag.kind == StructureDefinition::Kind::Diagonal);
  CHECK(diag.bivector == parse_polyvector("2*a*b da^db", diag.chart));

  auto weighted = parse_structure("chart: w, z\nweights: 3, 2\npoisson:\n");
  CHECK(weighted.chart->weights() == std::vector<int>{3, 2});
  CHECK(weighted.bivector.is_zero());
}

TEST_CASE("structure file errors carry line and column") {
  auto e = parse_error_of("chart: w, z\npoisson:\n  {w, z} = w*q\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 14);

  e = parse_error_of("chart: w, z\npoisson:\n  {z, w} = w\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 3);

  e = parse_error_of("chart: w, z\npoisson:\n  {w, z} = w\n  {w, z} = z\n");
  CHECK(e.line() == 4);

  e = parse_error_of("chart: w, z\npoisson:\n  {w, y} = w\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 7);

  e = parse_error_of("poisson:\n  {w, z} = w\n");
  CHECK(e.bare_message() == "missing chart block");

  e = parse_error_of("chart: w, z\nfoo\npoisson:\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 1);

  e = parse_error_of("chart: w, z\nweights: 1, 0\npoisson:\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 13);

  e = parse_error_of("chart: w, w\npoisson:\n");
  CHECK(e.line() == 1);

  e = parse_error_of("chart: w\npoisson:\n");
  CHECK(e.line() == 1);

  e = parse_error_of("chart: w, z\n");
  CHECK(e.bare_message() == "missing poisson block");

  e = parse_error_of("chart: a, b\npoisson:\n diagonal lambda = 0, 1; 1, 0\n");
  CHECK(e.line() == 3);

  e = parse_error_of("chart: a, b\npoisson:\n diagonal lambda = 0, 1; -1\n");
  CHECK(e.line() == 3);

  e = parse_error_of("chart: x, y, z\npoisson:\n jacobian3 F = x\n {x, y} = 1\n");
  CHECK(e.line() == 4);

  e = parse_error_of("chart: a, b\npoisson:\n jacobian3 F = a\n");
  CHECK(e.line() == 3);

  e = parse_error_of("chart: w, z\npoisson: {w, z} = 1\n");
  CHECK(e.line() == 2);
}

TEST_CASE("every fixture parses and survives re-serialization") {
  int count = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".poisson") continue;
    CAPTURE(entry.path().string());
    auto def = load_structure(entry.path().string());
    auto again = parse_structure(serialize_structure(def));
    CHECK(*again.chart == *def.chart);
    CHECK(again.bivector == def.bivector);
    for (unsigned i = 0; i < def.chart->size(); ++i)
      for (unsigned j = i + 1; j < def.chart->size(); ++j)
        CHECK(again.bivector.coefficient({i, j}) == def.bivector.coefficient({i, j}));
    ++count;
  }
  CHECK(count >= 10);
  for (const auto& entry : fs::directory_iterator(kFixtures / "invalid")) {
    CAPTURE(entry.path().string());
    CHECK_THROWS_AS(load_structure(entry.path().string()), ParseError);
  }
}

TEST_CASE("property: random structures round-trip through text") {
  testing::RandomSource rs(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto n = static_cast<std::size_t>(rs.integer(2, 4));
    auto chart = Chart::numbered(n, "v");
    StructureDefinition def{chart, StructureDefinition::Kind::Brackets, rs.polyvector(chart, 2, 3, 4), {}, {}};
    auto again = parse_structure(serialize_structure(def));
    CHECK(again.bivector == def.bivector);
  }
}
