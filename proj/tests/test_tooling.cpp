#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "dta/catalog.hpp"
#include "dta/export.hpp"
#include "dta/format.hpp"
#include "support.hpp"

using namespace dta;

namespace {

ArrayDocument random_document(std::mt19937_64& rng) {
  ArrayDocument doc;
  auto types = dta::testing::random_types(rng, 1, 6, 1, 5);
  auto n = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
  doc.array = dta::testing::random_array(rng, n, types);
  doc.t = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
  doc.d = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
  if (rng() % 2) doc.lambda = rng() % 5;
  for (std::size_t j = 0; j < types.k(); ++j) {
    if (rng() % 3 == 0) doc.names.factors[j] = "factor " + std::to_string(j);
    for (Level x = 0; x < types[j]; ++x)
      if (rng() % 2) doc.names.levels[{j, x}] = "lv" + std::to_string(rng() % 100);
  }
  return doc;
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_document(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("canonical text round-trips") {
  const std::string s =
      "DTA 1\n"
      "N=2 k=3 t=2 d=1\n"
      "types=2 2 3\n"
      "0 1 2\n"
      "1 0 0\n"
      "# factor col=1 Mode\n"
      "# name col=1 0=off\n"
      "# name col=3 2=high\n";
  auto doc = parse_document(s);
  CHECK(doc.array.rows() == 2);
  CHECK(doc.array.at(0, 2) == 2);
  CHECK(doc.names.factor(0) == "Mode");
  CHECK(doc.names.factor(1) == "c2");
  CHECK(*doc.names.level(2, 2) == "high");
  CHECK_FALSE(doc.names.level(1, 0));
  CHECK(serialize(doc) == s);
}

TEST_CASE("catalog documents round-trip") {
  for (const auto& id : catalog_ids()) {
    auto e = catalog_get(id);
    if (!e.document) continue;
    auto text = serialize(*e.document);
    CHECK(parse_document(text) == *e.document);
    CHECK(serialize(parse_document(text)) == text);
  }
}

TEST_CASE("random documents round-trip") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    auto doc = random_document(rng);
    auto text = serialize(doc);
    auto back = parse_document(text);
    CHECK(back == doc);
    CHECK(serialize(back) == text);
  }
}

TEST_CASE("file round-trip") {
  auto path = std::filesystem::temp_directory_path() / "dta_tooling_test.dta";
  auto doc = *catalog_get("table1").document;
  write_document(path, doc);
  CHECK(read_document(path) == doc);
  std::filesystem::remove(path);
  CHECK_THROWS(read_document(path));
}

TEST_CASE("parse errors carry locations") {
  CHECK(parse_error_line("DTA 2\n") == 1);
  CHECK(parse_error_line("DTA 1\nN=1 k=2 t=1\ntypes=2 2\n0 0\n") == 2);
  CHECK(parse_error_line("DTA 1\nN=1 k=2 t=1 d=1\ntypes=2\n0 0\n") == 3);
  CHECK(parse_error_line("DTA 1\nN=2 k=2 t=1 d=1\ntypes=2 2\n0 0\n1 2\n") == 5);
  CHECK(parse_error_line("DTA 1\nN=1 k=2 t=1 d=1\ntypes=2 2\n0\n") == 4);
  CHECK(parse_error_line("DTA 1\nN=1 k=2 t=1 d=1\ntypes=2 2\n0 x\n") == 4);
  CHECK(parse_error_line("DTA 1\nN=1 k=2 t=1 d=1\ntypes=2 2\n0 0\n"
                         "# name col=3 0=a\n") == 5);
  CHECK(parse_error_line("DTA 1\nN=2 k=2 t=1 d=1\ntypes=2 2\n0 0\n") > 0);
  CHECK(parse_error_line("DTA 1\nN=1 k=2 t=1 d=1\ntypes=2 2\n0 0\n"
                         "# a free comment\n") == 0);
}

TEST_CASE("catalog entries") {
  auto t1 = catalog_get("table1");
  REQUIRE(t1.document);
  CHECK(t1.document->array.rows() == 18);
  CHECK(t1.document->array.types() == TypeVector{2, 3, 3, 3});
  CHECK(verify_catalog_entry(t1).holds);
  CHECK(name_interaction(t1.document->names, Interaction{{0, 0}, {2, 0}}) ==
        "Function scope=Current, Client type=MSNET");

  auto e = catalog_get("example34");
  REQUIRE(e.document);
  CHECK(e.document->array.rows() == 48);
  CHECK(e.document->array.types() == TypeVector{3, 3, 3, 4, 4});
  CHECK(verify_catalog_entry(e).holds);
  CHECK_FALSE(is_super_simple(e.document->array, 2).holds);

  auto targets = catalog_get("table2-targets");
  CHECK_FALSE(targets.document);
  CHECK(targets.targets.size() == table2_targets().size());
  CHECK(verify_catalog_entry(targets).holds);
  for (const auto& row : table2_targets()) {
    CHECK(row.rows <= 30);
    CHECK(lower_bound(1, 2, row.types_for(row.max_a)) == row.rows);
  }
  CHECK_THROWS_AS(catalog_get("nope"), DomainError);
}

TEST_CASE("test-suite export") {
  auto doc = *catalog_get("table1").document;
  auto csv = export_suite(doc);
  std::istringstream in(csv);
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(first == "Current,Share mode,MSNET,Empty");
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 19);

  auto numeric = export_suite(doc, true);
  CHECK(numeric.find("\n0,0,0,0\n") != std::string::npos);

  auto bare = doc;
  bare.names = {};
  CHECK_THROWS_AS(export_suite(bare), DomainError);
  auto raw = export_suite(bare, true);
  CHECK(raw.rfind("c1,c2,c3,c4\n0,0,0,0\n", 0) == 0);

  auto partial = doc;
  partial.names.levels.erase({2, 1});
  try {
    export_suite(partial);
    FAIL("expected an error");
  } catch (const DomainError& err) {
    CHECK(std::string(err.what()).find("col=3 level=1") != std::string::npos);
  }

  auto quoted = doc;
  quoted.names.levels[{0, 0}] = "a,\"b\"";
  CHECK(export_suite(quoted).find("\"a,\"\"b\"\"\"") != std::string::npos);
}
