#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <cstdlib>
#include <unistd.h>

#include "qca/cache.hpp"
#include "qca/error.hpp"
#include "qca/io.hpp"
#include "qca/worked/identities.hpp"
#include "qca/worked/kronecker.hpp"
#include "support.hpp"

using namespace qca;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("qca_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("seed json roundtrip") {
  std::mt19937_64 rng(73);
  for (int t = 0; t < 10; ++t) {
    const QuantumSeed s = random_principal_seed(rng, 3, 2);
    CHECK(seed_from_json(Json::parse(seed_to_json(s).dump())) == s);
  }
  const fs::path dir = scratch("seed");
  save_seed(dir / "a11.json", a11_seed());
  CHECK(load_seed(dir / "a11.json") == a11_seed());
  CHECK(seed_to_json(a11_seed())["order"] == Json::array({1, 2}));
  fs::remove_all(dir);
}

TEST_CASE("seed parse errors") {
  CHECK_THROWS_AS(seed_from_json(Json::parse(R"({"m":2})")), ParseError);
  CHECK_THROWS_AS(seed_from_json(Json::parse(R"([1,2])")), ParseError);
  Json bad = seed_to_json(a11_seed());
  bad["B"] = Json::array({Json::array({0, -2})});
  CHECK_THROWS_AS(seed_from_json(bad), ParseError);
  bad = seed_to_json(a11_seed());
  bad["Lambda"][0][1] = 5;
  const fs::path dir = scratch("bad");
  write_json_file(dir / "s.json", bad);
  CHECK_THROWS_AS(load_seed(dir / "s.json"), ParseError);
  CHECK_NOTHROW(load_seed(dir / "s.json", false));
  fs::remove_all(dir);
}

TEST_CASE("element and expansion roundtrip") {
  std::mt19937_64 rng(79);
  const FormPtr f = test::a11_form();
  for (int t = 0; t < 10; ++t) {
    const TorusElement x = test::random_element(rng, f, 5, 3);
    CHECK(element_from_json(Json::parse(element_to_json(x).dump()), f) == x);
    EExpansion e;
    for (const auto& [k, c] : x.terms()) e.emplace(k, c);
    CHECK(expansion_from_json(expansion_to_json(e), 2) == e);
  }
}

TEST_CASE("int lists") {
  CHECK(parse_int_list("2,-1,0") == std::vector<int>{2, -1, 0});
  CHECK(parse_int_list(" -3 ") == std::vector<int>{-3});
  CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_int_list("x"), ParseError);
}

TEST_CASE("seed hash tracks content") {
  QuantumSeed s = a11_seed();
  const std::string h = seed_hash(s);
  CHECK(h == seed_hash(a11_seed()));
  s.lambda(0, 1) = 1;
  s.lambda(1, 0) = -1;
  CHECK(h != seed_hash(s));
}

TEST_CASE("row cache roundtrip, reuse and stale files") {
  const fs::path dir = scratch("cache");
  const QuantumSeed s = a11_seed();
  const auto basis = std::make_shared<const EBasis>(s);
  {
    TriangularTable table(basis);
    RowCache cache(s, dir);
    CHECK(cache.attach(table) == 0);
    table.row({-2, -2});
    table.row({-1, 0});
  }
  {
    TriangularTable table(basis);
    RowCache cache(s, dir);
    CHECK(cache.attach(table) == 2);
    const auto row = table.find({-2, -2});
    REQUIRE(row.has_value());
    CHECK(row->c == solve_row(*basis, {-2, -2}).c);
    CHECK(row->p == solve_row(*basis, {-2, -2}).p);
  }
  // a tampered row is dropped
  {
    RowCache cache(s, dir);
    const TableRow wrong{{{{1, 1}, LaurentPoly(1)}}, basis->element({-1, -1}) + basis->element({1, 1})};
    cache.append({-1, -1}, wrong);
    CHECK(cache.load(basis->form()).size() == 3);
    TriangularTable table(basis);
    CHECK(cache.attach(table) == 2);
    CHECK(table.row({-1, -1}).c == solve_row(*basis, {-1, -1}).c);
  }
  // a garbled line is skipped
  {
    RowCache cache(s, dir);
    std::ofstream(cache.file(), std::ios::app) << "{not json\n";
    CHECK(cache.load(basis->form()).size() == 3);
  }
  // a file written for another seed is not trusted
  {
    RowCache cache(s, dir);
    const fs::path file = cache.file();
    std::ofstream(file, std::ios::trunc) << R"({"seed_hash":"0000"})" << "\n"
                                        << R"({"a":[-1,-1],"p_row":[],"C":[]})" << "\n";
    CHECK(cache.load(basis->form()).empty());
    TriangularTable table(basis);
    CHECK(cache.attach(table) == 0);
    table.row({-1, -1});
    RowCache again(s, dir);
    CHECK(again.load(basis->form()).size() == 1);
  }
  fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  ::setenv("QCA_CACHE_DIR", "/tmp/qca_env_dir", 1);
  CHECK(RowCache::default_dir() == fs::path("/tmp/qca_env_dir"));
  ::unsetenv("QCA_CACHE_DIR");
  CHECK(RowCache::default_dir() == fs::path(".qca_cache"));
}
