#include "support.hpp"

#include "kmq/errors.hpp"
#include "kmq/io.hpp"

#include <fstream>
#include <random>
#include <sstream>

using namespace kmq;
using kmq::io::json;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    std::random_device rd;
    path = std::filesystem::temp_directory_path() / ("kmq-test-" + std::to_string(rd()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("GCM JSON") {
  const GCM a = io::gcm_from_json(json::parse(R"({"matrix": [[2, -1], [-4, 2]]})"));
  CHECK(a.rank() == 2);
  CHECK(a.symmetrizer(0) == 4);
  CHECK(a.symmetrizer(1) == 1);
  CHECK(io::gcm_from_json(io::to_json(a)).matrix == a.matrix);

  const GCM b = io::gcm_from_json(json::parse(R"({"matrix": [[2, -1], [-4, 2]], "symmetrizer": [8, "2"]})"));
  CHECK(b.symmetrizer(0) == 8);

  CHECK_THROWS_AS(io::gcm_from_json(json::parse(R"({"matrix": [[2, 1], [-1, 2]]})")), NotGCM);
  CHECK_THROWS_AS(io::gcm_from_json(json::parse(R"({"matrix": [[2, -1], [0, 2]]})")), NotGCM);
  CHECK_THROWS_AS(io::gcm_from_json(json::parse(R"({"matrix": [[2, -1, 0], [-1, 2]]})")), NotGCM);
  CHECK_THROWS_AS(io::gcm_from_json(json::parse(R"({"rows": []})")), InputError);
  CHECK_THROWS_AS(io::gcm_from_json(json::parse(R"({"matrix": [[2, -1], [-1, 2]], "symmetrizer": [1]})")),
                  DimensionMismatch);
  CHECK_THROWS_AS(io::load_gcm("/nonexistent/gcm.json"), InputError);
}

TEST_CASE("weight literals") {
  const GCM a = cartan::affine_a(1);
  const Weight w = io::parse_weight("(0,3,-2)", a);
  CHECK(w == test::a1w(0, 3, -2));
  CHECK(io::parse_weight(" ( 1/2, 1, 0 )", a).coroot_values(1) == Rational(1, 2));
  CHECK(io::parse_weight(R"({"coroot_values": [3, 0], "d_value": -2})", a) == test::a1w(0, 3, -2));
  CHECK(io::parse_weight(R"({"coroot_values": [1, 0]})", a).scaling_values(0) == 0);
  CHECK(io::parse_weight(io::to_json(w).dump(), a) == w);

  CHECK_THROWS_AS(io::parse_weight("(0,1)", a), InputError);
  CHECK_THROWS_AS(io::parse_weight("(0,1,2", a), InputError);
  CHECK_THROWS_AS(io::parse_weight("(0,x,2)", a), InputError);
  CHECK_THROWS_AS(io::parse_weight(R"({"coroot_values": [1]})", a), DimensionMismatch);
  CHECK_THROWS_AS(io::parse_weight("(0,1,0)", cartan::finite_a(2)), InputError);
  CHECK_THROWS_AS(io::parse_weight("{", a), InputError);

  const GCM a2 = cartan::finite_a(2);
  const Weight f = io::parse_weight(R"({"coroot_values": [1, "2/3"]})", a2);
  CHECK(f.scaling_values.size() == 0);
  CHECK(f.coroot_values(1) == Rational(2, 3));
}

TEST_CASE("root literals and polynomials") {
  const GCM a = cartan::affine_a(2);
  CHECK(io::parse_root("[1, 1, 1]", a) == RootVector{1, 1, 1});
  CHECK_THROWS_AS(io::parse_root("[1, 1]", a), DimensionMismatch);
  CHECK_THROWS_AS(io::parse_root("[1, 1.5, 1]", a), InputError);

  const QPolynomial p = test::poly({0, 1, 0, 2, -1});
  CHECK(io::to_json(p).dump() == R"([[1,"1"],[3,"2"],[4,"-1"]])");
  CHECK(io::polynomial_from_json(io::to_json(p)) == p);
  CHECK(io::polynomial_from_json(json::parse("[[2, 5], [2, -5]]")).is_zero());
  CHECK_THROWS_AS(io::polynomial_from_json(json::parse(R"([[1, "1/2"]])")), InputError);
}

TEST_CASE("root table round trip") {
  const GCM a = cartan::affine_a(1);
  const auto t = positive_roots_with_mult(a, RootVector{3, 3});
  const json j = io::to_json(t);
  CHECK(j.at("gcm_hash").get<std::string>() == a.hash_hex());
  CHECK(io::root_table_from_json(j) == t);

  json tampered = j;
  tampered["entries"][0]["mult"] = "7";
  CHECK_THROWS_AS(io::root_table_from_json(tampered), InputError);
  json bad_root = j;
  bad_root["entries"][0]["root"] = json::array({9, 9});
  bad_root.erase("checksum");
  CHECK_THROWS_AS(io::root_table_from_json(bad_root), InputError);
}

TEST_CASE("root table cache") {
  TempDir dir;
  std::ostringstream log;
  const io::RootTableCache cache(dir.path, &log);
  const GCM a = cartan::affine_a(1);
  const RootVector box{3, 3};
  const auto direct = positive_roots_with_mult(a, box);

  CHECK(!cache.load(a, box));
  CHECK(cache.get(a, box) == direct);
  CHECK(std::filesystem::exists(cache.file_for(a)));
  const auto loaded = cache.load(a, box);
  REQUIRE(loaded);
  CHECK(*loaded == direct);

  // A smaller request is served by restriction; a larger one widens the file.
  CHECK(cache.get(a, RootVector{1, 2}) == positive_roots_with_mult(a, RootVector{1, 2}));
  CHECK(cache.get(a, RootVector{2, 5}) == positive_roots_with_mult(a, RootVector{2, 5}));
  const auto wide = cache.load(a, RootVector{3, 5});
  REQUIRE(wide);
  CHECK(*wide == positive_roots_with_mult(a, RootVector{3, 5}));

  // A file written for another matrix is ignored.
  const GCM other = cartan::affine_a(2);
  std::filesystem::copy_file(cache.file_for(a), cache.file_for(other));
  CHECK(!cache.load(other, RootVector{1, 1, 1}));
  CHECK(cache.get(other, RootVector{1, 1, 1}) == positive_roots_with_mult(other, RootVector{1, 1, 1}));
  CHECK(log.str().empty());

  // A corrupt file is reported and rebuilt.
  {
    std::ofstream out(cache.file_for(a));
    out << "{\"gcm_hash\": ";
  }
  CHECK(cache.get(a, box) == direct);
  CHECK(log.str().find("corrupt") != std::string::npos);
  CHECK(cache.load(a, box));
}
