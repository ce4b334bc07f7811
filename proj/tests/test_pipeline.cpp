#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "toric/analysis.hpp"
#include "toric/errors.hpp"
#include "toric/json_io.hpp"

using namespace toric;
using oracles::qvec;
using oracles::vec;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string golden_path(const std::string& name) {
  return std::string(TORIC_GOLDEN_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("analyze P^2") {
  AnalysisReport r = analyze(projective_space_fan(2));
  CHECK(r.dim == 2);
  CHECK(r.ray_count == 3);
  CHECK(r.picard_number == 1);
  CHECK(r.smooth);
  CHECK(r.complete);
  CHECK(r.fano);
  CHECK(r.all_nef);
  CHECK(r.nef_flags == std::vector<bool>{true, true, true});
  CHECK(r.nef_witnesses.empty());
  CHECK(r.root_count == 6);
  CHECK(r.semisimple_count == 6);
  CHECK(r.reductive);
  CHECK(r.semisimple_rank == 2);
  REQUIRE(r.product.has_value());
  CHECK(r.product->dims == std::vector<int>{2});
  CHECK(r.theorem_consistent);
}

TEST_CASE("analyze F_1") {
  Fan f1 = hirzebruch(1);
  AnalysisReport r = analyze(f1);
  CHECK(r.picard_number == 2);
  CHECK(r.fano);
  CHECK_FALSE(r.all_nef);
  // The only non-nef invariant divisor is the exceptional ray (0,1).
  REQUIRE(r.nef_witnesses.size() == 1);
  CHECK(r.nef_witnesses[0].ray == oracles::ray_index(f1, vec({0, 1})));
  CHECK_FALSE(r.reductive);
  CHECK(r.root_count == 4);
  CHECK(r.semisimple_count == 2);
  CHECK(r.semisimple_rank == 1);
  CHECK_FALSE(r.product.has_value());
  CHECK(r.theorem_consistent);
}

TEST_CASE("analyze the hexagon") {
  AnalysisReport r = analyze(oracles::fan_by_name("bl3_p2"));
  CHECK(r.fano);
  CHECK_FALSE(r.all_nef);
  CHECK(r.root_count == 0);
  CHECK(r.semisimple_rank == 0);
  CHECK(r.reductive);  // vacuous
  CHECK_FALSE(r.product.has_value());
  CHECK(r.theorem_consistent);
}

TEST_CASE("analyze rejects bad inputs with precondition errors") {
  Fan singular = make_fan(2, {vec({1, 0}), vec({1, 2}), vec({-1, -1})},
                          {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(analyze(singular), PreconditionError);
  Fan incomplete = make_fan(1, {vec({1})}, {{0}});
  CHECK_THROWS_AS(analyze(incomplete), PreconditionError);
  Fan invalid = make_fan(1, {vec({2}), vec({-1})}, {{0}, {1}});
  CHECK_THROWS_AS(analyze(invalid), PreconditionError);
}

TEST_CASE("reports are invariant under ray relabeling of the input") {
  std::mt19937 g = oracles::rng(80);
  for (const char* name : {"p2", "f1", "p1xp2"}) {
    Fan fan = oracles::fan_by_name(name);
    json expected = report_to_json(analyze(fan));
    for (int t = 0; t < 4; ++t) {
      std::vector<int> perm(fan.rays.size());
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
      std::shuffle(perm.begin(), perm.end(), g);
      std::vector<Vec> rays(fan.rays.size());
      for (std::size_t i = 0; i < perm.size(); ++i) rays[perm[i]] = fan.rays[i];
      std::vector<std::vector<int>> cones;
      for (const auto& c : fan.max_cones) {
        std::vector<int> cone;
        for (int i : c) cone.push_back(perm[i]);
        cones.push_back(std::move(cone));
      }
      Fan relabeled = make_fan(fan.dim, rays, cones);
      CHECK(report_to_json(analyze(relabeled)) == expected);
    }
  }
}

TEST_CASE("theorem consistency on random wall subdivisions") {
  std::mt19937 g = oracles::rng(81);
  for (const char* name : {"p2", "p1xp1", "f1", "p3"}) {
    Fan fan = oracles::fan_by_name(name);
    for (int t = 0; t < 5; ++t) {
      Fan mutated = fan;
      int rounds = 1 + static_cast<int>(t % 2);
      for (int s = 0; s < rounds; ++s)
        mutated = oracles::random_wall_subdivision(mutated, g);
      CHECK(validate(mutated, true).empty());
      CHECK(is_smooth(mutated));
      CHECK(is_complete(mutated));
      AnalysisReport r = analyze(mutated);
      CHECK(r.theorem_consistent);
      // A blown-up fan is never a product of projective spaces here: it has
      // a non-nef invariant divisor, so under Fano the product must vanish.
      if (r.fano) CHECK_FALSE(r.all_nef);
    }
  }
}

TEST_CASE("theorem sweeps") {
  SUBCASE("dimension 2") {
    SweepSummary s = theorem_sweep(smooth_fano_surfaces());
    CHECK(s.results.size() == 5);
    CHECK(s.fano_count == 5);
    CHECK(s.all_nef_count == 2);
    CHECK(s.product_count == 2);
    CHECK(s.all_consistent);
  }
  SUBCASE("dimension 3 products") {
    std::vector<CatalogEntry> entries;
    for (const char* name : {"p3", "p1xp2", "p1xp1xp1"})
      entries.push_back(*find_entry(name));
    SweepSummary s = theorem_sweep(entries);
    CHECK(s.fano_count == 3);
    CHECK(s.all_nef_count == 3);
    CHECK(s.product_count == 3);
    CHECK(s.all_consistent);
  }
  SUBCASE("everything, including the mixed product") {
    SweepSummary s = theorem_sweep(catalog_entries());
    CHECK(s.all_consistent);
    for (const auto& [name, r] : s.results)
      if (name == "f1xp1") {
        CHECK(r.fano);
        CHECK_FALSE(r.all_nef);
        CHECK_FALSE(r.product.has_value());
      }
  }
}

TEST_CASE("fan JSON round trip") {
  for (const CatalogEntry& e : catalog_entries())
    CHECK(parse_fan(fan_to_json(e.fan)) == e.fan);
  json j = json::parse(R"({"dim":2,"rays":[[1,0],[0,1],[-1,-1]],)"
                       R"("max_cones":[[0,1],[1,2],[2,0]]})");
  CHECK(parse_fan(j) == projective_space_fan(2));
}

TEST_CASE("polytope JSON round trip with rationals") {
  VPolytope p = make_vpolytope(
      2, {QVec{make_rat(1, 2), Rat(0)}, QVec{Rat(-1), make_rat(-2, 3)},
          QVec{Rat(0), Rat(1)}});
  json j = polytope_to_json(p);
  CHECK(parse_polytope(j) == p);
  // sorted: (-1,-2/3) first; integer coordinates stay JSON integers
  CHECK(j["vertices"][0][0] == -1);
  CHECK(j["vertices"][0][1] == "-2/3");
  VPolytope q = parse_polytope(
      json::parse(R"({"dim":1,"vertices":[["3/6"],[-1]]})"));
  CHECK(q.vertices == std::vector<QVec>{QVec{Rat(-1)}, QVec{make_rat(1, 2)}});
}

TEST_CASE("divisor JSON") {
  Fan p2 = projective_space_fan(2);
  ToricDivisor d = parse_divisor(json::parse(R"({"coefficients":[1,0,2]})"), p2);
  CHECK(d.coefficients == std::vector<Int>{1, 0, 2});
  CHECK(parse_divisor(divisor_to_json(d), p2) == d);
  CHECK_THROWS_AS(parse_divisor(json::parse(R"({"coefficients":[1]})"), p2),
                  ParseError);
  CHECK_THROWS_AS(parse_divisor(json::parse(R"({"coefficients":["1/2",0,0]})"), p2),
                  ParseError);
}

TEST_CASE("malformed JSON is a parse error") {
  CHECK_THROWS_AS(parse_fan(json::parse(R"({"dim":2})")), ParseError);
  CHECK_THROWS_AS(parse_fan(json::parse(R"({"dim":"x","rays":[],"max_cones":[]})")),
                  ParseError);
  CHECK_THROWS_AS(parse_polytope(json::parse(R"({"dim":2,"vertices":[["ab"]]})")),
                  ParseError);
}

TEST_CASE("golden reports are byte-stable") {
  for (const char* name : {"p2", "f1", "bl3_p2"}) {
    AnalysisReport r = analyze(oracles::fan_by_name(name));
    std::string dumped = report_to_json(r).dump(2) + "\n";
    CHECK(dumped == report_to_json(analyze(oracles::fan_by_name(name))).dump(2) + "\n");
    CHECK(dumped == read_file(golden_path(std::string(name) + "_report.json")));
  }
}

TEST_CASE("root system JSON matches the documented shape") {
  json j = root_system_to_json(demazure_roots(projective_space_fan(2)));
  CHECK(j["semisimple_count"] == 6);
  CHECK(j["reductive"] == true);
  CHECK(j["rank"] == 2);
  REQUIRE(j["roots"].size() == 6);
  CHECK(j["roots"][0]["m"] == json::array({-1, 0}));
}
