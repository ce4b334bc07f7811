#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "toric/catalog.hpp"
#include "toric/divisor.hpp"
#include "toric/errors.hpp"

using namespace toric;
using oracles::qvec;
using oracles::vec;

namespace {

// m_sigma keyed by the cone's ray vectors, independent of cone indexing.
std::map<std::vector<Vec>, Vec> support_by_cone(const Fan& fan,
                                                const ToricDivisor& d) {
  SupportFunction sf = support_function(fan, d);
  std::map<std::vector<Vec>, Vec> out;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    std::vector<Vec> key;
    for (int i : fan.max_cones[c]) key.push_back(fan.rays[i]);
    out[key] = sf.cone_values[c];
  }
  return out;
}

ToricDivisor divisor_for(const Fan& fan, const Vec& ray) {
  return divisor_for_ray(fan, oracles::ray_index(fan, ray));
}

// Deterministic pool of divisors per fan: every D_tau, the anticanonical,
// the zero divisor, and a few pseudorandom small ones.
std::vector<ToricDivisor> divisor_pool(const Fan& fan, unsigned seed,
                                       int random_count) {
  std::vector<ToricDivisor> pool;
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    pool.push_back(divisor_for_ray(fan, static_cast<int>(i)));
  pool.push_back(anticanonical(fan));
  pool.push_back(ToricDivisor{std::vector<Int>(fan.rays.size(), 0)});
  std::mt19937 g = oracles::rng(seed);
  for (int k = 0; k < random_count; ++k) {
    std::vector<Int> coeffs;
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
      coeffs.push_back(oracles::random_int(g, -2, 3));
    pool.push_back(ToricDivisor{std::move(coeffs)});
  }
  return pool;
}

Vec random_lattice_point(int dim, std::mt19937& g) {
  Vec u(dim);
  for (int j = 0; j < dim; ++j) u[j] = oracles::random_int(g, -20, 20);
  return u;
}

// Prop 2.1 (5): for nef D, phi_D(u) = min over P_D of <m, u>.
void check_min_formula(const Fan& fan, const ToricDivisor& d, int samples,
                       unsigned seed) {
  SupportFunction sf = support_function(fan, d);
  VPolytope pd = vertices_from_facets(divisor_polytope(fan, d));
  REQUIRE(!pd.vertices.empty());
  std::mt19937 g = oracles::rng(seed);
  for (int s = 0; s < samples; ++s) {
    Vec u = random_lattice_point(fan.dim, g);
    auto cone = containing_cone(fan, u);
    REQUIRE(cone.has_value());
    Rat phi = Rat(pairing(sf.cone_values[*cone], u));
    Rat best = pairing(pd.vertices[0], u);
    for (const QVec& m : pd.vertices) best = std::min(best, pairing(m, u));
    CHECK(phi == best);
  }
}

}  // namespace

TEST_CASE("support function on P^1") {
  Fan p1 = projective_space_fan(1);
  auto sf = support_by_cone(p1, anticanonical(p1));
  CHECK(sf[{vec({-1})}] == vec({1}));
  CHECK(sf[{vec({1})}] == vec({-1}));
}

TEST_CASE("support function of D_(1,0) on P^2") {
  Fan p2 = projective_space_fan(2);
  auto sf = support_by_cone(p2, divisor_for(p2, vec({1, 0})));
  CHECK(sf[{vec({0, 1}), vec({1, 0})}] == vec({-1, 0}));
  CHECK(sf[{vec({-1, -1}), vec({0, 1})}] == vec({0, 0}));
  CHECK(sf[{vec({-1, -1}), vec({1, 0})}] == vec({-1, 1}));
}

TEST_CASE("support function of the F_1 anticanonical divisor") {
  Fan f1 = hirzebruch(1);
  auto sf = support_by_cone(f1, anticanonical(f1));
  CHECK(sf[{vec({0, 1}), vec({1, 0})}] == vec({-1, -1}));
  CHECK(sf[{vec({-1, 1}), vec({0, 1})}] == vec({0, -1}));
  CHECK(sf[{vec({-1, 1}), vec({0, -1})}] == vec({2, 1}));
  CHECK(sf[{vec({0, -1}), vec({1, 0})}] == vec({-1, 1}));
}

TEST_CASE("support function rejects non-smooth fans") {
  Fan singular = make_fan(2, {vec({1, 0}), vec({1, 2}), vec({-1, -1})},
                          {{0, 1}, {1, 2}, {2, 0}});
  CHECK_THROWS_AS(support_function(singular, anticanonical(singular)),
                  PreconditionError);
}

TEST_CASE("divisor polytopes") {
  Fan p1 = projective_space_fan(1);
  VPolytope seg = vertices_from_facets(divisor_polytope(p1, anticanonical(p1)));
  CHECK(seg.vertices == std::vector<QVec>{qvec({-1}), qvec({1})});

  Fan p2 = projective_space_fan(2);
  VPolytope d0 = vertices_from_facets(
      divisor_polytope(p2, divisor_for(p2, vec({1, 0}))));
  CHECK(d0.vertices == std::vector<QVec>{qvec({-1, 0}), qvec({-1, 1}),
                                         qvec({0, 0})});
  VPolytope pk = vertices_from_facets(divisor_polytope(p2, anticanonical(p2)));
  CHECK(pk.vertices == std::vector<QVec>{qvec({-1, -1}), qvec({-1, 2}),
                                         qvec({2, -1})});
}

TEST_CASE("nef decisions") {
  Fan p2 = projective_space_fan(2);
  CHECK(is_nef(p2, divisor_for(p2, vec({1, 0}))).nef);
  CHECK(is_nef(p2, ToricDivisor{{0, 0, 0}}).nef);

  Fan f1 = hirzebruch(1);
  NefCertificate cert = is_nef(f1, divisor_for(f1, vec({0, 1})));
  REQUIRE_FALSE(cert.nef);
  // Witness: sigma = cone{(0,1),(1,0)} with m_sigma = (0,-1), violated at
  // the ray (-1,1).
  CHECK(cert.cone == oracles::cone_index(f1, {oracles::ray_index(f1, vec({0, 1})),
                                              oracles::ray_index(f1, vec({1, 0}))}));
  CHECK(cert.ray == oracles::ray_index(f1, vec({-1, 1})));
  SupportFunction sf = support_function(f1, divisor_for(f1, vec({0, 1})));
  CHECK(sf.cone_values[cert.cone] == vec({0, -1}));
  CHECK(pairing(sf.cone_values[cert.cone], f1.rays[cert.ray]) == -1);
}

TEST_CASE("ample decisions") {
  Fan p2 = projective_space_fan(2);
  CHECK(is_ample(p2, anticanonical(p2)).ample);
  CHECK(is_fano(p2));

  Fan f1 = hirzebruch(1);
  CHECK(is_ample(f1, anticanonical(f1)).ample);
  CHECK(is_fano(f1));

  // One ruling of P^1 x P^1 is nef but not ample: equality off-cone.
  Fan p1xp1 = product(projective_space_fan(1), projective_space_fan(1));
  ToricDivisor ruling = divisor_for(p1xp1, vec({1, 0}));
  CHECK(is_nef(p1xp1, ruling).nef);
  AmpleCertificate amp = is_ample(p1xp1, ruling);
  CHECK_FALSE(amp.ample);
  CHECK_FALSE(amp.nef_failed);
  {
    SupportFunction sf = support_function(p1xp1, ruling);
    CHECK(pairing(sf.cone_values[amp.cone], p1xp1.rays[amp.ray]) ==
          -ruling.coefficients[amp.ray]);
  }

  // F_2 is not Fano: strictness fails with an equality witness.
  Fan f2 = hirzebruch(2);
  AmpleCertificate fano2 = fano_certificate(f2);
  CHECK_FALSE(fano2.ample);
  CHECK_FALSE(fano2.nef_failed);
  {
    SupportFunction sf = support_function(f2, anticanonical(f2));
    CHECK(pairing(sf.cone_values[fano2.cone], f2.rays[fano2.ray]) == -1);
  }
  CHECK(is_nef(f2, anticanonical(f2)).nef);
}

TEST_CASE("anticanonical coefficients are all one") {
  for (const char* name : {"p1", "p2", "bl3_p2"}) {
    Fan fan = oracles::fan_by_name(name);
    ToricDivisor k = anticanonical(fan);
    CHECK(k.coefficients == std::vector<Int>(fan.rays.size(), Int(1)));
  }
}

TEST_CASE("fano flags across the catalog") {
  CHECK(is_fano(projective_space_fan(1)));
  CHECK(is_fano(projective_space_fan(2)));
  CHECK(is_fano(projective_space_fan(3)));
  CHECK(is_fano(hirzebruch(1)));
  CHECK_FALSE(is_fano(hirzebruch(2)));
  for (const CatalogEntry& e : catalog_entries())
    if (e.expected.fano) CHECK(is_fano(e.fan) == *e.expected.fano);
}

TEST_CASE("support values satisfy their defining equations") {
  for (const CatalogEntry& e : catalog_entries()) {
    for (const ToricDivisor& d : divisor_pool(e.fan, 31, 2)) {
      SupportFunction sf = support_function(e.fan, d);
      for (std::size_t c = 0; c < e.fan.max_cones.size(); ++c)
        for (int i : e.fan.max_cones[c])
          CHECK(pairing(sf.cone_values[c], e.fan.rays[i]) == -d.coefficients[i]);
    }
  }
}

TEST_CASE("ample implies nef") {
  for (const CatalogEntry& e : catalog_entries())
    for (const ToricDivisor& d : divisor_pool(e.fan, 32, 2))
      if (is_ample(e.fan, d).ample) CHECK(is_nef(e.fan, d).nef);
}

TEST_CASE("nef agrees with the surface intersection oracle") {
  unsigned seed = 40;
  for (const CatalogEntry& e : catalog_entries()) {
    if (e.fan.dim != 2) continue;
    for (const ToricDivisor& d : divisor_pool(e.fan, seed++, 4))
      CHECK(is_nef(e.fan, d).nef == oracles::surface_nef_oracle(e.fan, d));
  }
}

TEST_CASE("the pointwise minimum formula holds for nef divisors") {
  unsigned seed = 50;
  for (const char* name : {"p2", "p1xp1", "f1", "f2", "p1xp2"}) {
    Fan fan = oracles::fan_by_name(name);
    for (const ToricDivisor& d : divisor_pool(fan, seed, 2)) {
      if (!is_nef(fan, d).nef) continue;
      check_min_formula(fan, d, 120, seed++);
    }
  }
}

TEST_CASE("ample polytopes have the source fan as normal fan") {
  for (const CatalogEntry& e : catalog_entries()) {
    for (const ToricDivisor& d : divisor_pool(e.fan, 60, 2)) {
      if (!is_ample(e.fan, d).ample) continue;
      VPolytope pd = vertices_from_facets(divisor_polytope(e.fan, d));
      CHECK(normal_fan(pd) == e.fan);
    }
  }
}

TEST_CASE("divisor coefficient count is checked") {
  Fan p2 = projective_space_fan(2);
  CHECK_THROWS_AS(is_nef(p2, ToricDivisor{{1, 1}}), DimensionError);
}
