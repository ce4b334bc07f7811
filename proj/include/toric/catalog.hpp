#pragma once

#include <optional>
#include <string>

#include "toric/demazure.hpp"

namespace toric {

/// Known flags an entry must reproduce; checked by the test suites.
struct ExpectedFlags {
  std::optional<bool> smooth;
  std::optional<bool> complete;
  std::optional<bool> fano;
  std::optional<bool> all_nef;
  /// Sorted factor dimensions when the fan is a product of projective
  /// spaces; empty optional when no product is expected.
  std::optional<std::vector<int>> product_dims;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Fan fan;
  ExpectedFlags expected;
};

/// Fan of P^n: rays e_1..e_n and -(e_1+...+e_n), all n+1 coordinate cones.
Fan projective_space_fan(int n);

/// Hirzebruch surface F_a: rays (1,0),(0,1),(-1,a),(0,-1), four 2-cones of
/// consecutive rays. a >= 0.
Fan hirzebruch(int a);

/// Blowup of a smooth complete surface fan at the torus-fixed point of the
/// 2-cone spanned by rays u, u': inserts u + u' and splits the cone.
Fan blowup_surface_cone(const Fan& fan, const Vec& u1, const Vec& u2);

/// The five smooth toric Fano surfaces: P^2, P^1 x P^1, and the blowups of
/// P^2 at 1, 2, 3 torus-fixed points.
std::vector<CatalogEntry> smooth_fano_surfaces();

/// Full built-in suite (surfaces, Hirzebruch examples, products through
/// dimension 3).
std::vector<CatalogEntry> catalog_entries();

std::optional<CatalogEntry> find_entry(const std::string& name);

/// All reflexive polygons up to lattice isomorphism (16 classes), via
/// bounded enumeration with canonical-form deduplication. Cached after the
/// first call.
const std::vector<VPolytope>& reflexive_polygons();

}  // namespace toric
