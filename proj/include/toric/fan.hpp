#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// Fan of strongly convex rational cones, given by its primitive ray
/// generators and its maximal cones as index sets into the ray list.
/// Construction canonicalizes: rays sorted lexicographically, cone index
/// sets sorted, cone list sorted. All certificates downstream refer to
/// these canonical indices.
struct Fan {
  int dim = 0;
  std::vector<Vec> rays;
  std::vector<std::vector<int>> max_cones;

  friend bool operator==(const Fan&, const Fan&) = default;
};

/// Canonicalizes and checks basic shape (index ranges, ray lengths).
/// Semantic problems are reported by validate(), not here.
Fan make_fan(int dim, std::vector<Vec> rays,
             std::vector<std::vector<int>> max_cones);

/// Structural diagnostics; empty iff the fan is valid. In strict mode also
/// checks that pairwise intersections of maximal cones are faces of each.
std::vector<std::string> validate(const Fan& fan, bool strict = false);

/// Throws PreconditionError listing the diagnostics if the fan is invalid.
void require_valid(const Fan& fan);

/// Support covers all of N_R. Criterion: every wall (a (d-1)-subset of a
/// maximal cone's rays) is shared by exactly two maximal cones whose
/// remaining rays lie strictly on opposite sides of the wall hyperplane.
bool is_complete(const Fan& fan);

/// Every maximal cone's ray matrix has determinant +-1.
bool is_smooth(const Fan& fan);

/// Rows = ray vectors of the given maximal cone.
Mat cone_matrix(const Fan& fan, int cone);

/// Inner normal fan of a full-dimensional polytope: rays are the primitive
/// facet normals, the maximal cone at each vertex is spanned by the normals
/// of the facets through it. Rejects vertices with more than d tight facets
/// (non-simplicial normal fan). For a reflexive P this is exactly
/// {pos(F) : F a face of P*}, with rays the vertices of P*.
Fan normal_fan(const VPolytope& p);

/// Product fan: embedded rays of both factors, maximal cones all unions.
Fan product(const Fan& a, const Fan& b);

/// Index of some maximal cone containing the point (first in canonical
/// order), or nullopt.
std::optional<int> containing_cone(const Fan& fan, const QVec& point);
std::optional<int> containing_cone(const Fan& fan, const Vec& point);

}  // namespace toric
