#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "toric/linalg.hpp"

namespace toric {

/// The closed halfspace {x : <x, normal> >= rhs}. The normal is a primitive
/// integer vector; the rhs is rescaled accordingly, so equal halfspaces are
/// syntactically equal.
struct Halfspace {
  Vec normal;
  Rat rhs;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
  friend bool operator<(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.rhs < b.rhs;
  }
};

Halfspace make_halfspace(const QVec& normal, const Rat& rhs);
Halfspace make_halfspace(const Vec& normal, const Rat& rhs);

/// Polytope as the convex hull of its vertex set (irredundant, sorted).
struct VPolytope {
  int dim = 0;
  std::vector<QVec> vertices;

  friend bool operator==(const VPolytope&, const VPolytope&) = default;
};

/// Polytope (or polyhedron) as an intersection of halfspaces.
struct HPolytope {
  int dim = 0;
  std::vector<Halfspace> halfspaces;
};

/// Sorts, removes duplicates and non-extreme points.
VPolytope make_vpolytope(int dim, std::vector<QVec> vertices);
/// For producers whose vertex sets are already extreme and distinct.
VPolytope vpolytope_unchecked(int dim, std::vector<QVec> vertices);
HPolytope make_hpolytope(int dim, std::vector<Halfspace> halfspaces);

bool contains(const HPolytope& p, const QVec& point);
bool contains(const HPolytope& p, const Vec& point);

/// Exact membership of a point in the convex hull of a finite point set,
/// by Caratheodory: some affinely independent subset of size <= dim+1
/// contains the point with nonnegative barycentric coordinates.
bool point_in_hull(const QVec& point, const std::vector<QVec>& points);

bool is_lattice_polytope(const VPolytope& p);
bool is_full_dimensional(const VPolytope& p);

/// Irredundant facet inequalities of a full-dimensional polytope.
HPolytope facets_from_vertices(const VPolytope& p);

/// Exact vertex enumeration of a bounded H-polytope; throws UnboundedError
/// with a recession-direction certificate if the feasible set is unbounded.
VPolytope vertices_from_facets(const HPolytope& p);

/// A nonzero recession direction of {x : all halfspaces}, if one exists.
std::optional<Vec> recession_direction(const HPolytope& p);

/// The dual polytope P* = {y : <x,y> >= -1 for all x in P}.
/// Requires 0 in the interior of P.
VPolytope dual_polytope(const VPolytope& p);

/// True iff P and P* are both lattice polytopes. Requires 0 interior.
bool is_reflexive(const VPolytope& p);

std::vector<Vec> lattice_points(const HPolytope& p);
std::vector<Vec> lattice_points(const VPolytope& p);

/// GL(d,Z)- and relabeling-invariant canonical form of a full-dimensional
/// lattice polytope: the lexicographic minimum, over admissible vertex
/// orderings, of the column-style HNF of the vertex matrix. Two lattice
/// polytopes have equal canonical forms iff they are related by a lattice
/// isomorphism. Desk scale only (small vertex counts).
Mat canonical_form(const VPolytope& p);

}  // namespace toric
