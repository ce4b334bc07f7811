#include "toric/catalog.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "toric/errors.hpp"

namespace toric {

Fan projective_space_fan(int n) {
  if (n < 1) throw PreconditionError("projective_space_fan requires n >= 1");
  std::vector<Vec> rays;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0);
    e[i] = 1;
    rays.push_back(std::move(e));
  }
  rays.push_back(Vec(n, -1));
  std::vector<std::vector<int>> cones;
  for (int drop = 0; drop <= n; ++drop) {
    std::vector<int> cone;
    for (int i = 0; i <= n; ++i)
      if (i != drop) cone.push_back(i);
    cones.push_back(std::move(cone));
  }
  return make_fan(n, std::move(rays), std::move(cones));
}

Fan hirzebruch(int a) {
  if (a < 0) throw PreconditionError("hirzebruch requires a >= 0");
  std::vector<Vec> rays = {{1, 0}, {0, 1}, {-1, a}, {0, -1}};
  std::vector<std::vector<int>> cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return make_fan(2, std::move(rays), std::move(cones));
}

Fan blowup_surface_cone(const Fan& fan, const Vec& u1, const Vec& u2) {
  if (fan.dim != 2) throw PreconditionError("surface blowup needs a 2-fan");
  auto index_of = [&](const Vec& u) {
    for (std::size_t i = 0; i < fan.rays.size(); ++i)
      if (fan.rays[i] == u) return static_cast<int>(i);
    throw PreconditionError("blowup ray " + to_string(u) + " not in fan");
  };
  int i1 = index_of(u1), i2 = index_of(u2);
  std::vector<int> target = {std::min(i1, i2), std::max(i1, i2)};
  Vec fresh(2);
  fresh[0] = u1[0] + u2[0];
  fresh[1] = u1[1] + u2[1];
  std::vector<Vec> rays = fan.rays;
  int fresh_idx = static_cast<int>(rays.size());
  rays.push_back(fresh);
  std::vector<std::vector<int>> cones;
  bool split = false;
  for (const auto& cone : fan.max_cones) {
    if (cone == target) {
      cones.push_back({i1, fresh_idx});
      cones.push_back({fresh_idx, i2});
      split = true;
    } else {
      cones.push_back(cone);
    }
  }
  if (!split)
    throw PreconditionError("no max cone spanned by " + to_string(u1) + ", " +
                            to_string(u2));
  return make_fan(2, std::move(rays), std::move(cones));
}

std::vector<CatalogEntry> smooth_fano_surfaces() {
  Fan p2 = projective_space_fan(2);
  Fan p1xp1 = product(projective_space_fan(1), projective_space_fan(1));
  Fan bl1 = blowup_surface_cone(p2, {1, 0}, {0, 1});
  Fan bl2 = blowup_surface_cone(bl1, {0, 1}, {-1, -1});
  Fan bl3 = blowup_surface_cone(bl2, {-1, -1}, {1, 0});
  std::vector<CatalogEntry> out;
  out.push_back({"p2", "projective plane",
                 std::move(p2),
                 {true, true, true, true, std::vector<int>{2}}});
  out.push_back({"p1xp1", "product of two projective lines",
                 std::move(p1xp1),
                 {true, true, true, true, std::vector<int>{1, 1}}});
  out.push_back({"bl1_p2", "blowup of P^2 at one fixed point",
                 std::move(bl1),
                 {true, true, true, false, std::nullopt}});
  out.push_back({"bl2_p2", "blowup of P^2 at two fixed points",
                 std::move(bl2),
                 {true, true, true, false, std::nullopt}});
  out.push_back({"bl3_p2", "blowup of P^2 at three fixed points (hexagon)",
                 std::move(bl3),
                 {true, true, true, false, std::nullopt}});
  return out;
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<CatalogEntry> out;
  Fan p1 = projective_space_fan(1);
  out.push_back({"p1", "projective line", p1,
                 {true, true, true, true, std::vector<int>{1}}});
  for (CatalogEntry& e : smooth_fano_surfaces()) out.push_back(std::move(e));
  out.push_back({"f1", "Hirzebruch surface F_1", hirzebruch(1),
                 {true, true, true, false, std::nullopt}});
  out.push_back({"f2", "Hirzebruch surface F_2", hirzebruch(2),
                 {true, true, false, std::nullopt, std::nullopt}});
  out.push_back({"p3", "projective 3-space", projective_space_fan(3),
                 {true, true, true, true, std::vector<int>{3}}});
  out.push_back({"p1xp2", "P^1 x P^2",
                 product(p1, projective_space_fan(2)),
                 {true, true, true, true, std::vector<int>{1, 2}}});
  out.push_back({"p1xp1xp1", "P^1 x P^1 x P^1",
                 product(product(p1, p1), p1),
                 {true, true, true, true, std::vector<int>{1, 1, 1}}});
  out.push_back({"f1xp1", "F_1 x P^1", product(hirzebruch(1), p1),
                 {true, true, true, false, std::nullopt}});
  return out;
}

std::optional<CatalogEntry> find_entry(const std::string& name) {
  for (CatalogEntry& e : catalog_entries())
    if (e.name == name) return std::move(e);
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reflexive polygon enumeration.
//
// Breadth-first search over convex lattice polygons with vertices in the box
// [-B,B]^2: states are convex-position vertex sets whose hull contains the
// origin (possibly on the boundary) and has no nonzero interior lattice
// point. Both properties hold for every subpolygon of a reflexive polygon
// (a reflexive polytope has no interior lattice point besides 0: the minimum
// of <w,.> over the dual is attained at a lattice vertex, so a nonzero
// interior lattice point would pair >= 0 with all of the dual, impossible
// when 0 is interior). By Caratheodory every target is reachable from a
// triangle containing 0 by adding one vertex at a time, so the search is
// exhaustive. Finally states with 0 strictly interior are tested for
// reflexivity exactly and deduplicated by canonical form.
// ---------------------------------------------------------------------------

namespace {

constexpr int kBox = 4;

struct Pt {
  long long x, y;
  friend bool operator==(const Pt&, const Pt&) = default;
  friend auto operator<=>(const Pt&, const Pt&) = default;
};

// Coordinates are bounded by kBox, so 64-bit cross products are exact.
long long cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }
Pt sub(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }

// Hull is CCW. Strictly inside: every edge sees the point strictly left.
bool strictly_inside(const std::vector<Pt>& hull, const Pt& p) {
  const std::size_t k = hull.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[(i + 1) % k];
    if (cross(sub(b, a), sub(p, a)) <= 0) return false;
  }
  return true;
}

bool inside_or_on(const std::vector<Pt>& hull, const Pt& p) {
  const std::size_t k = hull.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Pt& a = hull[i];
    const Pt& b = hull[(i + 1) % k];
    if (cross(sub(b, a), sub(p, a)) < 0) return false;
  }
  return true;
}

// No lattice point other than 0 strictly inside, scanning the given range.
bool interior_clear(const std::vector<Pt>& hull, long long x0, long long x1,
                    long long y0, long long y1) {
  for (long long x = x0; x <= x1; ++x)
    for (long long y = y0; y <= y1; ++y) {
      if (x == 0 && y == 0) continue;
      if (strictly_inside(hull, {x, y})) return false;
    }
  return true;
}

std::vector<Pt> canonical_rotation(std::vector<Pt> hull) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < hull.size(); ++i)
    if (hull[i] < hull[best]) best = i;
  std::rotate(hull.begin(), hull.begin() + best, hull.end());
  return hull;
}

std::string state_key(const std::vector<Pt>& hull) {
  std::string key;
  key.reserve(hull.size() * 6);
  for (const Pt& p : hull) {
    key += std::to_string(p.x);
    key += ',';
    key += std::to_string(p.y);
    key += ';';
  }
  return key;
}

std::vector<VPolytope> enumerate_reflexive_polygons() {
  std::vector<Pt> box_points;
  for (long long x = -kBox; x <= kBox; ++x)
    for (long long y = -kBox; y <= kBox; ++y)
      if (x != 0 || y != 0) box_points.push_back({x, y});

  std::deque<std::vector<Pt>> queue;
  std::unordered_set<std::string> seen;
  std::vector<std::vector<Pt>> accepted;

  auto push_state = [&](std::vector<Pt> hull) {
    hull = canonical_rotation(std::move(hull));
    std::string key = state_key(hull);
    if (!seen.insert(std::move(key)).second) return;
    accepted.push_back(hull);
    queue.push_back(std::move(hull));
  };

  // Seeds: triangles containing 0 with no nonzero interior lattice point.
  const int n = static_cast<int>(box_points.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Pt a = box_points[i], b = box_points[j], c = box_points[k];
        long long orient = cross(sub(b, a), sub(c, a));
        if (orient == 0) continue;
        if (orient < 0) std::swap(b, c);
        std::vector<Pt> tri = {a, b, c};
        if (!inside_or_on(tri, {0, 0})) continue;
        long long x0 = std::min({a.x, b.x, c.x}), x1 = std::max({a.x, b.x, c.x});
        long long y0 = std::min({a.y, b.y, c.y}), y1 = std::max({a.y, b.y, c.y});
        if (!interior_clear(tri, x0, x1, y0, y1)) continue;
        push_state(std::move(tri));
      }

  // Grow: add one vertex at a time, keeping all points in convex position.
  while (!queue.empty()) {
    std::vector<Pt> hull = std::move(queue.front());
    queue.pop_front();
    const std::size_t k = hull.size();
    for (const Pt& p : box_points) {
      if (std::find(hull.begin(), hull.end(), p) != hull.end()) continue;
      // Exactly one strictly visible edge, otherwise some vertex would be
      // swallowed and the point set is not in convex position.
      int visible = -1, visible_count = 0;
      for (std::size_t e = 0; e < k && visible_count < 2; ++e) {
        if (cross(sub(hull[(e + 1) % k], hull[e]), sub(p, hull[e])) < 0) {
          visible = static_cast<int>(e);
          ++visible_count;
        }
      }
      if (visible_count != 1) continue;
      const Pt& vi = hull[visible];
      const Pt& vj = hull[(visible + 1) % k];
      const Pt& prev = hull[(visible + k - 1) % k];
      const Pt& next = hull[(visible + 2) % k];
      // Strict convexity at the seam vertices.
      if (cross(sub(vi, prev), sub(p, vi)) <= 0) continue;
      if (cross(sub(vj, p), sub(next, vj)) <= 0) continue;
      std::vector<Pt> grown;
      grown.reserve(k + 1);
      for (std::size_t t = 0; t <= static_cast<std::size_t>(visible); ++t)
        grown.push_back(hull[t]);
      grown.push_back(p);
      for (std::size_t t = visible + 1; t < k; ++t) grown.push_back(hull[t]);
      // New interior points can only appear in the added triangle (vi, p, vj)
      // or on the removed edge, both inside the triangle's bounding box.
      long long x0 = std::min({vi.x, p.x, vj.x}), x1 = std::max({vi.x, p.x, vj.x});
      long long y0 = std::min({vi.y, p.y, vj.y}), y1 = std::max({vi.y, p.y, vj.y});
      if (!interior_clear(grown, x0, x1, y0, y1)) continue;
      push_state(std::move(grown));
    }
  }

  // Reflexivity filter and canonical-form dedup.
  std::map<Mat, VPolytope> classes;
  for (const std::vector<Pt>& hull : accepted) {
    if (!strictly_inside(hull, {0, 0})) continue;
    std::vector<QVec> verts;
    for (const Pt& p : hull) verts.push_back({Rat(p.x), Rat(p.y)});
    VPolytope poly = vpolytope_unchecked(2, std::move(verts));
    if (!is_reflexive(poly)) continue;
    Mat form = canonical_form(poly);
    auto it = classes.find(form);
    if (it == classes.end() || poly.vertices < it->second.vertices)
      classes[std::move(form)] = std::move(poly);
  }
  std::vector<VPolytope> out;
  for (auto& [form, poly] : classes) out.push_back(std::move(poly));
  return out;
}

}  // namespace

const std::vector<VPolytope>& reflexive_polygons() {
  static const std::vector<VPolytope> cached = enumerate_reflexive_polygons();
  return cached;
}

}  // namespace toric
