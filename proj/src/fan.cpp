#include "toric/fan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "toric/errors.hpp"

namespace toric {

Fan make_fan(int dim, std::vector<Vec> rays,
             std::vector<std::vector<int>> max_cones) {
  if (dim < 1) throw ParseError("fan dimension must be at least 1");
  for (const Vec& r : rays)
    if (static_cast<int>(r.size()) != dim)
      throw DimensionError("ray length does not match fan dimension");
  for (const auto& cone : max_cones)
    for (int i : cone)
      if (i < 0 || i >= static_cast<int>(rays.size()))
        throw ParseError("max cone refers to ray index " + std::to_string(i) +
                         " out of range");

  // Canonical order: rays lexicographic; cones as sorted index sets, sorted.
  std::vector<int> perm(rays.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](int a, int b) { return rays[a] < rays[b]; });
  std::vector<int> where(rays.size());
  for (std::size_t i = 0; i < perm.size(); ++i) where[perm[i]] = static_cast<int>(i);

  std::vector<Vec> sorted_rays;
  sorted_rays.reserve(rays.size());
  for (int i : perm) sorted_rays.push_back(rays[i]);
  for (auto& cone : max_cones) {
    for (int& i : cone) i = where[i];
    std::sort(cone.begin(), cone.end());
  }
  std::sort(max_cones.begin(), max_cones.end());
  return Fan{dim, std::move(sorted_rays), std::move(max_cones)};
}

std::vector<std::string> validate(const Fan& fan, bool strict) {
  std::vector<std::string> diags;
  if (fan.dim < 1) {
    diags.push_back("dimension must be at least 1");
    return diags;
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    if (is_zero(fan.rays[i])) {
      diags.push_back("ray " + std::to_string(i) + " is zero");
      continue;
    }
    if (primitive(fan.rays[i]) != fan.rays[i])
      diags.push_back("ray " + std::to_string(i) + " is not primitive");
  }
  for (std::size_t i = 0; i + 1 < fan.rays.size(); ++i)
    if (fan.rays[i] == fan.rays[i + 1])
      diags.push_back("duplicate ray " + to_string(fan.rays[i]));

  std::vector<bool> used(fan.rays.size(), false);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    if (static_cast<int>(cone.size()) != fan.dim) {
      diags.push_back("max cone " + std::to_string(c) + " has " +
                      std::to_string(cone.size()) + " rays, expected " +
                      std::to_string(fan.dim));
      continue;
    }
    bool dup = false;
    for (std::size_t k = 0; k + 1 < cone.size(); ++k)
      if (cone[k] == cone[k + 1]) dup = true;
    if (dup) {
      diags.push_back("max cone " + std::to_string(c) + " repeats a ray index");
      continue;
    }
    for (int i : cone) used[i] = true;
    Mat m;
    for (int i : cone) m.push_back(fan.rays[i]);
    if (det(m) == 0)
      diags.push_back("degenerate max cone " + std::to_string(c) +
                      " (singular ray matrix)");
  }
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    if (!used[i]) diags.push_back("ray " + std::to_string(i) + " is in no max cone");
  for (std::size_t c = 0; c + 1 < fan.max_cones.size(); ++c)
    if (fan.max_cones[c] == fan.max_cones[c + 1])
      diags.push_back("duplicate max cone " + std::to_string(c));

  if (strict && diags.empty()) {
    // Pairwise intersections must be faces: every extreme ray of the
    // intersection must be a nonnegative combination of the common rays.
    auto inward_normals = [&](int c) {
      Mat rows;  // rows w_i with <w_i, u_j> = delta_ij * positive
      const auto& cone = fan.max_cones[c];
      for (std::size_t i = 0; i < cone.size(); ++i) {
        Mat others;
        for (std::size_t j = 0; j < cone.size(); ++j)
          if (j != i) others.push_back(fan.rays[cone[j]]);
        Mat ker = kernel_basis(others, fan.dim);
        Vec w = ker.front();
        if (pairing(w, fan.rays[cone[i]]) < 0) w = negate(w);
        rows.push_back(std::move(w));
      }
      return rows;
    };
    for (std::size_t c1 = 0; c1 < fan.max_cones.size(); ++c1) {
      Mat n1 = inward_normals(static_cast<int>(c1));
      for (std::size_t c2 = c1 + 1; c2 < fan.max_cones.size(); ++c2) {
        Mat combined = n1;
        for (Vec& w : inward_normals(static_cast<int>(c2)))
          combined.push_back(std::move(w));
        std::vector<int> common;
        std::set_intersection(fan.max_cones[c1].begin(), fan.max_cones[c1].end(),
                              fan.max_cones[c2].begin(), fan.max_cones[c2].end(),
                              std::back_inserter(common));
        // Enumerate extreme rays of the intersection cone.
        const int m = static_cast<int>(combined.size());
        std::vector<int> idx(std::max(fan.dim - 1, 0));
        std::iota(idx.begin(), idx.end(), 0);
        bool bad = false;
        auto test_ray = [&](const Vec& r) {
          // Expand r in the basis of cone c1 and require support in `common`.
          Mat basis_cols = transpose(cone_matrix(fan, static_cast<int>(c1)));
          SolveResult res = solve_exact(basis_cols, to_qvec(r));
          if (res.status != SolveStatus::ok) return;
          for (std::size_t k = 0; k < res.solution.size(); ++k) {
            if (res.solution[k] == 0) continue;
            int ray_idx = fan.max_cones[c1][k];
            if (!std::binary_search(common.begin(), common.end(), ray_idx))
              bad = true;
          }
        };
        // (d-1)-subsets of the combined inward normals.
        std::vector<int> sel(fan.dim - 1);
        std::function<void(int, int)> rec = [&](int start, int depth) {
          if (bad) return;
          if (depth == fan.dim - 1) {
            Mat rows;
            for (int i = 0; i < depth; ++i) rows.push_back(combined[sel[i]]);
            Mat ker = kernel_basis(rows, fan.dim);
            if (ker.size() != 1) return;
            for (const Vec& cand : {ker[0], negate(ker[0])}) {
              bool feas = true;
              for (const Vec& w : combined)
                if (pairing(w, cand) < 0) {
                  feas = false;
                  break;
                }
              if (feas) test_ray(cand);
            }
            return;
          }
          for (int i = start; i < m; ++i) {
            sel[depth] = i;
            rec(i + 1, depth + 1);
          }
        };
        rec(0, 0);
        if (bad)
          diags.push_back("max cones " + std::to_string(c1) + " and " +
                          std::to_string(c2) + " do not intersect in a common face");
      }
    }
  }
  return diags;
}

void require_valid(const Fan& fan) {
  std::vector<std::string> diags = validate(fan);
  if (diags.empty()) return;
  std::string msg = "invalid fan:";
  for (const std::string& d : diags) msg += " [" + d + "]";
  throw PreconditionError(msg);
}

Mat cone_matrix(const Fan& fan, int cone) {
  Mat m;
  for (int i : fan.max_cones[cone]) m.push_back(fan.rays[i]);
  return m;
}

bool is_complete(const Fan& fan) {
  require_valid(fan);
  if (fan.max_cones.empty()) return false;
  // wall (sorted ray-index set of size d-1) -> list of (cone, opposite ray)
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> walls;
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    const auto& cone = fan.max_cones[c];
    for (std::size_t drop = 0; drop < cone.size(); ++drop) {
      std::vector<int> wall;
      for (std::size_t k = 0; k < cone.size(); ++k)
        if (k != drop) wall.push_back(cone[k]);
      walls[wall].emplace_back(static_cast<int>(c), cone[drop]);
    }
  }
  for (const auto& [wall, owners] : walls) {
    if (owners.size() != 2) return false;
    Mat rows;
    for (int i : wall) rows.push_back(fan.rays[i]);
    Mat ker = kernel_basis(rows, fan.dim);
    if (ker.size() != 1) return false;  // degenerate wall
    Int s1 = pairing(ker[0], fan.rays[owners[0].second]);
    Int s2 = pairing(ker[0], fan.rays[owners[1].second]);
    if (!(s1 * s2 < 0)) return false;
  }
  return true;
}

bool is_smooth(const Fan& fan) {
  require_valid(fan);
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    Int d = det(cone_matrix(fan, static_cast<int>(c)));
    if (d != 1 && d != -1) return false;
  }
  return true;
}

Fan normal_fan(const VPolytope& p) {
  HPolytope facets = facets_from_vertices(p);
  std::vector<Vec> rays;
  for (const Halfspace& h : facets.halfspaces) rays.push_back(h.normal);
  std::vector<std::vector<int>> cones;
  for (const QVec& v : p.vertices) {
    std::vector<int> tight;
    for (std::size_t i = 0; i < facets.halfspaces.size(); ++i)
      if (pairing(v, facets.halfspaces[i].normal) == facets.halfspaces[i].rhs)
        tight.push_back(static_cast<int>(i));
    if (static_cast<int>(tight.size()) != p.dim)
      throw PreconditionError(
          "normal fan is not simplicial: vertex " + to_string(v) + " lies on " +
          std::to_string(tight.size()) + " facets, expected " +
          std::to_string(p.dim));
    cones.push_back(std::move(tight));
  }
  return make_fan(p.dim, std::move(rays), std::move(cones));
}

Fan product(const Fan& a, const Fan& b) {
  require_valid(a);
  require_valid(b);
  const int d = a.dim + b.dim;
  std::vector<Vec> rays;
  for (const Vec& r : a.rays) {
    Vec v = r;
    v.resize(d, 0);
    rays.push_back(std::move(v));
  }
  for (const Vec& r : b.rays) {
    Vec v(a.dim, 0);
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(std::move(v));
  }
  const int shift = static_cast<int>(a.rays.size());
  std::vector<std::vector<int>> cones;
  for (const auto& ca : a.max_cones)
    for (const auto& cb : b.max_cones) {
      std::vector<int> cone = ca;
      for (int i : cb) cone.push_back(i + shift);
      cones.push_back(std::move(cone));
    }
  return make_fan(d, std::move(rays), std::move(cones));
}

std::optional<int> containing_cone(const Fan& fan, const QVec& point) {
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    Mat cols = transpose(cone_matrix(fan, static_cast<int>(c)));
    SolveResult res = solve_exact(cols, point);
    if (res.status != SolveStatus::ok) continue;
    bool nonneg = true;
    for (const Rat& l : res.solution)
      if (l < 0) {
        nonneg = false;
        break;
      }
    if (nonneg) return static_cast<int>(c);
  }
  return std::nullopt;
}

std::optional<int> containing_cone(const Fan& fan, const Vec& point) {
  return containing_cone(fan, to_qvec(point));
}

}  // namespace toric
