#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/errors.hpp"

namespace toric {

namespace {

// Calls fn with each k-subset of {0..n-1} (as a sorted index vector).
// fn returns false to stop the enumeration early.
template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  if (k > n || k < 0) return true;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (!fn(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Clears denominators of a rational row; scaling a row does not change
// kernels or ranks.
Vec clear_denominators(const QVec& row) {
  Int l = 1;
  for (const Rat& q : row) l = boost::multiprecision::lcm(l, den(q));
  Vec out(row.size());
  for (std::size_t j = 0; j < row.size(); ++j)
    out[j] = num(row[j]) * (l / den(row[j]));
  return out;
}

int affine_rank(const std::vector<QVec>& pts) {
  if (pts.size() < 2) return 0;
  Mat rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec diff(pts[i].size());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = pts[i][j] - pts[0][j];
    rows.push_back(clear_denominators(diff));
  }
  return rank(rows);
}

// Feasibility of a rational inequality system by Fourier-Motzkin
// elimination. Desk scale; used only to distinguish "empty" from
// "unbounded without vertices".
bool fourier_motzkin_feasible(const HPolytope& p) {
  // rows: coefficients then rhs, meaning <coeff, x> >= rhs.
  std::vector<std::pair<QVec, Rat>> sys;
  for (const Halfspace& h : p.halfspaces)
    sys.emplace_back(to_qvec(h.normal), h.rhs);
  for (int var = 0; var < p.dim; ++var) {
    std::vector<std::pair<QVec, Rat>> pos, neg, zero;
    for (auto& row : sys) {
      if (row.first[var] > 0)
        pos.push_back(row);
      else if (row.first[var] < 0)
        neg.push_back(row);
      else
        zero.push_back(row);
    }
    std::vector<std::pair<QVec, Rat>> next = zero;
    for (const auto& [pa, pb] : pos)
      for (const auto& [na, nb] : neg) {
        // Combine to eliminate var: (-na[var]) * pos + pa[var] * neg.
        Rat cp = -na[var], cn = pa[var];
        QVec coeff(p.dim);
        for (int j = 0; j < p.dim; ++j) coeff[j] = cp * pa[j] + cn * na[j];
        next.emplace_back(std::move(coeff), cp * pb + cn * nb);
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    sys = std::move(next);
  }
  for (const auto& [coeff, rhs] : sys)
    if (rhs > 0) return false;  // 0 >= rhs fails
  return true;
}

}  // namespace

Halfspace make_halfspace(const QVec& normal, const Rat& rhs) {
  Int l = 1;
  for (const Rat& q : normal) l = boost::multiprecision::lcm(l, den(q));
  Vec scaled(normal.size());
  for (std::size_t j = 0; j < normal.size(); ++j)
    scaled[j] = num(normal[j]) * (l / den(normal[j]));
  if (is_zero(scaled)) throw ToricError("halfspace with zero normal");
  Int g = 0;
  for (const Int& x : scaled) g = boost::multiprecision::gcd(g, x);
  for (Int& x : scaled) x /= g;
  // <x, normal> >= rhs  scaled by the positive factor l/g.
  return Halfspace{std::move(scaled), rhs * make_rat(l, g)};
}

Halfspace make_halfspace(const Vec& normal, const Rat& rhs) {
  return make_halfspace(to_qvec(normal), rhs);
}

VPolytope vpolytope_unchecked(int dim, std::vector<QVec> vertices) {
  for (const QVec& v : vertices)
    if (static_cast<int>(v.size()) != dim)
      throw DimensionError("vertex length does not match ambient dimension");
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return VPolytope{dim, std::move(vertices)};
}

VPolytope make_vpolytope(int dim, std::vector<QVec> vertices) {
  VPolytope p = vpolytope_unchecked(dim, std::move(vertices));
  // Drop points inside the hull of the others.
  std::vector<QVec> extreme;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    std::vector<QVec> others;
    for (std::size_t j = 0; j < p.vertices.size(); ++j)
      if (j != i) others.push_back(p.vertices[j]);
    if (others.empty() || !point_in_hull(p.vertices[i], others))
      extreme.push_back(p.vertices[i]);
  }
  p.vertices = std::move(extreme);
  return p;
}

HPolytope make_hpolytope(int dim, std::vector<Halfspace> halfspaces) {
  for (const Halfspace& h : halfspaces)
    if (static_cast<int>(h.normal.size()) != dim)
      throw DimensionError("halfspace normal length does not match dimension");
  std::sort(halfspaces.begin(), halfspaces.end());
  halfspaces.erase(std::unique(halfspaces.begin(), halfspaces.end()),
                   halfspaces.end());
  return HPolytope{dim, std::move(halfspaces)};
}

bool contains(const HPolytope& p, const QVec& point) {
  for (const Halfspace& h : p.halfspaces)
    if (pairing(point, h.normal) < h.rhs) return false;
  return true;
}

bool contains(const HPolytope& p, const Vec& point) {
  for (const Halfspace& h : p.halfspaces)
    if (Rat(pairing(point, h.normal)) < h.rhs) return false;
  return true;
}

bool point_in_hull(const QVec& point, const std::vector<QVec>& points) {
  if (points.empty()) return false;
  const int d = static_cast<int>(point.size());
  const int n = static_cast<int>(points.size());
  for (int k = 1; k <= std::min(n, d + 1); ++k) {
    bool found = !for_each_subset(n, k, [&](const std::vector<int>& idx) {
      // Barycentric system: sum lambda_i * p_i = point, sum lambda_i = 1.
      Mat a(d + 1, Vec(k));
      QVec b(d + 1);
      std::vector<QVec> cols;
      for (int col = 0; col < k; ++col) cols.push_back(points[idx[col]]);
      // Build with cleared denominators row by row.
      for (int row = 0; row < d; ++row) {
        QVec qrow(k + 1);
        for (int col = 0; col < k; ++col) qrow[col] = cols[col][row];
        qrow[k] = point[row];
        Vec cleared = clear_denominators(qrow);
        for (int col = 0; col < k; ++col) a[row][col] = cleared[col];
        b[row] = Rat(cleared[k]);
      }
      for (int col = 0; col < k; ++col) a[d][col] = 1;
      b[d] = 1;
      SolveResult res = solve_exact(a, b);
      if (res.status != SolveStatus::ok) return true;  // keep looking
      for (const Rat& l : res.solution)
        if (l < 0) return true;
      return false;  // found: stop
    });
    if (found) return true;
  }
  return false;
}

bool is_lattice_polytope(const VPolytope& p) {
  for (const QVec& v : p.vertices)
    if (!is_integral(v)) return false;
  return true;
}

bool is_full_dimensional(const VPolytope& p) {
  return affine_rank(p.vertices) == p.dim;
}

HPolytope facets_from_vertices(const VPolytope& p) {
  if (!is_full_dimensional(p))
    throw PreconditionError("polytope is not full-dimensional");
  const int d = p.dim;
  const int n = static_cast<int>(p.vertices.size());
  std::set<Halfspace> facets;
  for_each_subset(n, d, [&](const std::vector<int>& idx) {
    // Hyperplane {x : <x,a> = c} through the chosen vertices: the kernel of
    // the homogenized rows (v | -1) in the unknowns (a, c).
    Mat rows;
    for (int i : idx) {
      QVec qrow = p.vertices[i];
      qrow.push_back(Rat(-1));
      rows.push_back(clear_denominators(qrow));
    }
    Mat ker = kernel_basis(rows, d + 1);
    if (ker.size() != 1) return true;
    Vec a(ker[0].begin(), ker[0].end() - 1);
    Rat c = Rat(ker[0].back());
    if (is_zero(a)) return true;
    int sign_lo = 0, sign_hi = 0;
    for (const QVec& v : p.vertices) {
      Rat s = pairing(v, a) - c;
      if (s < 0) sign_lo = 1;
      if (s > 0) sign_hi = 1;
      if (sign_lo && sign_hi) return true;  // mixed: not supporting
    }
    if (sign_lo)
      facets.insert(make_halfspace(negate(a), -c));
    else
      facets.insert(make_halfspace(a, c));
    return true;
  });
  return HPolytope{d, std::vector<Halfspace>(facets.begin(), facets.end())};
}

std::optional<Vec> recession_direction(const HPolytope& p) {
  const int d = p.dim;
  Mat normals;
  for (const Halfspace& h : p.halfspaces) normals.push_back(h.normal);
  if (rank(normals) < d) {
    // Lineality: a direction orthogonal to every normal.
    Mat ker = kernel_basis(normals, d);
    return ker.front();
  }
  const int m = static_cast<int>(normals.size());
  std::optional<Vec> found;
  for_each_subset(m, d - 1, [&](const std::vector<int>& idx) {
    Mat rows;
    for (int i : idx) rows.push_back(normals[i]);
    Mat ker = kernel_basis(rows, d);
    if (ker.size() != 1) return true;
    for (const Vec& cand : {ker[0], negate(ker[0])}) {
      bool ok = true;
      for (const Vec& nrm : normals)
        if (pairing(nrm, cand) < 0) {
          ok = false;
          break;
        }
      if (ok) {
        found = cand;
        return false;
      }
    }
    return true;
  });
  return found;
}

VPolytope vertices_from_facets(const HPolytope& p) {
  const int d = p.dim;
  const int m = static_cast<int>(p.halfspaces.size());
  std::set<QVec> verts;
  for_each_subset(m, d, [&](const std::vector<int>& idx) {
    Mat a;
    QVec b;
    for (int i : idx) {
      a.push_back(p.halfspaces[i].normal);
      b.push_back(p.halfspaces[i].rhs);
    }
    SolveResult res = solve_exact(a, b);
    if (res.status == SolveStatus::ok && contains(p, res.solution))
      verts.insert(res.solution);
    return true;
  });
  std::optional<Vec> ray = recession_direction(p);
  if (!verts.empty()) {
    if (ray) throw UnboundedError("polytope is unbounded", *ray);
    return vpolytope_unchecked(d, {verts.begin(), verts.end()});
  }
  if (!ray) return VPolytope{d, {}};  // empty and bounded
  if (fourier_motzkin_feasible(p))
    throw UnboundedError("polyhedron is unbounded", *ray);
  return VPolytope{d, {}};
}

VPolytope dual_polytope(const VPolytope& p) {
  HPolytope facets = facets_from_vertices(p);
  std::vector<QVec> duals;
  for (const Halfspace& h : facets.halfspaces) {
    if (!(h.rhs < 0))
      throw PreconditionError("origin is not in the interior of the polytope");
    QVec v(p.dim);
    for (int j = 0; j < p.dim; ++j) v[j] = Rat(h.normal[j]) / (-h.rhs);
    duals.push_back(std::move(v));
  }
  return vpolytope_unchecked(p.dim, std::move(duals));
}

bool is_reflexive(const VPolytope& p) {
  if (!is_lattice_polytope(p)) return false;
  return is_lattice_polytope(dual_polytope(p));
}

std::vector<Vec> lattice_points(const HPolytope& p) {
  VPolytope v = vertices_from_facets(p);  // throws if unbounded
  if (v.vertices.empty()) return {};
  std::vector<Vec> out;
  // Bounding box, rounded inward.
  Vec lo(p.dim), hi(p.dim);
  for (int j = 0; j < p.dim; ++j) {
    Rat mn = v.vertices[0][j], mx = v.vertices[0][j];
    for (const QVec& vert : v.vertices) {
      mn = std::min(mn, vert[j]);
      mx = std::max(mx, vert[j]);
    }
    lo[j] = ceil_rat(mn);
    hi[j] = floor_rat(mx);
    if (lo[j] > hi[j]) return {};
  }
  Vec cur = lo;
  for (;;) {
    if (contains(p, cur)) out.push_back(cur);
    int j = p.dim - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

std::vector<Vec> lattice_points(const VPolytope& p) {
  if (p.vertices.empty()) return {};
  std::vector<Vec> out;
  Vec lo(p.dim), hi(p.dim);
  for (int j = 0; j < p.dim; ++j) {
    Rat mn = p.vertices[0][j], mx = p.vertices[0][j];
    for (const QVec& vert : p.vertices) {
      mn = std::min(mn, vert[j]);
      mx = std::max(mx, vert[j]);
    }
    lo[j] = ceil_rat(mn);
    hi[j] = floor_rat(mx);
    if (lo[j] > hi[j]) return {};
  }
  Vec cur = lo;
  for (;;) {
    if (point_in_hull(to_qvec(cur), p.vertices)) out.push_back(cur);
    int j = p.dim - 1;
    while (j >= 0 && cur[j] == hi[j]) {
      cur[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++cur[j];
  }
  return out;
}

namespace {

bool mat_lex_less(const Mat& a, const Mat& b) {
  return a < b;  // row-major lexicographic via vector comparison
}

Mat column_hnf_of_rows(const Mat& rows) {
  // Column-style HNF: right unimodular action. Equals the transpose of the
  // row HNF of the transpose.
  return transpose(hermite_normal_form(transpose(rows)).h);
}

// Exact counterclockwise comparator around an interior point.
struct CcwLess {
  QVec center;
  bool half(const QVec& v) const {
    // Lower half (angle in [pi, 2pi)) sorts after the upper half.
    Rat y = v[1] - center[1];
    if (y != 0) return y < 0;
    return v[0] - center[0] < 0;
  }
  bool operator()(const QVec& a, const QVec& b) const {
    bool ha = half(a), hb = half(b);
    if (ha != hb) return !ha && hb;
    Rat cross = (a[0] - center[0]) * (b[1] - center[1]) -
                (a[1] - center[1]) * (b[0] - center[0]);
    return cross > 0;
  }
};

}  // namespace

Mat canonical_form(const VPolytope& p) {
  if (!is_lattice_polytope(p))
    throw PreconditionError("canonical_form requires a lattice polytope");
  if (!is_full_dimensional(p))
    throw PreconditionError("canonical_form requires a full-dimensional polytope");
  const int n = static_cast<int>(p.vertices.size());
  Mat verts;
  for (const QVec& v : p.vertices) verts.push_back(to_vec(v));

  std::optional<Mat> best;
  auto consider = [&](const std::vector<int>& order) {
    Mat m;
    for (int i : order) m.push_back(verts[i]);
    Mat cand = column_hnf_of_rows(m);
    if (!best || mat_lex_less(cand, *best)) best = std::move(cand);
  };

  if (p.dim == 2 && n > 2) {
    // A lattice isomorphism maps the boundary cycle of a polygon to the
    // boundary cycle (reversed when orientation-reversing), so the dihedral
    // orderings of the cycle suffice and keep this polynomial.
    QVec center(2, Rat(0));
    for (const QVec& v : p.vertices) {
      center[0] += v[0];
      center[1] += v[1];
    }
    center[0] /= n;
    center[1] /= n;
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i;
    CcwLess less{center};
    std::sort(cyc.begin(), cyc.end(),
              [&](int a, int b) { return less(p.vertices[a], p.vertices[b]); });
    for (int rot = 0; rot < n; ++rot) {
      std::vector<int> fwd(n), rev(n);
      for (int i = 0; i < n; ++i) {
        fwd[i] = cyc[(rot + i) % n];
        rev[i] = cyc[(rot + n - i) % n];
      }
      consider(fwd);
      consider(rev);
    }
  } else {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    do {
      consider(order);
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return *best;
}

}  // namespace toric
