#include "toric/demazure.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "toric/errors.hpp"

namespace toric {

RootMembership root_membership(const Fan& fan, const Vec& m) {
  RootMembership out;
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    Int p = pairing(fan.rays[i], m);
    if (p < 0) out.negative_pairings.emplace_back(static_cast<int>(i), p);
  }
  if (out.negative_pairings.size() == 1 && out.negative_pairings[0].second == -1) {
    out.is_root = true;
    out.ray = out.negative_pairings[0].first;
  }
  return out;
}

RootSystem demazure_roots(const Fan& fan) {
  if (!is_smooth(fan)) throw PreconditionError("fan is not smooth");
  if (!is_complete(fan)) throw PreconditionError("fan is not complete");
  RootSystem rs;
  for (std::size_t tau = 0; tau < fan.rays.size(); ++tau) {
    std::vector<Halfspace> hs;
    hs.push_back(make_halfspace(fan.rays[tau], Rat(-1)));
    hs.push_back(make_halfspace(negate(fan.rays[tau]), Rat(1)));
    for (std::size_t other = 0; other < fan.rays.size(); ++other)
      if (other != tau) hs.push_back(make_halfspace(fan.rays[other], Rat(0)));
    std::vector<Vec> pts;
    try {
      pts = lattice_points(make_hpolytope(fan.dim, std::move(hs)));
    } catch (const UnboundedError& e) {
      throw PreconditionError("root slice for ray " + std::to_string(tau) +
                              " is unbounded; fan is not complete");
    }
    for (Vec& m : pts) {
      RootMembership check = root_membership(fan, m);
      if (!check.is_root || check.ray != static_cast<int>(tau))
        throw ToricError("enumerated root fails its membership recheck");
      rs.roots.push_back(Root{std::move(m), static_cast<int>(tau)});
    }
  }
  std::sort(rs.roots.begin(), rs.roots.end(),
            [](const Root& a, const Root& b) { return a.m < b.m; });
  std::set<Vec> all;
  for (const Root& r : rs.roots) all.insert(r.m);
  rs.semisimple.reserve(rs.roots.size());
  for (const Root& r : rs.roots) rs.semisimple.push_back(all.count(negate(r.m)) > 0);
  return rs;
}

int semisimple_count(const RootSystem& rs) {
  return static_cast<int>(std::count(rs.semisimple.begin(), rs.semisimple.end(), true));
}

bool is_reductive(const RootSystem& rs) {
  return semisimple_count(rs) == static_cast<int>(rs.roots.size());
}

int semisimple_rank(const RootSystem& rs) {
  Mat m;
  for (std::size_t i = 0; i < rs.roots.size(); ++i)
    if (rs.semisimple[i]) m.push_back(rs.roots[i].m);
  if (m.empty()) return 0;
  return rank(m);
}

std::vector<Vec> nef_divisor_roots(const Fan& fan, int ray) {
  ToricDivisor d = divisor_for_ray(fan, ray);
  NefCertificate cert = is_nef(fan, d);
  if (!cert.nef)
    throw DivisorNotNefError("divisor for ray " + std::to_string(ray) +
                                 " is not nef",
                             cert);
  SupportFunction sf = support_function(fan, d);
  std::set<Vec> values(sf.cone_values.begin(), sf.cone_values.end());
  for (const Vec& m : values) {
    if (pairing(fan.rays[ray], m) != -1) continue;
    RootMembership check = root_membership(fan, m);
    if (!check.is_root || check.ray != ray)
      throw ToricError("support value of a nef invariant divisor is not a root");
  }
  return {values.begin(), values.end()};
}

namespace {

// Expected maximal cones of the product fan for the given ray partition:
// all unions of "factor minus one ray".
std::vector<std::vector<int>> product_cones(
    const std::vector<std::vector<int>>& factors) {
  std::vector<std::vector<int>> cones{{}};
  for (const auto& factor : factors) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : cones)
      for (std::size_t drop = 0; drop < factor.size(); ++drop) {
        std::vector<int> cone = partial;
        for (std::size_t k = 0; k < factor.size(); ++k)
          if (k != drop) cone.push_back(factor[k]);
        next.push_back(std::move(cone));
      }
    cones = std::move(next);
  }
  for (auto& cone : cones) std::sort(cone.begin(), cone.end());
  std::sort(cones.begin(), cones.end());
  return cones;
}

}  // namespace

std::optional<ProductDecomposition> detect_product(const Fan& fan) {
  if (!is_smooth(fan)) throw PreconditionError("fan is not smooth");
  if (!is_complete(fan)) throw PreconditionError("fan is not complete");
  const int n = static_cast<int>(fan.rays.size());
  const int d = fan.dim;

  std::vector<std::vector<int>> factors;
  std::optional<ProductDecomposition> result;

  std::function<bool(std::vector<int>)> search = [&](std::vector<int> remaining) {
    if (remaining.empty()) {
      if (product_cones(factors) != fan.max_cones) return false;
      ProductDecomposition pd;
      pd.factors = factors;
      int total = 0;
      for (const auto& f : pd.factors) {
        pd.dims.push_back(static_cast<int>(f.size()) - 1);
        total += pd.dims.back();
      }
      if (total != d) return false;
      Mat all_rays;
      for (const auto& f : pd.factors)
        for (int i : f) all_rays.push_back(fan.rays[i]);
      if (rank(all_rays) != d) return false;  // complementary spans
      result = std::move(pd);
      return true;
    }
    const int first = remaining[0];
    std::vector<int> rest(remaining.begin() + 1, remaining.end());
    const int rn = static_cast<int>(rest.size());
    // Zero-sum groups containing `first`, smallest first: candidate
    // projective-space factors.
    for (int extra = 1; extra <= std::min(d, rn); ++extra) {
      std::vector<int> sel(extra);
      std::function<bool(int, int)> combos = [&](int start, int depth) {
        if (depth == extra) {
          std::vector<int> group{first};
          for (int k = 0; k < extra; ++k) group.push_back(rest[sel[k]]);
          Vec sum(d, 0);
          Mat rows;
          for (int i : group) {
            for (int j = 0; j < d; ++j) sum[j] += fan.rays[i][j];
            rows.push_back(fan.rays[i]);
          }
          if (!is_zero(sum)) return false;
          if (rank(rows) != extra) return false;  // need |group| - 1
          std::vector<int> next_remaining;
          std::set<int> in_group(group.begin(), group.end());
          for (int i : remaining)
            if (!in_group.count(i)) next_remaining.push_back(i);
          factors.push_back(group);
          if (search(std::move(next_remaining))) return true;
          factors.pop_back();
          return false;
        }
        for (int i = start; i < rn; ++i) {
          sel[depth] = i;
          if (combos(i + 1, depth + 1)) return true;
        }
        return false;
      };
      if (combos(0, 0)) return true;
    }
    return false;
  };

  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  search(std::move(all));
  return result;
}

}  // namespace toric
