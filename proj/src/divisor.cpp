#include "toric/divisor.hpp"

#include <algorithm>

#include "toric/errors.hpp"

namespace toric {

namespace {

void require_smooth_complete(const Fan& fan) {
  if (!is_smooth(fan)) throw PreconditionError("fan is not smooth");
  if (!is_complete(fan)) throw PreconditionError("fan is not complete");
}

void check_coefficients(const Fan& fan, const ToricDivisor& d) {
  if (d.coefficients.size() != fan.rays.size())
    throw DimensionError("divisor has " + std::to_string(d.coefficients.size()) +
                         " coefficients for " + std::to_string(fan.rays.size()) +
                         " rays");
}

}  // namespace

ToricDivisor divisor_for_ray(const Fan& fan, int ray) {
  if (ray < 0 || ray >= static_cast<int>(fan.rays.size()))
    throw ParseError("ray index out of range");
  ToricDivisor d{std::vector<Int>(fan.rays.size(), 0)};
  d.coefficients[ray] = 1;
  return d;
}

ToricDivisor anticanonical(const Fan& fan) {
  return ToricDivisor{std::vector<Int>(fan.rays.size(), 1)};
}

SupportFunction support_function(const Fan& fan, const ToricDivisor& d) {
  require_smooth_complete(fan);
  check_coefficients(fan, d);
  SupportFunction sf;
  sf.cone_values.reserve(fan.max_cones.size());
  for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
    Mat rows = cone_matrix(fan, static_cast<int>(c));
    Vec rhs;
    for (int i : fan.max_cones[c]) rhs.push_back(-d.coefficients[i]);
    SolveResult res = solve_exact(rows, rhs);
    if (res.status != SolveStatus::ok || !is_integral(res.solution))
      throw ToricError("support function solve failed on a smooth cone");
    Vec m = to_vec(res.solution);
    for (int i : fan.max_cones[c])  // substitution recheck, always on
      if (pairing(m, fan.rays[i]) != -d.coefficients[i])
        throw ToricError("support function substitution check failed");
    sf.cone_values.push_back(std::move(m));
  }
  return sf;
}

NefCertificate is_nef(const Fan& fan, const ToricDivisor& d) {
  SupportFunction sf = support_function(fan, d);
  for (std::size_t ray = 0; ray < fan.rays.size(); ++ray)
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c)
      if (pairing(sf.cone_values[c], fan.rays[ray]) < -d.coefficients[ray])
        return {false, static_cast<int>(c), static_cast<int>(ray)};
  return {true, -1, -1};
}

AmpleCertificate is_ample(const Fan& fan, const ToricDivisor& d) {
  NefCertificate nef = is_nef(fan, d);
  if (!nef.nef) return {false, true, nef.cone, nef.ray};
  SupportFunction sf = support_function(fan, d);
  for (std::size_t ray = 0; ray < fan.rays.size(); ++ray)
    for (std::size_t c = 0; c < fan.max_cones.size(); ++c) {
      const auto& cone = fan.max_cones[c];
      if (std::find(cone.begin(), cone.end(), static_cast<int>(ray)) != cone.end())
        continue;
      if (!(pairing(sf.cone_values[c], fan.rays[ray]) > -d.coefficients[ray]))
        return {false, false, static_cast<int>(c), static_cast<int>(ray)};
    }
  return {true, false, -1, -1};
}

HPolytope divisor_polytope(const Fan& fan, const ToricDivisor& d) {
  require_valid(fan);
  if (!is_complete(fan)) throw PreconditionError("fan is not complete");
  check_coefficients(fan, d);
  std::vector<Halfspace> hs;
  for (std::size_t i = 0; i < fan.rays.size(); ++i)
    hs.push_back(make_halfspace(fan.rays[i], Rat(-d.coefficients[i])));
  return make_hpolytope(fan.dim, std::move(hs));
}

AmpleCertificate fano_certificate(const Fan& fan) {
  return is_ample(fan, anticanonical(fan));
}

bool is_fano(const Fan& fan) { return fano_certificate(fan).ample; }

}  // namespace toric
