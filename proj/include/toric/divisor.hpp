#pragma once

#include "toric/fan.hpp"

namespace toric {

/// Torus-invariant Cartier divisor D = sum a_tau D_tau, one integer
/// coefficient per ray in the fan's canonical ray order.
struct ToricDivisor {
  std::vector<Int> coefficients;

  friend bool operator==(const ToricDivisor&, const ToricDivisor&) = default;
};

ToricDivisor divisor_for_ray(const Fan& fan, int ray);
/// K* = sum D_tau: all coefficients 1.
ToricDivisor anticanonical(const Fan& fan);

/// Per-maximal-cone linear data of the support function: m_sigma with
/// <m_sigma, u_tau> = -a_tau for every ray of the cone. Integral because the
/// fan is smooth.
struct SupportFunction {
  std::vector<Vec> cone_values;  // parallel to fan.max_cones
};

SupportFunction support_function(const Fan& fan, const ToricDivisor& d);

/// Nef verdict with a re-checkable failure witness: the first pair
/// (cone, ray) in canonical order (rays outer, cones inner) with
/// <m_cone, u_ray> < -a_ray.
struct NefCertificate {
  bool nef = false;
  int cone = -1;
  int ray = -1;
};

/// D is nef iff m_sigma lies in P_D for every maximal cone sigma; this
/// simultaneously decides basepoint-freeness and upper convexity of the
/// support function.
NefCertificate is_nef(const Fan& fan, const ToricDivisor& d);

struct AmpleCertificate {
  bool ample = false;
  bool nef_failed = false;  // witness below is a nef violation
  int cone = -1;
  int ray = -1;
};

/// D is ample iff its support function is strictly convex: nef, and
/// <m_sigma, u_ray> > -a_ray strictly for every ray outside sigma.
AmpleCertificate is_ample(const Fan& fan, const ToricDivisor& d);

/// P_D = {m : <m, u_tau> >= -a_tau for all rays}; bounded when the fan is
/// complete.
HPolytope divisor_polytope(const Fan& fan, const ToricDivisor& d);

bool is_fano(const Fan& fan);
AmpleCertificate fano_certificate(const Fan& fan);

}  // namespace toric
