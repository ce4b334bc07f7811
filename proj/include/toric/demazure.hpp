#pragma once

#include <optional>

#include "toric/divisor.hpp"

namespace toric {

/// Demazure root: m in M with <u_tau, m> = -1 for its distinguished ray and
/// <u_tau', m> >= 0 for every other ray. The distinguished ray is unique.
struct Root {
  Vec m;
  int ray = -1;

  friend bool operator==(const Root&, const Root&) = default;
};

/// Demazure root system of a smooth complete fan. Roots sorted by m;
/// semisimple[i] records whether -roots[i].m is also a root.
struct RootSystem {
  std::vector<Root> roots;
  std::vector<bool> semisimple;
};

/// Membership of m in the root system: needs exactly one ray with negative
/// pairing, and that pairing equal to -1. On failure, negative_pairings
/// lists every ray with <u_tau, m> < 0 (canonical ray order).
struct RootMembership {
  bool is_root = false;
  int ray = -1;
  std::vector<std::pair<int, Int>> negative_pairings;
};

RootMembership root_membership(const Fan& fan, const Vec& m);

/// Enumerates, for each ray tau, the lattice points of the slice
/// {m : <u_tau, m> = -1, <u_tau', m> >= 0 for tau' != tau}.
RootSystem demazure_roots(const Fan& fan);

int semisimple_count(const RootSystem& rs);
/// Aut(X) is reductive iff every root is semisimple.
bool is_reductive(const RootSystem& rs);
/// Rank over Q of the matrix of semisimple roots.
int semisimple_rank(const RootSystem& rs);

/// Thrown by nef_divisor_roots when D_tau is not nef.
struct DivisorNotNefError : ToricError {
  NefCertificate certificate;
  DivisorNotNefError(const std::string& msg, NefCertificate cert)
      : ToricError(msg), certificate(cert) {}
};

/// The support-function values {m_sigma} of D_tau (sorted, deduplicated).
/// Requires D_tau nef. Every value with <u_tau, m> = -1 is checked to be a
/// Demazure root with distinguished ray tau; the zero vector arises from
/// cones disjoint from tau and is not a root.
std::vector<Vec> nef_divisor_roots(const Fan& fan, int ray);

/// Partition of the rays realizing the fan as a product of projective
/// spaces: each factor's rays sum to zero, |S_j| = n_j + 1, and the maximal
/// cones are exactly the unions of "all but one ray" per factor.
struct ProductDecomposition {
  std::vector<std::vector<int>> factors;
  std::vector<int> dims;

  friend bool operator==(const ProductDecomposition&,
                         const ProductDecomposition&) = default;
};

/// Searches for a product-of-projective-spaces structure; absence is a
/// normal result.
std::optional<ProductDecomposition> detect_product(const Fan& fan);

}  // namespace toric
