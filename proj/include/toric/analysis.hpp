#pragma once

#include "toric/catalog.hpp"

namespace toric {

struct RayNefWitness {
  int ray = -1;  // the divisor D_ray that failed
  NefCertificate certificate;
};

/// Everything the pipeline decides about one fan, plus the consistency of
/// the product-of-projective-spaces biconditional on it.
struct AnalysisReport {
  int dim = 0;
  int ray_count = 0;
  int picard_number = 0;  // ray_count - dim (smooth complete case)
  bool smooth = false;
  bool complete = false;
  bool fano = false;
  AmpleCertificate fano_witness;  // strictness/nef failure when not Fano
  std::vector<bool> nef_flags;    // per ray: is D_tau nef
  bool all_nef = false;
  std::vector<RayNefWitness> nef_witnesses;  // one per non-nef ray
  int root_count = 0;
  int semisimple_count = 0;
  bool reductive = false;
  int semisimple_rank = 0;
  std::optional<ProductDecomposition> product;
  /// True on every valid input; falseness signals an implementation bug.
  /// Records: fano implies (all_nef iff product present), and under
  /// fano && all_nef also reductive && semisimple_rank == dim.
  bool theorem_consistent = false;
};

/// Runs every check. Throws PreconditionError when the fan is invalid,
/// not smooth, or not complete.
AnalysisReport analyze(const Fan& fan, bool strict = false);

struct SweepSummary {
  std::vector<std::pair<std::string, AnalysisReport>> results;
  int fano_count = 0;
  int all_nef_count = 0;
  int product_count = 0;
  bool all_consistent = true;
};

SweepSummary theorem_sweep(const std::vector<CatalogEntry>& entries);

}  // namespace toric
