#include "toric/analysis.hpp"

#include "toric/errors.hpp"

namespace toric {

AnalysisReport analyze(const Fan& fan, bool strict) {
  std::vector<std::string> diags = validate(fan, strict);
  if (!diags.empty()) {
    std::string msg = "invalid fan:";
    for (const std::string& d : diags) msg += " [" + d + "]";
    throw PreconditionError(msg);
  }

  AnalysisReport r;
  r.dim = fan.dim;
  r.ray_count = static_cast<int>(fan.rays.size());
  r.picard_number = r.ray_count - r.dim;
  r.smooth = is_smooth(fan);
  r.complete = is_complete(fan);
  if (!r.smooth) throw PreconditionError("fan is not smooth");
  if (!r.complete) throw PreconditionError("fan is not complete");

  r.fano_witness = fano_certificate(fan);
  r.fano = r.fano_witness.ample;

  r.all_nef = true;
  for (int ray = 0; ray < r.ray_count; ++ray) {
    NefCertificate cert = is_nef(fan, divisor_for_ray(fan, ray));
    r.nef_flags.push_back(cert.nef);
    if (!cert.nef) {
      r.all_nef = false;
      r.nef_witnesses.push_back({ray, cert});
    }
  }

  RootSystem rs = demazure_roots(fan);
  r.root_count = static_cast<int>(rs.roots.size());
  r.semisimple_count = toric::semisimple_count(rs);
  r.reductive = toric::is_reductive(rs);
  r.semisimple_rank = toric::semisimple_rank(rs);

  r.product = detect_product(fan);

  r.theorem_consistent =
      !r.fano ||
      ((r.all_nef == r.product.has_value()) &&
       (!r.all_nef || (r.reductive && r.semisimple_rank == r.dim)));
  return r;
}

SweepSummary theorem_sweep(const std::vector<CatalogEntry>& entries) {
  SweepSummary s;
  for (const CatalogEntry& e : entries) {
    AnalysisReport r = analyze(e.fan);
    if (r.fano) ++s.fano_count;
    if (r.all_nef) ++s.all_nef_count;
    if (r.product) ++s.product_count;
    if (!r.theorem_consistent) s.all_consistent = false;
    s.results.emplace_back(e.name, std::move(r));
  }
  return s;
}

}  // namespace toric
