#include "toric/json_io.hpp"

#include <fstream>
#include <limits>

#include "toric/errors.hpp"

namespace toric {

namespace {

const long long kI64Max = std::numeric_limits<std::int64_t>::max();
const long long kI64Min = std::numeric_limits<std::int64_t>::min();

}  // namespace

json int_to_json(const Int& x) {
  if (x >= kI64Min && x <= kI64Max) return x.convert_to<std::int64_t>();
  return to_string(x);  // larger integers round-trip as decimal strings
}

Int json_to_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s.find('/') != std::string::npos)
      throw ParseError("expected an integer, got rational '" + s + "'");
    try {
      return Int(s);
    } catch (const std::exception&) {
      throw ParseError("cannot parse integer '" + s + "'");
    }
  }
  throw ParseError("expected an integer, got " + j.dump());
}

json rat_to_json(const Rat& q) {
  if (den(q) == 1) return int_to_json(num(q));
  return to_string(num(q)) + "/" + to_string(den(q));
}

Rat json_to_rat(const json& j) {
  if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rat(Int(s));
      return make_rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const ToricError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("cannot parse rational '" + s + "'");
    }
  }
  throw ParseError("expected an integer or 'p/q' string, got " + j.dump());
}

namespace {

Vec parse_int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  Vec v;
  for (const json& e : j) v.push_back(json_to_int(e));
  return v;
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(int_to_json(x));
  return a;
}

json qvec_to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& q : v) a.push_back(rat_to_json(q));
  return a;
}

}  // namespace

Fan parse_fan(const json& j) {
  if (!j.is_object()) throw ParseError("fan must be a JSON object");
  if (!j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
    throw ParseError("fan needs fields dim, rays, max_cones");
  if (!j["dim"].is_number_integer()) throw ParseError("fan dim must be an integer");
  int dim = j["dim"].get<int>();
  if (!j["rays"].is_array()) throw ParseError("fan rays must be an array");
  std::vector<Vec> rays;
  for (const json& r : j["rays"]) rays.push_back(parse_int_vector(r, "ray"));
  if (!j["max_cones"].is_array())
    throw ParseError("fan max_cones must be an array");
  std::vector<std::vector<int>> cones;
  for (const json& c : j["max_cones"]) {
    if (!c.is_array()) throw ParseError("max cone must be an array of indices");
    std::vector<int> cone;
    for (const json& e : c) {
      if (!e.is_number_integer()) throw ParseError("cone entries must be integers");
      cone.push_back(e.get<int>());
    }
    cones.push_back(std::move(cone));
  }
  return make_fan(dim, std::move(rays), std::move(cones));
}

json fan_to_json(const Fan& fan) {
  json j;
  j["dim"] = fan.dim;
  json rays = json::array();
  for (const Vec& r : fan.rays) rays.push_back(vec_to_json(r));
  j["rays"] = std::move(rays);
  j["max_cones"] = fan.max_cones;
  return j;
}

ToricDivisor parse_divisor(const json& j, const Fan& fan) {
  if (!j.is_object() || !j.contains("coefficients"))
    throw ParseError("divisor needs field coefficients");
  ToricDivisor d{parse_int_vector(j["coefficients"], "coefficients")};
  if (d.coefficients.size() != fan.rays.size())
    throw ParseError("divisor has " + std::to_string(d.coefficients.size()) +
                     " coefficients for a fan with " +
                     std::to_string(fan.rays.size()) + " rays");
  return d;
}

json divisor_to_json(const ToricDivisor& d) {
  json j;
  j["coefficients"] = vec_to_json(d.coefficients);
  return j;
}

VPolytope parse_polytope(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ParseError("polytope needs fields dim, vertices");
  if (!j["dim"].is_number_integer())
    throw ParseError("polytope dim must be an integer");
  int dim = j["dim"].get<int>();
  if (dim < 1) throw ParseError("polytope dim must be at least 1");
  if (!j["vertices"].is_array())
    throw ParseError("polytope vertices must be an array");
  std::vector<QVec> verts;
  for (const json& v : j["vertices"]) {
    if (!v.is_array()) throw ParseError("vertex must be an array");
    QVec q;
    for (const json& e : v) q.push_back(json_to_rat(e));
    if (static_cast<int>(q.size()) != dim)
      throw ParseError("vertex length does not match dim");
    verts.push_back(std::move(q));
  }
  return make_vpolytope(dim, std::move(verts));
}

json polytope_to_json(const VPolytope& p) {
  json j;
  j["dim"] = p.dim;
  json verts = json::array();
  for (const QVec& v : p.vertices) verts.push_back(qvec_to_json(v));
  j["vertices"] = std::move(verts);
  return j;
}

json report_to_json(const AnalysisReport& r) {
  json j;
  j["schema"] = 1;
  j["dim"] = r.dim;
  j["ray_count"] = r.ray_count;
  j["picard_number"] = r.picard_number;
  j["smooth"] = r.smooth;
  j["complete"] = r.complete;
  j["fano"] = r.fano;
  j["nef_flags"] = r.nef_flags;
  j["all_nef"] = r.all_nef;
  j["root_count"] = r.root_count;
  j["semisimple_count"] = r.semisimple_count;
  j["reductive"] = r.reductive;
  j["semisimple_rank"] = r.semisimple_rank;
  if (r.product) {
    json p;
    p["factors"] = r.product->factors;
    p["dims"] = r.product->dims;
    j["product"] = std::move(p);
  } else {
    j["product"] = nullptr;
  }
  j["theorem_consistent"] = r.theorem_consistent;
  json witnesses;
  json non_nef = json::array();
  for (const RayNefWitness& w : r.nef_witnesses) {
    json e;
    e["divisor_ray"] = w.ray;
    e["cone"] = w.certificate.cone;
    e["ray"] = w.certificate.ray;
    non_nef.push_back(std::move(e));
  }
  witnesses["non_nef"] = std::move(non_nef);
  if (!r.fano) {
    json a;
    a["nef_failed"] = r.fano_witness.nef_failed;
    a["cone"] = r.fano_witness.cone;
    a["ray"] = r.fano_witness.ray;
    witnesses["ample_failure"] = std::move(a);
  } else {
    witnesses["ample_failure"] = nullptr;
  }
  j["witnesses"] = std::move(witnesses);
  return j;
}

json root_system_to_json(const RootSystem& rs) {
  json j;
  json roots = json::array();
  for (const Root& r : rs.roots) {
    json e;
    e["m"] = vec_to_json(r.m);
    e["ray"] = r.ray;
    roots.push_back(std::move(e));
  }
  j["roots"] = std::move(roots);
  j["semisimple_count"] = semisimple_count(rs);
  j["reductive"] = is_reductive(rs);
  j["rank"] = semisimple_rank(rs);
  return j;
}

json nef_certificate_to_json(const Fan& fan, const ToricDivisor& d,
                             const NefCertificate& cert) {
  json j;
  j["nef"] = cert.nef;
  if (cert.nef) {
    j["witness"] = nullptr;
  } else {
    json w;
    w["cone"] = cert.cone;
    w["cone_rays"] = fan.max_cones[cert.cone];
    w["ray"] = cert.ray;
    w["ray_vector"] = vec_to_json(fan.rays[cert.ray]);
    SupportFunction sf = support_function(fan, d);
    w["m_sigma"] = vec_to_json(sf.cone_values[cert.cone]);
    w["pairing"] = int_to_json(pairing(sf.cone_values[cert.cone], fan.rays[cert.ray]));
    w["bound"] = int_to_json(-d.coefficients[cert.ray]);
    j["witness"] = std::move(w);
  }
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
}

}  // namespace toric
