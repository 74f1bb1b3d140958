#include "morava/io/json.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace morava::io {

namespace {

std::uint64_t residue_from(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw FormatError("negative residue " + std::to_string(v));
    return static_cast<std::uint64_t>(v);
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size() || s[0] == '-') throw FormatError("bad residue string '" + s + "'");
    return v;
  }
  throw FormatError("residue must be a decimal string or integer");
}

std::int64_t signed_from(const Json& j) {
  if (j.is_number_integer()) return j.get<std::int64_t>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) throw FormatError("bad integer string '" + s + "'");
    return v;
  }
  throw FormatError("coefficient must be a decimal string or integer");
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw FormatError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

QuadraticModulus modulus_from(const Json& j) {
  const Json& pj = field(j, "prime");
  if (!pj.is_number_integer() || pj.get<std::int64_t>() < 2) throw FormatError("prime must be an integer >= 2");
  const auto p = pj.get<std::uint64_t>();
  if (j.contains("omega")) {
    const Json& w = j.at("omega");
    if (!w.is_array() || w.size() != 2) throw FormatError("omega must be [a, b]");
    return QuadraticModulus::make(p, residue_from(w[0]), residue_from(w[1]));
  }
  return QuadraticModulus::canonical(p);
}

Json omega_json(const QuadraticModulus& mod) { return Json::array({mod.a, mod.b}); }

ExtElem ext_from_json(const ExtRingPtr& ring, int precision, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != ring->degree()) {
    throw FormatError("extension element must list " + std::to_string(ring->degree()) + " coefficients");
  }
  std::vector<WittElem> cs;
  for (const Json& c : j) cs.push_back(pair_from_json(ring->modulus(), precision, c));
  return ExtElem(ring, std::move(cs));
}

ProjPoint point_from_json(const ExtRingPtr& ring, const Json& j) {
  const int prec = int_field(j, "prec");
  return ProjPoint(ext_from_json(ring, prec, field(j, "x")), ext_from_json(ring, prec, field(j, "y")));
}

}  // namespace

Json pair_json(const WittElem& c) {
  return Json::array({std::to_string(c.c0().residue()), std::to_string(c.c1().residue())});
}

WittElem pair_from_json(const QuadraticModulus& mod, int precision, const Json& j) {
  if (j.is_array() && j.size() == 2) {
    // Signed inputs are reduced; strings are residues.
    if (j[0].is_number_integer() && j[1].is_number_integer()) {
      return WittElem::from_signed(mod, precision, signed_from(j[0]), signed_from(j[1]));
    }
    const std::uint64_t m = checked_power(mod.p, precision);
    return WittElem(mod, precision, residue_from(j[0]) % m, residue_from(j[1]) % m);
  }
  if (j.is_number_integer()) return WittElem::from_signed(mod, precision, signed_from(j), 0);
  if (j.is_string()) return WittElem::from_signed(mod, precision, signed_from(j), 0);
  throw FormatError("coefficient must be [a, b] or a single integer");
}

Json witt_json(const WittElem& c) {
  Json j;
  j["prime"] = c.prime();
  j["precision"] = c.precision();
  j["omega"] = omega_json(c.modulus());
  j["coeffs"] = pair_json(c);
  return j;
}

WittElem witt_from_json(const Json& j) {
  const QuadraticModulus mod = modulus_from(j);
  const int n = int_field(j, "precision");
  if (n < 1) throw FormatError("precision must be positive");
  return pair_from_json(mod, n, field(j, "coeffs"));
}

Json series_json(const TruncatedSeries& f) {
  Json j;
  j["prime"] = f.prime();
  j["precision"] = f.precision();
  j["truncation"] = f.truncation();
  j["omega"] = omega_json(f.modulus());
  Json cs = Json::array();
  for (const WittElem& c : f.coeffs()) cs.push_back(pair_json(c));
  j["coeffs"] = cs;
  return j;
}

TruncatedSeries series_from_json(const Json& j) {
  const QuadraticModulus mod = modulus_from(j);
  const int n = int_field(j, "precision");
  const Json& cs = field(j, "coeffs");
  if (!cs.is_array()) throw FormatError("coeffs must be an array");
  const int D = j.contains("truncation") ? int_field(j, "truncation") : static_cast<int>(cs.size());
  if (n < 1 || D < 1) throw FormatError("precision and truncation must be positive");
  std::vector<WittElem> coeffs;
  for (const Json& c : cs) coeffs.push_back(pair_from_json(mod, n, c));
  return TruncatedSeries::from_coeffs(mod, n, D, coeffs);
}

Json polynomial_json(const std::vector<WittElem>& poly) {
  Json a = Json::array();
  for (const WittElem& c : poly) a.push_back(pair_json(c));
  return a;
}

Json ext_json(const ExtElem& x) { return polynomial_json(x.coeffs()); }

Json point_json(const ProjPoint& pt) {
  Json j;
  j["x"] = ext_json(pt.x());
  j["y"] = ext_json(pt.y());
  j["prec"] = pt.precision();
  return j;
}

Json gamma_json(const OrderElem& g) {
  Json j;
  j["a0"] = pair_json(g.a0);
  j["a1"] = pair_json(g.a1);
  return j;
}

Json prepared_json(const PreparedForm& pf) {
  Json j;
  j["n"] = pf.n;
  j["degree"] = pf.degree();
  j["P"] = polynomial_json(pf.P);
  j["U"] = series_json(pf.U);
  return j;
}

Json polygon_json(const NewtonPolygon& np) {
  Json j;
  Json vs = Json::array();
  for (const auto& v : np.vertices) vs.push_back(Json::array({v.degree, v.valuation}));
  j["vertices"] = vs;
  Json ss = Json::array();
  for (const auto& s : np.slopes) {
    Json e;
    e["slope"] = s.value.to_string();
    e["multiplicity"] = s.multiplicity;
    ss.push_back(e);
  }
  j["slopes"] = ss;
  j["eisenstein"] = np.is_eisenstein();
  return j;
}

void write_certificate(std::ostream& os, const OrbitCertificate& cert) {
  const ExtRing& ring = *cert.ring();
  Json h;
  h["prime"] = ring.prime();
  h["precision"] = cert.base.precision();
  h["modulus"] = cert.modulus;
  h["seed"] = std::to_string(cert.seed);
  h["omega"] = omega_json(ring.modulus());
  h["ext_poly"] = polynomial_json(ring.poly());
  h["ring_precision"] = ring.precision();
  h["base"] = point_json(cert.base);
  h["target"] = cert.target;
  h["count"] = cert.entries.size();
  os << h.dump() << '\n';
  for (const CertificateEntry& e : cert.entries) {
    Json line;
    line["gamma"] = gamma_json(e.gamma);
    line["point"] = point_json(e.point);
    os << line.dump() << '\n';
  }
}

std::string certificate_text(const OrbitCertificate& cert) {
  std::ostringstream os;
  write_certificate(os, cert);
  return os.str();
}

OrbitCertificate read_certificate(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty certificate");
  const Json h = parse(line);
  const QuadraticModulus mod = modulus_from(h);
  const int n = int_field(h, "precision");
  const int ring_n = h.contains("ring_precision") ? int_field(h, "ring_precision") : n;
  std::vector<WittElem> poly;
  for (const Json& c : field(h, "ext_poly")) poly.push_back(pair_from_json(mod, ring_n, c));
  if (poly.empty()) throw FormatError("ext_poly must not be empty");
  const ExtRingPtr ring = ExtRing::make(poly);
  OrbitCertificate cert{point_from_json(ring, field(h, "base")), int_field(h, "modulus"),
                        residue_from(field(h, "seed")), int_field(h, "target"), {}};
  const std::size_t count = field(h, "count").get<std::size_t>();
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const Json e = parse(line);
    const Json& g = field(e, "gamma");
    OrderElem gamma{pair_from_json(mod, n, field(g, "a0")), pair_from_json(mod, n, field(g, "a1"))};
    cert.entries.push_back({std::move(gamma), point_from_json(ring, field(e, "point"))});
  }
  if (cert.entries.size() != count) {
    throw FormatError("certificate lists " + std::to_string(cert.entries.size()) + " entries, header says " +
                      std::to_string(count));
  }
  return cert;
}

Json space_json(const FiniteSpace& s) {
  Json j;
  j["points"] = s.labels();
  Json cs = Json::array();
  for (auto [x, y] : s.covers()) cs.push_back(Json::array({s.label(x), s.label(y)}));
  j["covers"] = cs;
  return j;
}

Json nodescent_json(const NodescentReport& rep) {
  Json j;
  j["prime"] = rep.prime;
  j["max_degree"] = rep.max_degree;
  j["points_per_degree"] = rep.points_per_degree;
  j["orbit_classes"] = rep.class_count;
  j["topological_points"] = rep.topological.size();
  j["spectral_points"] = rep.spectral.size();
  j["spectral_is_chain"] = rep.spectral_is_chain;
  j["spectral"] = space_json(rep.spectral);
  Json merges = Json::array();
  for (const MergeRecord& m : rep.merges) {
    Json e;
    e["class"] = m.class_label;
    e["merged_into"] = m.merged_into;
    e["certificate"] = m.certificate_ref;
    e["assumed"] = m.assumed;
    merges.push_back(e);
  }
  j["merges"] = merges;
  return j;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace morava::io
