#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "morava/classifier/classifier.hpp"
#include "morava/powerseries/series.hpp"
#include "morava/powerseries/weierstrass.hpp"
#include "morava/stabilizer/stabilizer.hpp"
#include "morava/ttspaces/finite_space.hpp"
#include "morava/ttspaces/nodescent.hpp"

// Residues are written as decimal strings; readers also accept integers.
namespace morava::io {

using Json = nlohmann::ordered_json;

class FormatError : public Error {
 public:
  using Error::Error;
};

Json pair_json(const WittElem& c);
WittElem pair_from_json(const QuadraticModulus& mod, int precision, const Json& j);

// {prime, precision, coeffs: [a, b]} with optional omega: [a, b]
Json witt_json(const WittElem& c);
WittElem witt_from_json(const Json& j);

// {prime, precision, truncation, coeffs: [[a, b], ...]} with optional omega.
Json series_json(const TruncatedSeries& f);
TruncatedSeries series_from_json(const Json& j);

Json polynomial_json(const std::vector<WittElem>& poly);
Json ext_json(const ExtElem& x);
Json point_json(const ProjPoint& pt);
Json gamma_json(const OrderElem& g);
Json prepared_json(const PreparedForm& pf);
Json polygon_json(const NewtonPolygon& np);

// JSON lines: a header {prime, precision, modulus, seed, omega, ext_poly,
// base, target, count}, then one {gamma, point} object per entry.
void write_certificate(std::ostream& os, const OrbitCertificate& cert);
std::string certificate_text(const OrbitCertificate& cert);
OrbitCertificate read_certificate(std::istream& is);

// {points: [labels], covers: [[x, y], ...]}
Json space_json(const FiniteSpace& s);

Json nodescent_json(const NodescentReport& rep);

Json parse(const std::string& text);

}  // namespace morava::io
