#pragma once

#include <string>
#include <vector>

#include "morava/error.hpp"
#include "morava/padic/extension.hpp"
#include "morava/powerseries/series.hpp"

namespace morava {

struct Rational {
  long num = 0;
  long den = 1;

  static Rational make(long num, long den);
  friend bool operator==(const Rational&, const Rational&) = default;
  std::string to_string() const;
};

struct Slope {
  // Valuation of the corresponding roots: minus the segment's slope.
  Rational value;
  // Horizontal length of the segment (number of roots of that valuation).
  int multiplicity = 0;
  friend bool operator==(const Slope&, const Slope&) = default;
};

struct NewtonPolygon {
  struct Vertex {
    int degree;
    int valuation;
    friend bool operator==(const Vertex&, const Vertex&) = default;
  };
  // Lower convex hull of {(i, v_p(c_i))}, strictly increasing in degree,
  // without collinear interior points.
  std::vector<Vertex> vertices;
  // Root valuations in nondecreasing order with multiplicities.
  std::vector<Slope> slopes;

  // Monic, one segment from (0, 1) to (d, 0), d >= 1.
  bool is_eisenstein() const;
  std::string to_string() const;
};

// Lower convex hull of the valuation points of a nonzero polynomial
// (coefficients in increasing degree).
NewtonPolygon newton_polygon(const std::vector<WittElem>& poly);

class UnsupportedSlope : public Error {
 public:
  explicit UnsupportedSlope(NewtonPolygon polygon)
      : Error("unsupported distinguished polynomial shape: " + polygon.to_string() +
              " (only degree 1 and Eisenstein are supported)"),
        polygon_(std::move(polygon)) {}
  const NewtonPolygon& polygon() const noexcept { return polygon_; }

 private:
  NewtonPolygon polygon_;
};

struct AdjoinedRoot {
  ExtRingPtr ring;
  ExtElem mu;
};

// A root of the distinguished polynomial P (degree 1, or Eisenstein), in
// W(F_{p^2})[x]/(P).
AdjoinedRoot adjoin_root(const std::vector<WittElem>& poly);

struct Evaluation {
  ExtElem value;
  // The value is exact modulo the uniformizer to this scaled level
  // (min(d N, D * scaled v(mu))).
  int guaranteed_scaled;
};

// Horner evaluation of the truncation of F at mu, v(mu) > 0. The dropped
// tail has valuation >= D v(mu), which bounds the guaranteed precision.
Evaluation ps_eval(const TruncatedSeries& F, const ExtElem& mu);

}  // namespace morava
