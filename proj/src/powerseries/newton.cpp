#include "morava/powerseries/newton.hpp"

#include <algorithm>
#include <numeric>

#include "morava/powerseries/weierstrass.hpp"

namespace morava {

Rational Rational::make(long num, long den) {
  if (den == 0) throw StructuralError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const long g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

std::string Rational::to_string() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

bool NewtonPolygon::is_eisenstein() const {
  return vertices.size() == 2 && vertices[0] == Vertex{0, 1} && vertices[1].valuation == 0 &&
         vertices[1].degree >= 1;
}

std::string NewtonPolygon::to_string() const {
  std::string s = "vertices";
  for (const Vertex& v : vertices) s += " (" + std::to_string(v.degree) + "," + std::to_string(v.valuation) + ")";
  s += "; slopes";
  for (const Slope& sl : slopes) s += " " + sl.value.to_string() + "x" + std::to_string(sl.multiplicity);
  return s;
}

NewtonPolygon newton_polygon(const std::vector<WittElem>& poly) {
  std::vector<NewtonPolygon::Vertex> pts;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    if (!poly[i].is_zero()) pts.push_back({static_cast<int>(i), poly[i].valuation()});
  }
  if (pts.empty()) throw StructuralError("Newton polygon of the zero polynomial");

  // Monotone chain; pop while the turn is not strictly convex (drops
  // collinear interior points too).
  std::vector<NewtonPolygon::Vertex> hull;
  for (const auto& q : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const long cross = static_cast<long>(b.degree - a.degree) * (q.valuation - a.valuation) -
                         static_cast<long>(b.valuation - a.valuation) * (q.degree - a.degree);
      if (cross <= 0) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(q);
  }

  NewtonPolygon np;
  np.vertices = hull;
  for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
    const int run = hull[i + 1].degree - hull[i].degree;
    np.slopes.push_back({Rational::make(hull[i].valuation - hull[i + 1].valuation, run), run});
  }
  // Segments left to right have decreasing root valuation.
  std::reverse(np.slopes.begin(), np.slopes.end());
  return np;
}

AdjoinedRoot adjoin_root(const std::vector<WittElem>& poly) {
  if (!is_distinguished(poly)) throw StructuralError("adjoin_root needs a distinguished polynomial");
  const int d = static_cast<int>(poly.size()) - 1;
  if (d < 1) throw StructuralError("constant polynomial has no root");
  if (d >= 2) {
    NewtonPolygon np = newton_polygon(poly);
    if (!np.is_eisenstein()) throw UnsupportedSlope(std::move(np));
  }
  auto ring = ExtRing::make(poly);
  ExtElem mu = ExtElem::root(ring);
  return {std::move(ring), std::move(mu)};
}

Evaluation ps_eval(const TruncatedSeries& F, const ExtElem& mu) {
  const ExtRingPtr& ring = mu.ring();
  if (!(F.modulus() == ring->modulus())) throw StructuralError("series and point over different rings");
  const int v = mu.scaled_valuation();
  if (v <= 0) throw DivergentEvaluation("evaluation point must lie in the open unit disc");
  ExtElem acc = ExtElem::zero(ring);
  for (int i = F.truncation() - 1; i >= 0; --i) acc = acc * mu + ExtElem::embed(ring, F.coeff(i));
  const int bound = std::min(acc.scaled_precision(), F.truncation() * v);
  return {std::move(acc), bound};
}

}  // namespace morava
