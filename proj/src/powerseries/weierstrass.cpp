#include "morava/powerseries/weierstrass.hpp"

#include "morava/error.hpp"

namespace morava {

bool is_distinguished(const std::vector<WittElem>& poly) {
  if (poly.empty()) return false;
  const WittElem& lead = poly.back();
  if (!(lead == WittElem(lead.modulus(), lead.precision(), 1, 0))) return false;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    if (poly[i].valuation() < 1) return false;
  }
  return true;
}

TruncatedSeries polynomial_series(const std::vector<WittElem>& poly, int truncation) {
  if (poly.empty()) throw StructuralError("empty polynomial");
  if (static_cast<int>(poly.size()) > truncation) {
    throw TruncationTooCoarse(static_cast<int>(poly.size()) - 1, truncation);
  }
  return TruncatedSeries::from_coeffs(poly.front().modulus(), poly.front().precision(), truncation,
                                      poly);
}

TruncatedSeries PreparedForm::reconstruct() const {
  return (polynomial_series(P, U.truncation()) * U).mul_p_power(n);
}

PreparedForm weierstrass_prep(const TruncatedSeries& F) {
  if (F.is_zero()) throw ZeroSeries();
  const int n = F.valuation();
  const TruncatedSeries G = F.div_p_power(n);
  const int d = G.weierstrass_degree();
  const int D = F.truncation();
  if (d < 0 || d >= D) throw TruncationTooCoarse(d, D);
  const int m = G.precision();
  const QuadraticModulus& mod = F.modulus();

  // Working length: truncation error in V moves down d degrees per factor p.
  const int L = D + d * m;
  const TruncatedSeries Gw = G.truncated(L);
  TruncatedSeries A(mod, m, L);
  if (d > 0) A = Gw.truncated(d).truncated(L);
  const TruncatedSeries B = Gw.shifted_down(d);
  const TruncatedSeries B_inv = B.inverse();
  const TruncatedSeries one = TruncatedSeries::constant(WittElem(mod, m, 1, 0), L);

  TruncatedSeries V = B_inv;
  // Each pass fixes at least one more p-adic digit of V.
  bool stable = false;
  for (int iter = 0; iter <= m + 1; ++iter) {
    const TruncatedSeries Q = (A * V).shifted_down(d);
    TruncatedSeries next = B_inv * (one - Q);
    if (next == V) {
      stable = true;
      break;
    }
    V = std::move(next);
  }
  if (!stable) throw Error("Weierstrass iteration failed to converge");

  PreparedForm out{n, {}, TruncatedSeries(mod, m, D)};
  const TruncatedSeries AV = A * V;
  out.P.reserve(d + 1);
  for (int i = 0; i < d; ++i) out.P.push_back(AV.coeff(i));
  out.P.push_back(WittElem(mod, m, 1, 0));
  out.U = V.truncated(D).inverse();

  if (!(out.reconstruct() == F)) throw Error("Weierstrass residual check failed");
  return out;
}

PreparedForm weierstrass_prep(const TruncatedSeries& F, int truncation) {
  if (F.is_zero()) throw ZeroSeries();
  const int d = F.weierstrass_degree();
  if (d >= truncation) throw TruncationTooCoarse(d, truncation);
  return weierstrass_prep(F.truncated(truncation));
}

}  // namespace morava
