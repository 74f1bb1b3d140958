#pragma once

#include <vector>

#include "morava/powerseries/series.hpp"

namespace morava {

// F = p^n * P * U with P distinguished and U a unit power series.
struct PreparedForm {
  int n = 0;
  // Monic P as c_0, ..., c_{d-1}, 1 at precision N - n.
  std::vector<WittElem> P;
  // Unit series at precision N - n, same truncation as the source.
  TruncatedSeries U;

  int degree() const noexcept { return static_cast<int>(P.size()) - 1; }
  // p^n * P * U at the source precision and truncation.
  TruncatedSeries reconstruct() const;
};

// Monic with every lower coefficient divisible by p. The empty list is not
// distinguished; the constant 1 is.
bool is_distinguished(const std::vector<WittElem>& poly);

// Weierstrass preparation of F modulo (p^N, X^D).
//
// F is read as the polynomial of its D stored coefficients. After removing
// p^n, the remaining series G = A + X^d B (A of degree < d with p | A, B a
// unit) is split by iterating V <- B^{-1} (1 - (A V div X^d)), a contraction
// by p, until V stabilizes. Then P = X^d + (A V mod X^d) and U = V^{-1}.
// V is carried to length D + d (N - n) so that P agrees with the exact
// distinguished factor of the polynomial G.
//
// Throws ZeroSeries when F = 0 mod (p^N, X^D).
PreparedForm weierstrass_prep(const TruncatedSeries& F);

// Same, after cutting F down to `truncation` terms; throws
// TruncationTooCoarse when the Weierstrass degree of F (computed on all of
// its stored terms) does not fit below `truncation`.
PreparedForm weierstrass_prep(const TruncatedSeries& F, int truncation);

// P as a truncated series.
TruncatedSeries polynomial_series(const std::vector<WittElem>& poly, int truncation);

}  // namespace morava
