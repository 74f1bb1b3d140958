#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "morava/error.hpp"
#include "morava/padic/extension.hpp"
#include "morava/padic/witt.hpp"

namespace morava {

// a0 + a1*Pi in the maximal order of the quaternion division algebra over
// Q_p, where Pi^2 = p and Pi*c = sigma(c)*Pi for c in W(F_{p^2}).
struct OrderElem {
  WittElem a0;
  WittElem a1;

  static OrderElem identity(const QuadraticModulus& mod, int precision);
  static OrderElem pi(const QuadraticModulus& mod, int precision);

  int precision() const noexcept { return std::min(a0.precision(), a1.precision()); }
  // a0 sigma(a0) - p a1 sigma(a1), in Z_p.
  PadicInt norm() const;
  bool in_s2() const noexcept { return a0.is_unit(); }

  friend bool operator==(const OrderElem&, const OrderElem&) = default;
  std::string to_string() const;
};

OrderElem gamma_mul(const OrderElem& g, const OrderElem& h);
// sigma(a0)/N - (a1/N) Pi; NotInS2 unless the norm is a unit.
OrderElem gamma_inv(const OrderElem& g);

// A unit of the order; throws NotInS2 otherwise.
OrderElem make_stabilizer(WittElem a0, WittElem a1);

// Homogeneous coordinates [x : y] over an extension ring. Points built by
// the library are normalized: the coordinate of least valuation is 1 (the
// y-chart wins ties).
class ProjPoint {
 public:
  ProjPoint(ExtElem x, ExtElem y);
  // [mu : 1]
  static ProjPoint affine(const ExtElem& mu);

  const ExtElem& x() const noexcept { return x_; }
  const ExtElem& y() const noexcept { return y_; }
  const ExtRingPtr& ring() const noexcept { return x_.ring(); }
  int precision() const noexcept { return std::min(x_.precision(), y_.precision()); }
  // x/y when y is the normalizing coordinate.
  std::optional<ExtElem> affine_coordinate() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  std::string to_string() const;

 private:
  ExtElem x_;
  ExtElem y_;
};

// [a0 x + sigma(a1) y : p a1 x + sigma(a0) y], normalized.
//
// This is the action x.g written on the right: act(g h, x) equals
// act(h, act(g, x)).
ProjPoint act(const OrderElem& g, const ProjPoint& x);

// Scaled valuation of x1 y2 - x2 y1 (units of 1/d).
int separation(const ProjPoint& a, const ProjPoint& b);
// Distinct modulo pi^(k d), i.e. modulo p^k in the ring's valuation.
bool distinct_at(const ProjPoint& a, const ProjPoint& b, int modulus);

// (mu + z)/(1 + p mu z)
ExtElem curve_f_mu(const ExtElem& mu, const PadicInt& z);

struct DerivativeGap {
  // Scaled valuation (units of 1/d) of the finite-difference defect.
  int scaled;
  int degree;
  // The defect vanished at the available precision; `scaled` is then only a
  // lower bound.
  bool lower_bound;

  // Whole p-units, rounded down.
  int floor_value() const noexcept { return scaled / degree; }
};

// Valuation of (f_mu(p^k) - f_mu(0))/p^k - (1 - p mu^2). Requires
// precision >= 2k.
DerivativeGap derivative_check(const ExtElem& mu, int k);

struct CertificateEntry {
  OrderElem gamma;
  ProjPoint point;
};

struct OrbitCertificate {
  ProjPoint base;
  int modulus = 0;
  std::uint64_t seed = 0;
  int target = 0;
  std::vector<CertificateEntry> entries;

  const ExtRingPtr& ring() const noexcept { return base.ring(); }
  std::size_t size() const noexcept { return entries.size(); }
};

class BudgetExhausted : public Error {
 public:
  BudgetExhausted(OrbitCertificate partial, std::size_t tried)
      : Error("orbit budget of " + std::to_string(tried) + " candidates exhausted with " +
              std::to_string(partial.size()) + " of " + std::to_string(partial.target) +
              " distinct points"),
        partial_(std::move(partial)) {}
  const OrbitCertificate& partial() const noexcept { return partial_; }

 private:
  OrbitCertificate partial_;
};

struct OrbitOptions {
  int target = 50;
  int modulus = 6;
  std::uint64_t seed = 0;
  // Candidate group elements to try; 0 selects 4 * target + 1000.
  std::size_t budget = 0;
};

// Collects `target` images of `base` that are pairwise distinct modulo
// p^modulus. Candidates come from the curve g_z = 1 + z Pi (z = 0, 1, ...),
// with every fourth candidate drawn at random from the seed instead.
OrbitCertificate orbit_enumerate(const ProjPoint& base, const OrbitOptions& options);

struct Verdict {
  bool ok = true;
  std::string message;
};

// Replays every group element, checks that it is a unit of the order, and
// re-checks pairwise distinctness at the stated modulus.
Verdict verify_certificate(const OrbitCertificate& cert);

}  // namespace morava
