#pragma once

#include <memory>
#include <string>
#include <vector>

#include "morava/padic/witt.hpp"

namespace morava {

// W(F_{p^2})[x]/(P) for a monic P that is either of degree 1 or Eisenstein.
// In the Eisenstein case the class of x is a uniformizer and valuations are
// multiples of 1/d; in the degree-1 case the ring is W(F_{p^2}) itself and
// the uniformizer is p.
//
// Valuations on this ring are reported "scaled": an integer s meaning s/d.
class ExtRing {
 public:
  // `monic` lists c_0 .. c_{d-1}, 1 (increasing degree). The coefficients are
  // taken as exact representatives at the working precision.
  static std::shared_ptr<const ExtRing> make(std::vector<WittElem> monic);

  // The trivial extension W(F_{p^2}) = W[x]/(x - 0).
  static std::shared_ptr<const ExtRing> base(const QuadraticModulus& mod, int precision);

  int degree() const noexcept { return static_cast<int>(poly_.size()) - 1; }
  int precision() const noexcept { return poly_.front().precision(); }
  const QuadraticModulus& modulus() const noexcept { return poly_.front().modulus(); }
  std::uint64_t prime() const noexcept { return modulus().p; }
  const std::vector<WittElem>& poly() const noexcept { return poly_; }

  // For Eisenstein P: p / x as a ring element, used to divide by the
  // uniformizer. Unused for degree 1.
  const std::vector<WittElem>& p_over_x() const noexcept { return p_over_x_; }

  bool same_as(const ExtRing& other) const;

 private:
  explicit ExtRing(std::vector<WittElem> poly) : poly_(std::move(poly)) {}
  std::vector<WittElem> poly_;
  std::vector<WittElem> p_over_x_;
};

using ExtRingPtr = std::shared_ptr<const ExtRing>;

class ExtElem {
 public:
  ExtElem(ExtRingPtr ring, std::vector<WittElem> coeffs);

  static ExtElem zero(const ExtRingPtr& ring);
  static ExtElem one(const ExtRingPtr& ring);
  static ExtElem embed(const ExtRingPtr& ring, const WittElem& c);
  // The class of x, i.e. the adjoined root of P.
  static ExtElem root(const ExtRingPtr& ring);

  const ExtRingPtr& ring() const noexcept { return ring_; }
  const std::vector<WittElem>& coeffs() const noexcept { return coeffs_; }
  int degree() const noexcept { return ring_->degree(); }
  int precision() const noexcept;

  // Scaled valuation min_i (d * v_p(c_i) + i), capped at d * precision()
  // (the level at which the element is no longer known).
  int scaled_valuation() const noexcept;
  int scaled_precision() const noexcept { return degree() * precision(); }

  bool is_zero() const noexcept { return scaled_valuation() >= scaled_precision(); }
  bool is_unit() const noexcept { return scaled_valuation() == 0; }

  ExtElem reduced(int precision) const;
  ExtElem inverse() const;                // NotAUnit for non-units
  ExtElem div_uniformizer() const;        // requires valuation >= 1/d; loses one p-level
  ExtElem div_p_power(int k) const;       // coefficient-wise exact division
  ExtElem div_uniformizer_power(int s) const;
  ExtElem pow(std::uint64_t e) const;

  ExtElem operator-() const;
  friend ExtElem operator+(const ExtElem& x, const ExtElem& y);
  friend ExtElem operator-(const ExtElem& x, const ExtElem& y);
  friend ExtElem operator*(const ExtElem& x, const ExtElem& y);
  friend ExtElem operator*(const WittElem& c, const ExtElem& y);

  // Same ring (by value), precision and residues.
  friend bool operator==(const ExtElem& x, const ExtElem& y);
  friend bool congruent(const ExtElem& x, const ExtElem& y);

  std::string to_string() const;

 private:
  ExtRingPtr ring_;
  std::vector<WittElem> coeffs_;
};

}  // namespace morava
