#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "morava/padic/witt.hpp"

namespace morava {

// F = sum_{i<D} f_i X^i over W(F_{p^2}), exact modulo (p^N, X^D).
//
// Coefficients are stored as two residue arrays (the 1 and w components) so
// that sums and products run through the residue-vector kernels.
class TruncatedSeries {
 public:
  TruncatedSeries(const QuadraticModulus& mod, int precision, int truncation);

  // Pads with zeros or drops terms to reach `truncation` coefficients. All
  // coefficients are reduced to the minimum of their precisions and
  // `precision`.
  static TruncatedSeries from_coeffs(const QuadraticModulus& mod, int precision, int truncation,
                                     const std::vector<WittElem>& coeffs);
  static TruncatedSeries constant(const WittElem& c, int truncation);
  static TruncatedSeries monomial(const WittElem& c, int degree, int truncation);

  const QuadraticModulus& modulus() const noexcept { return mod_; }
  std::uint64_t prime() const noexcept { return mod_.p; }
  int precision() const noexcept { return precision_; }
  int truncation() const noexcept { return static_cast<int>(re_.size()); }

  WittElem coeff(int i) const;
  std::vector<WittElem> coeffs() const;

  bool is_zero() const noexcept;
  // min_i v_p(f_i); precision() for the zero series.
  int valuation() const noexcept;
  // Index of the first unit coefficient of F / p^valuation; -1 for zero.
  int weierstrass_degree() const;

  TruncatedSeries reduced(int precision) const;
  TruncatedSeries truncated(int truncation) const;
  TruncatedSeries div_p_power(int k) const;
  TruncatedSeries mul_p_power(int k) const;
  // Drops the first k coefficients: (F - F mod X^k) / X^k.
  TruncatedSeries shifted_down(int k) const;
  TruncatedSeries scaled(const WittElem& c) const;
  // Multiplicative inverse modulo X^D; NotAUnit unless f_0 is a unit.
  TruncatedSeries inverse() const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g);
  friend TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g);

  friend bool operator==(const TruncatedSeries& f, const TruncatedSeries& g) = default;
  // Equal modulo (p^min(N), X^D); truncations must match.
  friend bool congruent(const TruncatedSeries& f, const TruncatedSeries& g);

  std::string to_string() const;

 private:
  QuadraticModulus mod_;
  int precision_;
  std::uint64_t pn_;
  std::vector<std::uint64_t> re_;
  std::vector<std::uint64_t> im_;
};

}  // namespace morava
