#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace morava {

// Largest modulus p^N we allow. Products of two residues then fit in 128 bits
// and sums of two residues fit in 63 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 62;

// Returns p^n, or throws StructuralError when it would exceed kMaxModulus.
std::uint64_t checked_power(std::uint64_t p, int n);

// Largest N with p^N <= kMaxModulus.
int max_precision(std::uint64_t p);

bool is_prime(std::uint64_t n);

// An element of Z_p known modulo p^N (absolute precision N).
//
// Precision rules:
//   * add/sub/mul: result precision is the minimum of the operand precisions.
//   * inverse of a unit: precision is preserved.
//   * exact division by p^k: precision drops by k.
//   * multiplication by p^k (mul_p_power): precision rises by k, since
//     p^k * (x mod p^M) is determined mod p^{M+k}.
// Nothing ever divides by a non-unit silently.
class PadicInt {
 public:
  PadicInt(std::uint64_t p, int precision, std::uint64_t residue = 0);

  // Reduces an arbitrary signed integer into [0, p^N).
  static PadicInt from_signed(std::uint64_t p, int precision, std::int64_t value);

  std::uint64_t prime() const noexcept { return p_; }
  int precision() const noexcept { return precision_; }
  std::uint64_t modulus() const noexcept { return modulus_; }
  std::uint64_t residue() const noexcept { return residue_; }

  bool is_zero() const noexcept { return residue_ == 0; }
  bool is_unit() const noexcept { return residue_ % p_ != 0; }

  // v_p of the residue; equals precision() for zero ("at least N").
  int valuation() const noexcept;

  // The same element seen at a lower precision.
  PadicInt reduced(int precision) const;

  PadicInt inverse() const;  // NotAUnit for non-units
  PadicInt pow(std::uint64_t e) const;
  PadicInt div_p_power(int k) const;  // StructuralError unless p^k | residue
  PadicInt mul_p_power(int k) const;

  PadicInt operator-() const;
  friend PadicInt operator+(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator-(const PadicInt& a, const PadicInt& b);
  friend PadicInt operator*(const PadicInt& a, const PadicInt& b);

  // Exact representation equality: same prime, precision and residue.
  friend bool operator==(const PadicInt& a, const PadicInt& b) = default;

  // Equal modulo p^min(Na, Nb).
  friend bool congruent(const PadicInt& a, const PadicInt& b);

  std::string to_string() const;

 private:
  std::uint64_t p_;
  int precision_;
  std::uint64_t modulus_;
  std::uint64_t residue_;
};

std::ostream& operator<<(std::ostream& os, const PadicInt& a);

// Simple-root Hensel lifting of an integer polynomial (coefficients in
// increasing degree). x0 must satisfy f(x0) = 0 mod p with f'(x0) a unit;
// the returned root is congruent to x0 mod p and solves f = 0 mod p^N,
// where N is the precision of x0.
PadicInt hensel_lift(std::span<const std::int64_t> f, const PadicInt& x0);

}  // namespace morava
