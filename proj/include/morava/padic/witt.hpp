#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "morava/padic/padic_int.hpp"

namespace morava {

// The defining polynomial m(w) = w^2 - a*w - b of W(F_{p^2}) = Z_p[w]/(m).
// Irreducibility modulo p is checked on construction.
struct QuadraticModulus {
  std::uint64_t p;
  std::uint64_t a;
  std::uint64_t b;

  static QuadraticModulus make(std::uint64_t p, std::uint64_t a, std::uint64_t b);

  // Lexicographically smallest (a, b) with 0 <= a, b < p such that
  // w^2 - a*w - b is irreducible mod p.
  static QuadraticModulus canonical(std::uint64_t p);

  friend bool operator==(const QuadraticModulus&, const QuadraticModulus&) = default;
};

bool irreducible_mod_p(std::uint64_t p, std::uint64_t a, std::uint64_t b);

// An element c0 + c1*w of W(F_{p^2}) known modulo p^N. Both components
// always carry the same precision. At precision 1 this is F_{p^2}.
class WittElem {
 public:
  WittElem(const QuadraticModulus& mod, int precision, std::uint64_t c0 = 0, std::uint64_t c1 = 0);
  WittElem(const QuadraticModulus& mod, const PadicInt& c0, const PadicInt& c1);

  static WittElem from_signed(const QuadraticModulus& mod, int precision, std::int64_t c0,
                              std::int64_t c1 = 0);
  static WittElem omega(const QuadraticModulus& mod, int precision) {
    return WittElem(mod, precision, 0, 1);
  }

  const QuadraticModulus& modulus() const noexcept { return mod_; }
  std::uint64_t prime() const noexcept { return mod_.p; }
  int precision() const noexcept { return c0_.precision(); }
  const PadicInt& c0() const noexcept { return c0_; }
  const PadicInt& c1() const noexcept { return c1_; }

  bool is_zero() const noexcept { return c0_.is_zero() && c1_.is_zero(); }
  // Units are exactly the elements with nonzero reduction in F_{p^2}.
  bool is_unit() const noexcept { return c0_.is_unit() || c1_.is_unit(); }
  // True when the element lies in Z_p (w-component zero).
  bool in_base() const noexcept { return c1_.is_zero(); }

  // min(v_p(c0), v_p(c1)); equals precision() for zero. This is the
  // valuation of the element since W(F_{p^2}) is unramified over Z_p.
  int valuation() const noexcept;

  WittElem reduced(int precision) const;
  WittElem residue() const { return reduced(1); }

  // x * sigma(x), an element of Z_p.
  PadicInt norm() const;
  WittElem inverse() const;  // NotAUnit for non-units
  WittElem pow(std::uint64_t e) const;
  WittElem div_p_power(int k) const;
  WittElem mul_p_power(int k) const;
  WittElem scaled(const PadicInt& s) const;

  WittElem operator-() const;
  friend WittElem operator+(const WittElem& x, const WittElem& y);
  friend WittElem operator-(const WittElem& x, const WittElem& y);
  friend WittElem operator*(const WittElem& x, const WittElem& y);

  friend bool operator==(const WittElem& x, const WittElem& y) = default;
  // Equal modulo p^min(Nx, Ny).
  friend bool congruent(const WittElem& x, const WittElem& y);

  std::string to_string() const;

 private:
  QuadraticModulus mod_;
  PadicInt c0_;
  PadicInt c1_;
};

std::ostream& operator<<(std::ostream& os, const WittElem& x);

// The Galois automorphism of W(F_{p^2}) over Z_p, reducing to x -> x^p.
// The image of w is the second root of m lifted from the residue w^p.
WittElem frobenius(const WittElem& x);

// The image sigma(w), computed by Hensel lifting the root of m that reduces
// to w^p mod p. Exposed for tests; frobenius() uses it.
WittElem frobenius_of_omega(const QuadraticModulus& mod, int precision);

// The multiplicative lift of a residue in F_{p^2} (a WittElem of any
// precision; only its reduction is used): the unique t = a mod p with
// t^{p^2} = t, returned at the requested precision.
WittElem teichmueller(const WittElem& residue, int precision);

}  // namespace morava
