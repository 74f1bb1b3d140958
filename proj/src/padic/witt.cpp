#include "morava/padic/witt.hpp"

#include <algorithm>
#include <ostream>

#include "morava/error.hpp"

namespace morava {

bool irreducible_mod_p(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  // A quadratic is irreducible over F_p iff it has no root there.
  for (std::uint64_t x = 0; x < p; ++x) {
    const std::uint64_t value = (x * x % p + (p - a % p) * x % p + (p - b % p)) % p;
    if (value == 0) return false;
  }
  return true;
}

QuadraticModulus QuadraticModulus::make(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
  if (!is_prime(p)) throw StructuralError(std::to_string(p) + " is not prime");
  a %= p;
  b %= p;
  if (!irreducible_mod_p(p, a, b)) {
    throw StructuralError("w^2 - " + std::to_string(a) + "w - " + std::to_string(b) +
                          " is reducible mod " + std::to_string(p));
  }
  return QuadraticModulus{p, a, b};
}

QuadraticModulus QuadraticModulus::canonical(std::uint64_t p) {
  if (!is_prime(p)) throw StructuralError(std::to_string(p) + " is not prime");
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      if (irreducible_mod_p(p, a, b)) return QuadraticModulus{p, a, b};
    }
  }
  throw StructuralError("no irreducible quadratic found");  // unreachable for primes
}

WittElem::WittElem(const QuadraticModulus& mod, int precision, std::uint64_t c0, std::uint64_t c1)
    : mod_(mod), c0_(mod.p, precision, c0), c1_(mod.p, precision, c1) {}

WittElem::WittElem(const QuadraticModulus& mod, const PadicInt& c0, const PadicInt& c1)
    : mod_(mod), c0_(c0), c1_(c1) {
  if (c0.prime() != mod.p || c1.prime() != mod.p) throw StructuralError("component prime mismatch");
  const int n = std::min(c0.precision(), c1.precision());
  c0_ = c0.reduced(n);
  c1_ = c1.reduced(n);
}

WittElem WittElem::from_signed(const QuadraticModulus& mod, int precision, std::int64_t c0,
                               std::int64_t c1) {
  return WittElem(mod, PadicInt::from_signed(mod.p, precision, c0),
                  PadicInt::from_signed(mod.p, precision, c1));
}

int WittElem::valuation() const noexcept { return std::min(c0_.valuation(), c1_.valuation()); }

WittElem WittElem::reduced(int precision) const {
  return WittElem(mod_, c0_.reduced(precision), c1_.reduced(precision));
}

namespace {

void check_same_ring(const WittElem& x, const WittElem& y) {
  if (!(x.modulus() == y.modulus())) throw StructuralError("mismatched W(F_{p^2}) moduli");
}

}  // namespace

WittElem operator+(const WittElem& x, const WittElem& y) {
  check_same_ring(x, y);
  return WittElem(x.mod_, x.c0_ + y.c0_, x.c1_ + y.c1_);
}

WittElem operator-(const WittElem& x, const WittElem& y) {
  check_same_ring(x, y);
  return WittElem(x.mod_, x.c0_ - y.c0_, x.c1_ - y.c1_);
}

WittElem operator*(const WittElem& x, const WittElem& y) {
  check_same_ring(x, y);
  // (x0 + x1 w)(y0 + y1 w) with w^2 = a w + b.
  const int n = std::min(x.precision(), y.precision());
  const PadicInt a(x.mod_.p, n, x.mod_.a);
  const PadicInt b(x.mod_.p, n, x.mod_.b);
  const PadicInt hi = x.c1_ * y.c1_;
  return WittElem(x.mod_, x.c0_ * y.c0_ + b * hi, x.c0_ * y.c1_ + x.c1_ * y.c0_ + a * hi);
}

WittElem WittElem::operator-() const { return WittElem(mod_, -c0_, -c1_); }

WittElem WittElem::scaled(const PadicInt& s) const { return WittElem(mod_, c0_ * s, c1_ * s); }

namespace {

// c0 + c1 (a - w): the second root of m replaces w. Algebraically this is
// the Galois conjugate; it is used for norms and inverses so those never
// depend on the Hensel-lifted Frobenius below.
WittElem vieta_conjugate(const WittElem& x) {
  const PadicInt a(x.prime(), x.precision(), x.modulus().a);
  return WittElem(x.modulus(), x.c0() + a * x.c1(), -x.c1());
}

}  // namespace

PadicInt WittElem::norm() const { return (*this * vieta_conjugate(*this)).c0(); }

WittElem WittElem::inverse() const {
  if (!is_unit()) throw NotAUnit(valuation(), "Witt vector is not invertible");
  return vieta_conjugate(*this).scaled(norm().inverse());
}

WittElem WittElem::pow(std::uint64_t e) const {
  WittElem result(mod_, precision(), 1, 0);
  WittElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

WittElem WittElem::div_p_power(int k) const {
  return WittElem(mod_, c0_.div_p_power(k), c1_.div_p_power(k));
}

WittElem WittElem::mul_p_power(int k) const {
  return WittElem(mod_, c0_.mul_p_power(k), c1_.mul_p_power(k));
}

bool congruent(const WittElem& x, const WittElem& y) {
  return x.mod_ == y.mod_ && congruent(x.c0_, y.c0_) && congruent(x.c1_, y.c1_);
}

std::string WittElem::to_string() const {
  return "(" + std::to_string(c0_.residue()) + " + " + std::to_string(c1_.residue()) + "w) mod " +
         std::to_string(mod_.p) + "^" + std::to_string(precision());
}

std::ostream& operator<<(std::ostream& os, const WittElem& x) { return os << x.to_string(); }

WittElem frobenius_of_omega(const QuadraticModulus& mod, int precision) {
  // Newton iteration y <- y - m(y)/m'(y) from the residue w^p. m' = 2y - a is
  // a unit there because m is separable mod p.
  const WittElem w = WittElem::omega(mod, precision);
  const WittElem a = WittElem(mod, precision, mod.a, 0);
  const WittElem b = WittElem(mod, precision, mod.b, 0);
  const WittElem two = WittElem(mod, precision, 2, 0);
  const WittElem start = w.reduced(1).pow(mod.p);
  WittElem y(mod, precision, start.c0().residue(), start.c1().residue());
  for (int correct = 1; correct < 2 * precision; correct *= 2) {
    const WittElem m_y = y * y - a * y - b;
    y = y - m_y * (two * y - a).inverse();
  }
  return y;
}

WittElem frobenius(const WittElem& x) {
  // sigma(c0 + c1 w) = c0 + c1 sigma(w).
  const WittElem sw = frobenius_of_omega(x.modulus(), x.precision());
  return WittElem(x.modulus(), x.precision(), x.c0().residue(), 0) + sw.scaled(x.c1());
}

WittElem teichmueller(const WittElem& residue, int precision) {
  const QuadraticModulus& mod = residue.modulus();
  const std::uint64_t p = mod.p;
  WittElem t(mod, precision, residue.c0().residue() % p, residue.c1().residue() % p);
  // t <- t^{p^2} converges: each step gains one digit.
  for (int i = 0; i < precision; ++i) t = t.pow(p * p);
  return t;
}

}  // namespace morava
