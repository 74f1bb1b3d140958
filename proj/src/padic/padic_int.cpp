#include "morava/padic/padic_int.hpp"


#include <array>
#include <ostream>
#include <vector>

#include "morava/error.hpp"
#include "morava/kernels/modarith.hpp"

namespace morava {

using kernels::mul_mod;

std::uint64_t checked_power(std::uint64_t p, int n) {
  if (p < 2) throw StructuralError("prime must be at least 2");
  if (n < 0) throw StructuralError("negative exponent");
  thread_local std::uint64_t cached_prime = 0;
  thread_local std::array<std::uint64_t, 64> powers{};
  thread_local int top = 0;
  if (p != cached_prime) {
    powers[0] = 1;
    top = 0;
    while (powers[top] <= kMaxModulus / p) {
      powers[top + 1] = powers[top] * p;
      ++top;
    }
    cached_prime = p;
  }
  if (n > top) {
    throw StructuralError("p^" + std::to_string(n) + " exceeds the 62-bit residue range (p=" + std::to_string(p) + ")");
  }
  return powers[n];
}

int max_precision(std::uint64_t p) {
  int n = 0;
  std::uint64_t r = 1;
  while (r <= kMaxModulus / p) {
    r *= p;
    ++n;
  }
  return n;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PadicInt::PadicInt(std::uint64_t p, int precision, std::uint64_t residue)
    : p_(p), precision_(precision), modulus_(0), residue_(0) {
  if (precision < 1) throw StructuralError("precision must be at least 1");
  modulus_ = checked_power(p, precision);
  residue_ = residue % modulus_;
}

PadicInt PadicInt::from_signed(std::uint64_t p, int precision, std::int64_t value) {
  PadicInt r(p, precision, 0);
  const auto m = static_cast<std::int64_t>(r.modulus_);
  std::int64_t v = value % m;
  if (v < 0) v += m;
  r.residue_ = static_cast<std::uint64_t>(v);
  return r;
}

int PadicInt::valuation() const noexcept {
  if (residue_ == 0) return precision_;
  int v = 0;
  for (std::uint64_t r = residue_; r % p_ == 0; r /= p_) ++v;
  return v;
}

PadicInt PadicInt::reduced(int precision) const {
  if (precision > precision_) throw StructuralError("cannot raise precision by reduction");
  return PadicInt(p_, precision, residue_);
}

namespace {

void check_same_prime(const PadicInt& a, const PadicInt& b) {
  if (a.prime() != b.prime()) {
    throw StructuralError("mismatched primes " + std::to_string(a.prime()) + " and " +
                          std::to_string(b.prime()));
  }
}

// Modular inverse by the extended Euclidean algorithm; gcd(a, m) must be 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
  __int128 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    const __int128 tr = old_r - q * r;
    old_r = r;
    r = tr;
    const __int128 ts = old_s - q * s;
    old_s = s;
    s = ts;
  }
  __int128 res = old_s % static_cast<__int128>(m);
  if (res < 0) res += m;
  return static_cast<std::uint64_t>(res);
}

}  // namespace

PadicInt PadicInt::inverse() const {
  if (!is_unit()) throw NotAUnit(valuation(), "p-adic integer is not invertible");
  if (modulus_ == 1) return *this;
  return PadicInt(p_, precision_, inverse_mod(residue_, modulus_));
}

PadicInt PadicInt::pow(std::uint64_t e) const {
  PadicInt result(p_, precision_, 1);
  PadicInt base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

PadicInt PadicInt::div_p_power(int k) const {
  if (k == 0) return *this;
  if (k >= precision_) throw InsufficientPrecision(k + 1, "division by p^" + std::to_string(k));
  const std::uint64_t pk = checked_power(p_, k);
  if (residue_ % pk != 0) {
    throw StructuralError("residue " + std::to_string(residue_) + " is not divisible by p^" +
                          std::to_string(k));
  }
  return PadicInt(p_, precision_ - k, residue_ / pk);
}

PadicInt PadicInt::mul_p_power(int k) const {
  const std::uint64_t pk = checked_power(p_, k);
  PadicInt r(p_, precision_ + k, 0);
  r.residue_ = residue_ * pk;  // residue < p^N, so residue * p^k < p^{N+k} <= 2^62
  return r;
}

PadicInt PadicInt::operator-() const {
  PadicInt r = *this;
  r.residue_ = residue_ == 0 ? 0 : modulus_ - residue_;
  return r;
}

PadicInt operator+(const PadicInt& a, const PadicInt& b) {
  check_same_prime(a, b);
  const PadicInt& lo = a.precision_ <= b.precision_ ? a : b;
  PadicInt r = lo;
  r.residue_ = kernels::add_mod(a.residue_ % lo.modulus_, b.residue_ % lo.modulus_, lo.modulus_);
  return r;
}

PadicInt operator-(const PadicInt& a, const PadicInt& b) {
  check_same_prime(a, b);
  const PadicInt& lo = a.precision_ <= b.precision_ ? a : b;
  PadicInt r = lo;
  r.residue_ = kernels::sub_mod(a.residue_ % lo.modulus_, b.residue_ % lo.modulus_, lo.modulus_);
  return r;
}

PadicInt operator*(const PadicInt& a, const PadicInt& b) {
  check_same_prime(a, b);
  const PadicInt& lo = a.precision_ <= b.precision_ ? a : b;
  PadicInt r = lo;
  r.residue_ = mul_mod(a.residue_ % lo.modulus_, b.residue_ % lo.modulus_, lo.modulus_);
  return r;
}

bool congruent(const PadicInt& a, const PadicInt& b) {
  if (a.p_ != b.p_) return false;
  const std::uint64_t m = a.precision_ <= b.precision_ ? a.modulus_ : b.modulus_;
  return a.residue_ % m == b.residue_ % m;
}

std::string PadicInt::to_string() const {
  return std::to_string(residue_) + " mod " + std::to_string(p_) + "^" + std::to_string(precision_);
}

std::ostream& operator<<(std::ostream& os, const PadicInt& a) { return os << a.to_string(); }

namespace {

PadicInt eval_poly(std::span<const std::int64_t> f, const PadicInt& x) {
  PadicInt acc(x.prime(), x.precision(), 0);
  for (auto it = f.rbegin(); it != f.rend(); ++it) {
    acc = acc * x + PadicInt::from_signed(x.prime(), x.precision(), *it);
  }
  return acc;
}

std::vector<std::int64_t> derivative(std::span<const std::int64_t> f) {
  std::vector<std::int64_t> d;
  for (std::size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<std::int64_t>(i));
  return d;
}

}  // namespace

PadicInt hensel_lift(std::span<const std::int64_t> f, const PadicInt& x0) {
  const std::uint64_t p = x0.prime();
  const PadicInt x_mod_p = x0.reduced(1);
  if (!eval_poly(f, x_mod_p).is_zero()) throw HenselFailure("x0 is not a root of f modulo p");
  const auto df = derivative(f);
  if (!eval_poly(df, x_mod_p).is_unit()) {
    throw HenselFailure("f'(x0) vanishes modulo p; the root is not simple");
  }
  // Newton iteration doubles the number of correct digits each step.
  PadicInt x = PadicInt(p, x0.precision(), x0.residue() % p);
  for (int correct = 1; correct < x0.precision(); correct *= 2) {
    x = x - eval_poly(f, x) * eval_poly(df, x).inverse();
  }
  x = x - eval_poly(f, x) * eval_poly(df, x).inverse();
  return x;
}

}  // namespace morava
