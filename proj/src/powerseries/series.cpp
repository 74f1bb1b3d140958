#include "morava/powerseries/series.hpp"

#include <algorithm>

#include "morava/error.hpp"
#include "morava/kernels/modarith.hpp"

namespace morava {

using kernels::active_kernels;
using u64 = std::uint64_t;

TruncatedSeries::TruncatedSeries(const QuadraticModulus& mod, int precision, int truncation)
    : mod_(mod), precision_(precision), pn_(checked_power(mod.p, precision)) {
  if (precision < 1) throw StructuralError("precision must be at least 1");
  if (truncation < 1) throw StructuralError("truncation must be at least 1");
  re_.assign(truncation, 0);
  im_.assign(truncation, 0);
}

TruncatedSeries TruncatedSeries::from_coeffs(const QuadraticModulus& mod, int precision,
                                             int truncation, const std::vector<WittElem>& coeffs) {
  int n = precision;
  for (const WittElem& c : coeffs) {
    if (!(c.modulus() == mod)) throw StructuralError("series coefficient ring mismatch");
    n = std::min(n, c.precision());
  }
  TruncatedSeries s(mod, n, truncation);
  const std::size_t k = std::min<std::size_t>(coeffs.size(), truncation);
  for (std::size_t i = 0; i < k; ++i) {
    s.re_[i] = coeffs[i].c0().residue() % s.pn_;
    s.im_[i] = coeffs[i].c1().residue() % s.pn_;
  }
  return s;
}

TruncatedSeries TruncatedSeries::constant(const WittElem& c, int truncation) {
  return from_coeffs(c.modulus(), c.precision(), truncation, {c});
}

TruncatedSeries TruncatedSeries::monomial(const WittElem& c, int degree, int truncation) {
  TruncatedSeries s(c.modulus(), c.precision(), truncation);
  if (degree < truncation) {
    s.re_[degree] = c.c0().residue();
    s.im_[degree] = c.c1().residue();
  }
  return s;
}

WittElem TruncatedSeries::coeff(int i) const {
  if (i < 0 || i >= truncation()) return WittElem(mod_, precision_, 0, 0);
  return WittElem(mod_, precision_, re_[i], im_[i]);
}

std::vector<WittElem> TruncatedSeries::coeffs() const {
  std::vector<WittElem> out;
  out.reserve(re_.size());
  for (int i = 0; i < truncation(); ++i) out.push_back(coeff(i));
  return out;
}

bool TruncatedSeries::is_zero() const noexcept {
  return std::all_of(re_.begin(), re_.end(), [](u64 v) { return v == 0; }) &&
         std::all_of(im_.begin(), im_.end(), [](u64 v) { return v == 0; });
}

int TruncatedSeries::valuation() const noexcept {
  int v = precision_;
  for (int i = 0; i < truncation(); ++i) {
    v = std::min(v, PadicInt(mod_.p, precision_, re_[i]).valuation());
    v = std::min(v, PadicInt(mod_.p, precision_, im_[i]).valuation());
  }
  return v;
}

int TruncatedSeries::weierstrass_degree() const {
  if (is_zero()) return -1;
  const int n = valuation();
  for (int i = 0; i < truncation(); ++i) {
    if (coeff(i).valuation() == n) return i;
  }
  return -1;  // unreachable: some coefficient attains the minimum
}

TruncatedSeries TruncatedSeries::reduced(int precision) const {
  if (precision > precision_) throw StructuralError("cannot raise series precision by reduction");
  TruncatedSeries s(mod_, precision, truncation());
  for (int i = 0; i < truncation(); ++i) {
    s.re_[i] = re_[i] % s.pn_;
    s.im_[i] = im_[i] % s.pn_;
  }
  return s;
}

TruncatedSeries TruncatedSeries::truncated(int truncation) const {
  TruncatedSeries s(mod_, precision_, truncation);
  const int k = std::min(truncation, this->truncation());
  std::copy_n(re_.begin(), k, s.re_.begin());
  std::copy_n(im_.begin(), k, s.im_.begin());
  return s;
}

TruncatedSeries TruncatedSeries::div_p_power(int k) const {
  if (k == 0) return *this;
  std::vector<WittElem> cs;
  cs.reserve(re_.size());
  for (int i = 0; i < truncation(); ++i) cs.push_back(coeff(i).div_p_power(k));
  return from_coeffs(mod_, precision_ - k, truncation(), cs);
}

TruncatedSeries TruncatedSeries::mul_p_power(int k) const {
  if (k == 0) return *this;
  TruncatedSeries s(mod_, precision_ + k, truncation());
  const u64 pk = checked_power(mod_.p, k);
  for (int i = 0; i < truncation(); ++i) {
    s.re_[i] = re_[i] * pk;
    s.im_[i] = im_[i] * pk;
  }
  return s;
}

TruncatedSeries TruncatedSeries::shifted_down(int k) const {
  TruncatedSeries s(mod_, precision_, truncation());
  for (int i = k; i < truncation(); ++i) {
    s.re_[i - k] = re_[i];
    s.im_[i - k] = im_[i];
  }
  return s;
}

namespace {

void check_compatible(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!(f.modulus() == g.modulus())) throw StructuralError("series over different rings");
  if (f.truncation() != g.truncation()) {
    throw StructuralError("series truncations differ (" + std::to_string(f.truncation()) + " vs " +
                          std::to_string(g.truncation()) + ")");
  }
}

// Both operands at the common (minimum) precision.
std::pair<TruncatedSeries, TruncatedSeries> align(const TruncatedSeries& f, const TruncatedSeries& g) {
  check_compatible(f, g);
  const int n = std::min(f.precision(), g.precision());
  return {f.reduced(n), g.reduced(n)};
}

}  // namespace

TruncatedSeries TruncatedSeries::scaled(const WittElem& c) const {
  if (!(c.modulus() == mod_)) throw StructuralError("scalar from a different ring");
  const int n = std::min(precision_, c.precision());
  const TruncatedSeries f = reduced(n);
  TruncatedSeries out(mod_, n, truncation());
  const auto& k = active_kernels();
  const u64 m = out.pn_;
  const u64 c0 = c.c0().residue() % m, c1 = c.c1().residue() % m;
  // (r + i w)(c0 + c1 w) = (r c0 + b i c1) + (r c1 + i c0 + a i c1) w
  std::vector<u64> t(truncation()), ic1(truncation());
  k.scale_mod(f.re_, c0, out.re_, m);
  k.scale_mod(f.im_, c1, ic1, m);
  k.scale_mod(ic1, mod_.b % m, t, m);
  k.add_mod(out.re_, t, out.re_, m);
  k.scale_mod(f.re_, c1, out.im_, m);
  k.scale_mod(f.im_, c0, t, m);
  k.add_mod(out.im_, t, out.im_, m);
  k.scale_mod(ic1, mod_.a % m, t, m);
  k.add_mod(out.im_, t, out.im_, m);
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries zero(mod_, precision_, truncation());
  return zero - *this;
}

TruncatedSeries operator+(const TruncatedSeries& f, const TruncatedSeries& g) {
  auto [a, b] = align(f, g);
  const auto& k = active_kernels();
  k.add_mod(a.re_, b.re_, a.re_, a.pn_);
  k.add_mod(a.im_, b.im_, a.im_, a.pn_);
  return a;
}

TruncatedSeries operator-(const TruncatedSeries& f, const TruncatedSeries& g) {
  auto [a, b] = align(f, g);
  const auto& k = active_kernels();
  k.sub_mod(a.re_, b.re_, a.re_, a.pn_);
  k.sub_mod(a.im_, b.im_, a.im_, a.pn_);
  return a;
}

TruncatedSeries operator*(const TruncatedSeries& f, const TruncatedSeries& g) {
  auto [a, b] = align(f, g);
  const auto& k = active_kernels();
  const u64 m = a.pn_;
  const std::size_t len = a.re_.size();
  // Four residue convolutions, then w^2 = a w + b.
  std::vector<u64> rr(len), ri(len), ir(len), ii(len), t(len);
  k.convolve_mod(a.re_, b.re_, rr, m);
  k.convolve_mod(a.re_, b.im_, ri, m);
  k.convolve_mod(a.im_, b.re_, ir, m);
  k.convolve_mod(a.im_, b.im_, ii, m);
  TruncatedSeries out(a.mod_, a.precision_, static_cast<int>(len));
  k.scale_mod(ii, a.mod_.b % m, t, m);
  k.add_mod(rr, t, out.re_, m);
  k.add_mod(ri, ir, out.im_, m);
  k.scale_mod(ii, a.mod_.a % m, t, m);
  k.add_mod(out.im_, t, out.im_, m);
  return out;
}

bool congruent(const TruncatedSeries& f, const TruncatedSeries& g) {
  if (!(f.mod_ == g.mod_) || f.truncation() != g.truncation()) return false;
  const int n = std::min(f.precision_, g.precision_);
  return f.reduced(n) == g.reduced(n);
}

TruncatedSeries TruncatedSeries::inverse() const {
  const WittElem c0 = coeff(0);
  if (!c0.is_unit()) throw NotAUnit(c0.valuation(), "series constant term is not a unit");
  // Newton iteration y <- y (2 - f y); the error 1 - f y is exact in p and
  // its X-adic order doubles each step.
  TruncatedSeries y = constant(c0.inverse(), truncation());
  const TruncatedSeries two = constant(WittElem(mod_, precision_, 2, 0), truncation());
  for (int correct = 1; correct < truncation(); correct *= 2) y = y * (two - *this * y);
  return y;
}

std::string TruncatedSeries::to_string() const {
  std::string s;
  for (int i = 0; i < truncation(); ++i) {
    if (re_[i] == 0 && im_[i] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "(" + std::to_string(re_[i]) + "+" + std::to_string(im_[i]) + "w)X^" + std::to_string(i);
  }
  if (s.empty()) s = "0";
  return s + " mod (" + std::to_string(mod_.p) + "^" + std::to_string(precision_) + ", X^" +
         std::to_string(truncation()) + ")";
}

}  // namespace morava
