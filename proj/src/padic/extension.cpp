#include "morava/padic/extension.hpp"

#include <algorithm>

#include "morava/error.hpp"

namespace morava {

std::shared_ptr<const ExtRing> ExtRing::make(std::vector<WittElem> monic) {
  if (monic.size() < 2) throw StructuralError("extension polynomial must have degree >= 1");
  const WittElem& lead = monic.back();
  const WittElem one(lead.modulus(), lead.precision(), 1, 0);
  if (!(lead == one)) throw StructuralError("extension polynomial must be monic");
  const int n = lead.precision();
  for (const WittElem& c : monic) {
    if (!(c.modulus() == lead.modulus()) || c.precision() != n) {
      throw StructuralError("extension coefficients must share ring and precision");
    }
  }
  const int d = static_cast<int>(monic.size()) - 1;
  if (d >= 2) {
    for (int i = 0; i < d; ++i) {
      if (monic[i].valuation() < 1) throw StructuralError("extension polynomial is not Eisenstein");
    }
    if (monic[0].valuation() != 1) throw StructuralError("extension polynomial is not Eisenstein");
  }

  auto ring = std::shared_ptr<ExtRing>(new ExtRing(std::move(monic)));
  if (d >= 2) {
    // c_0 = -x (x^{d-1} + c_{d-1} x^{d-2} + ... + c_1), and c_0 = p e with e a
    // unit, so p / x = -(x^{d-1} + ... + c_1) / e.
    const QuadraticModulus& mod = ring->modulus();
    const WittElem& c0 = ring->poly_[0];
    const std::uint64_t p = mod.p;
    const WittElem e(mod, n, c0.c0().residue() / p, c0.c1().residue() / p);
    const WittElem neg_e_inv = -e.inverse();
    ring->p_over_x_.reserve(d);
    for (int i = 1; i <= d; ++i) ring->p_over_x_.push_back(ring->poly_[i] * neg_e_inv);
  }
  return ring;
}

std::shared_ptr<const ExtRing> ExtRing::base(const QuadraticModulus& mod, int precision) {
  return make({WittElem(mod, precision, 0, 0), WittElem(mod, precision, 1, 0)});
}

bool ExtRing::same_as(const ExtRing& other) const {
  return this == &other || poly_ == other.poly_;
}

namespace {

void check_same_ring(const ExtElem& x, const ExtElem& y) {
  if (!x.ring()->same_as(*y.ring())) throw StructuralError("mismatched extension rings");
}

}  // namespace

ExtElem::ExtElem(ExtRingPtr ring, std::vector<WittElem> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != ring_->degree()) {
    throw StructuralError("extension element needs exactly deg(P) coefficients");
  }
  int n = ring_->precision();
  for (const WittElem& c : coeffs_) {
    if (!(c.modulus() == ring_->modulus())) throw StructuralError("coefficient ring mismatch");
    n = std::min(n, c.precision());
  }
  for (WittElem& c : coeffs_) c = c.reduced(n);
}

ExtElem ExtElem::zero(const ExtRingPtr& ring) {
  return ExtElem(ring, std::vector<WittElem>(ring->degree(),
                                             WittElem(ring->modulus(), ring->precision(), 0, 0)));
}

ExtElem ExtElem::one(const ExtRingPtr& ring) {
  return embed(ring, WittElem(ring->modulus(), ring->precision(), 1, 0));
}

ExtElem ExtElem::embed(const ExtRingPtr& ring, const WittElem& c) {
  ExtElem r = zero(ring);
  r.coeffs_[0] = c.reduced(std::min(c.precision(), ring->precision()));
  return ExtElem(ring, std::move(r.coeffs_));
}

ExtElem ExtElem::root(const ExtRingPtr& ring) {
  if (ring->degree() == 1) return embed(ring, -ring->poly()[0]);
  ExtElem r = zero(ring);
  r.coeffs_[1] = WittElem(ring->modulus(), ring->precision(), 1, 0);
  return r;
}

int ExtElem::precision() const noexcept {
  int n = coeffs_.front().precision();
  for (const WittElem& c : coeffs_) n = std::min(n, c.precision());
  return n;
}

int ExtElem::scaled_valuation() const noexcept {
  const int d = degree();
  const int cap = d * precision();
  int best = cap;
  for (int i = 0; i < d; ++i) {
    const WittElem& c = coeffs_[i];
    if (c.is_zero()) continue;
    best = std::min(best, d * c.valuation() + i);
  }
  return best;
}

ExtElem ExtElem::reduced(int precision) const {
  std::vector<WittElem> cs;
  cs.reserve(coeffs_.size());
  for (const WittElem& c : coeffs_) cs.push_back(c.reduced(precision));
  return ExtElem(ring_, std::move(cs));
}

ExtElem ExtElem::operator-() const {
  std::vector<WittElem> cs;
  cs.reserve(coeffs_.size());
  for (const WittElem& c : coeffs_) cs.push_back(-c);
  return ExtElem(ring_, std::move(cs));
}

ExtElem operator+(const ExtElem& x, const ExtElem& y) {
  check_same_ring(x, y);
  std::vector<WittElem> cs;
  cs.reserve(x.coeffs_.size());
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) cs.push_back(x.coeffs_[i] + y.coeffs_[i]);
  return ExtElem(x.ring_, std::move(cs));
}

ExtElem operator-(const ExtElem& x, const ExtElem& y) {
  check_same_ring(x, y);
  std::vector<WittElem> cs;
  cs.reserve(x.coeffs_.size());
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) cs.push_back(x.coeffs_[i] - y.coeffs_[i]);
  return ExtElem(x.ring_, std::move(cs));
}

ExtElem operator*(const ExtElem& x, const ExtElem& y) {
  check_same_ring(x, y);
  const int d = x.degree();
  const int n = std::min(x.precision(), y.precision());
  const QuadraticModulus& mod = x.ring_->modulus();
  std::vector<WittElem> full(2 * d - 1, WittElem(mod, n, 0, 0));
  for (int i = 0; i < d; ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (int j = 0; j < d; ++j) full[i + j] = full[i + j] + x.coeffs_[i] * y.coeffs_[j];
  }
  // x^k = -x^{k-d} (c_0 + ... + c_{d-1} x^{d-1}) for k >= d.
  const auto& poly = x.ring_->poly();
  for (int k = 2 * d - 2; k >= d; --k) {
    const WittElem t = full[k];
    if (t.is_zero()) continue;
    for (int i = 0; i < d; ++i) full[k - d + i] = full[k - d + i] - t * poly[i];
  }
  full.erase(full.begin() + d, full.end());
  return ExtElem(x.ring_, std::move(full));
}

ExtElem operator*(const WittElem& c, const ExtElem& y) {
  std::vector<WittElem> cs;
  cs.reserve(y.coeffs_.size());
  for (const WittElem& yc : y.coeffs_) cs.push_back(c * yc);
  return ExtElem(y.ring_, std::move(cs));
}

bool operator==(const ExtElem& x, const ExtElem& y) {
  return x.ring_->same_as(*y.ring_) && x.coeffs_ == y.coeffs_;
}

bool congruent(const ExtElem& x, const ExtElem& y) {
  if (!x.ring_->same_as(*y.ring_)) return false;
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (!congruent(x.coeffs_[i], y.coeffs_[i])) return false;
  }
  return true;
}

ExtElem ExtElem::inverse() const {
  if (!is_unit()) throw NotAUnit(scaled_valuation(), "extension element is not invertible");
  // Newton iteration y <- y (2 - u y) from the inverse of the constant term;
  // the error 1 - u y starts at scaled valuation >= 1 and doubles each step.
  const WittElem two(ring_->modulus(), precision(), 2, 0);
  ExtElem y = embed(ring_, coeffs_[0].inverse());
  const int target = scaled_precision();
  for (int correct = 1; correct < target; correct *= 2) {
    y = y * (embed(ring_, two) - *this * y);
  }
  return y;
}

ExtElem ExtElem::div_uniformizer() const {
  const int d = degree();
  if (scaled_valuation() < 1) throw NotAUnit(0, "cannot divide a unit by the uniformizer");
  if (d == 1) return div_p_power(1);
  // y = y_0 + x (y_1 + ... ) with p | y_0, so y / x = (y_0 / p)(p / x) + y_1 + ...
  const WittElem y0_over_p = coeffs_[0].div_p_power(1);
  std::vector<WittElem> cs;
  cs.reserve(d);
  const auto& w = ring_->p_over_x();
  for (int i = 0; i < d; ++i) {
    WittElem c = y0_over_p * w[i];
    if (i + 1 < d) c = c + coeffs_[i + 1];
    cs.push_back(c);
  }
  return ExtElem(ring_, std::move(cs));
}

ExtElem ExtElem::div_uniformizer_power(int s) const {
  ExtElem r = *this;
  for (int i = 0; i < s; ++i) r = r.div_uniformizer();
  return r;
}

ExtElem ExtElem::div_p_power(int k) const {
  std::vector<WittElem> cs;
  cs.reserve(coeffs_.size());
  for (const WittElem& c : coeffs_) cs.push_back(c.div_p_power(k));
  return ExtElem(ring_, std::move(cs));
}

ExtElem ExtElem::pow(std::uint64_t e) const {
  ExtElem result = one(ring_).reduced(precision());
  ExtElem base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::string ExtElem::to_string() const {
  std::string s;
  for (int i = 0; i < degree(); ++i) {
    if (i > 0) s += " + ";
    s += coeffs_[i].to_string();
    if (i > 0) s += " x^" + std::to_string(i);
  }
  return s;
}

}  // namespace morava
