#include "morava/stabilizer/stabilizer.hpp"

#include <algorithm>
#include <random>

namespace morava {

namespace {

WittElem constant(const QuadraticModulus& mod, int precision, std::uint64_t c) {
  return WittElem(mod, precision, c % checked_power(mod.p, precision), 0);
}

WittElem random_witt(std::mt19937_64& rng, const QuadraticModulus& mod, int n) {
  const std::uint64_t m = checked_power(mod.p, n);
  const std::uint64_t c0 = rng() % m;
  const std::uint64_t c1 = rng() % m;
  return WittElem(mod, n, c0, c1);
}

ExtElem one_at(const ExtRingPtr& ring, int precision) {
  return ExtElem::one(ring).reduced(std::min(precision, ring->precision()));
}

}  // namespace

OrderElem OrderElem::identity(const QuadraticModulus& mod, int precision) {
  return {WittElem(mod, precision, 1, 0), WittElem(mod, precision, 0, 0)};
}

OrderElem OrderElem::pi(const QuadraticModulus& mod, int precision) {
  return {WittElem(mod, precision, 0, 0), WittElem(mod, precision, 1, 0)};
}

PadicInt OrderElem::norm() const {
  const int n = precision();
  return a0.reduced(n).norm() - a1.reduced(n).norm() * PadicInt(a0.prime(), n, a0.prime() % checked_power(a0.prime(), n));
}

std::string OrderElem::to_string() const {
  return "(" + a0.to_string() + ") + (" + a1.to_string() + ")Pi";
}

OrderElem gamma_mul(const OrderElem& g, const OrderElem& h) {
  const QuadraticModulus& mod = g.a0.modulus();
  const WittElem p = constant(mod, std::min(g.precision(), h.precision()), mod.p);
  return {g.a0 * h.a0 + p * g.a1 * frobenius(h.a1), g.a0 * h.a1 + g.a1 * frobenius(h.a0)};
}

OrderElem gamma_inv(const OrderElem& g) {
  const PadicInt n = g.norm();
  if (!n.is_unit()) throw NotInS2("reduced norm is not a unit: " + g.to_string());
  const PadicInt ninv = n.inverse();
  return {frobenius(g.a0).scaled(ninv), (-g.a1).scaled(ninv)};
}

OrderElem make_stabilizer(WittElem a0, WittElem a1) {
  if (!(a0.modulus() == a1.modulus())) throw StructuralError("stabilizer components over different rings");
  OrderElem g{std::move(a0), std::move(a1)};
  if (!g.in_s2()) throw NotInS2("a0 must be a unit: " + g.to_string());
  return g;
}

ProjPoint::ProjPoint(ExtElem x, ExtElem y) : x_(std::move(x)), y_(std::move(y)) {
  if (!x_.ring()->same_as(*y_.ring())) throw StructuralError("point coordinates over different rings");
  const int n = std::min(x_.precision(), y_.precision());
  x_ = x_.reduced(n);
  y_ = y_.reduced(n);
  if (x_.is_zero() && y_.is_zero()) throw StructuralError("[0 : 0] is not a point");
  const int s = std::min(x_.scaled_valuation(), y_.scaled_valuation());
  if (s > 0) {
    x_ = x_.div_uniformizer_power(s);
    y_ = y_.div_uniformizer_power(s);
  }
  const int m = std::min(x_.precision(), y_.precision());
  if (y_.scaled_valuation() <= x_.scaled_valuation()) {
    x_ = (x_ * y_.inverse()).reduced(m);
    y_ = one_at(y_.ring(), m);
  } else {
    y_ = (y_ * x_.inverse()).reduced(m);
    x_ = one_at(x_.ring(), m);
  }
}

ProjPoint ProjPoint::affine(const ExtElem& mu) { return ProjPoint(mu, one_at(mu.ring(), mu.precision())); }

std::optional<ExtElem> ProjPoint::affine_coordinate() const {
  if (y_.is_unit()) return x_;
  return std::nullopt;
}

std::string ProjPoint::to_string() const { return "[" + x_.to_string() + " : " + y_.to_string() + "]"; }

ProjPoint act(const OrderElem& g, const ProjPoint& pt) {
  const QuadraticModulus& mod = g.a0.modulus();
  const WittElem p = constant(mod, g.precision(), mod.p);
  const ExtElem x = g.a0 * pt.x() + frobenius(g.a1) * pt.y();
  const ExtElem y = (p * g.a1) * pt.x() + frobenius(g.a0) * pt.y();
  return ProjPoint(x, y);
}

int separation(const ProjPoint& a, const ProjPoint& b) {
  // Shared unit coordinate: the determinant is that unit times a difference.
  if (a.y() == b.y() && a.y().is_unit()) return (a.x() - b.x()).scaled_valuation();
  if (a.x() == b.x() && a.x().is_unit()) return (a.y() - b.y()).scaled_valuation();
  return (a.x() * b.y() - b.x() * a.y()).scaled_valuation();
}

bool distinct_at(const ProjPoint& a, const ProjPoint& b, int modulus) {
  return separation(a, b) < modulus * a.ring()->degree();
}

ExtElem curve_f_mu(const ExtElem& mu, const PadicInt& z) {
  const QuadraticModulus& mod = mu.ring()->modulus();
  const WittElem zw(mod, z, PadicInt(mod.p, z.precision(), 0));
  const WittElem p = constant(mod, z.precision(), mod.p);
  const ExtElem num = mu + ExtElem::embed(mu.ring(), zw);
  const ExtElem den = one_at(mu.ring(), mu.precision()) + (p * zw) * mu;
  if (!den.is_unit()) throw DenominatorNotUnit("1 + p mu z is not a unit for " + mu.to_string());
  return num * den.inverse();
}

DerivativeGap derivative_check(const ExtElem& mu, int k) {
  if (k < 1) throw StructuralError("derivative_check needs k >= 1");
  if (!mu.is_zero() && mu.scaled_valuation() <= 0) {
    throw DivergentEvaluation("curve point must lie in the open unit disc");
  }
  const int n = mu.precision();
  if (n < 2 * k) throw InsufficientPrecision(2 * k, "finite difference at p^" + std::to_string(k));
  const QuadraticModulus& mod = mu.ring()->modulus();
  const PadicInt h(mod.p, n, checked_power(mod.p, k));
  const ExtElem quotient = (curve_f_mu(mu, h) - curve_f_mu(mu, PadicInt(mod.p, n, 0))).div_p_power(k);
  const WittElem p = constant(mod, n, mod.p);
  const ExtElem slope = one_at(mu.ring(), n) - p * (mu * mu);
  const ExtElem defect = quotient - slope;
  return {defect.scaled_valuation(), mu.degree(), defect.is_zero()};
}

OrbitCertificate orbit_enumerate(const ProjPoint& base, const OrbitOptions& options) {
  if (options.modulus < 1) throw StructuralError("distinctness modulus must be positive");
  const int n = base.precision();
  if (n < options.modulus + 2) {
    throw InsufficientPrecision(options.modulus + 2, "orbit distinctness modulo p^" + std::to_string(options.modulus));
  }
  const QuadraticModulus& mod = base.ring()->modulus();
  OrbitCertificate cert{base, options.modulus, options.seed, options.target, {}};
  if (options.target <= 0) return cert;
  const std::size_t budget =
      options.budget != 0 ? options.budget : 4 * static_cast<std::size_t>(options.target) + 1000;

  std::mt19937_64 rng(options.seed);
  std::uint64_t z = 0;
  for (std::size_t i = 0; i < budget; ++i) {
    OrderElem g = OrderElem::identity(mod, n);
    if (i % 4 == 3) {
      WittElem a0 = random_witt(rng, mod, n);
      while (!a0.is_unit()) a0 = random_witt(rng, mod, n);
      g = {a0, random_witt(rng, mod, n)};
    } else {
      g.a1 = constant(mod, n, z++);
    }
    ProjPoint image = act(g, base);
    const bool fresh = std::all_of(cert.entries.begin(), cert.entries.end(), [&](const CertificateEntry& e) {
      return distinct_at(e.point, image, options.modulus);
    });
    if (!fresh) continue;
    cert.entries.push_back({std::move(g), std::move(image)});
    if (static_cast<int>(cert.entries.size()) >= options.target) return cert;
  }
  throw BudgetExhausted(std::move(cert), budget);
}

Verdict verify_certificate(const OrbitCertificate& cert) {
  if (cert.modulus < 1) return {false, "certificate modulus must be positive"};
  if (cert.base.precision() < cert.modulus + 2) {
    return {false, "base point precision " + std::to_string(cert.base.precision()) +
                       " is too low for modulus " + std::to_string(cert.modulus)};
  }
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    const CertificateEntry& e = cert.entries[i];
    if (!e.point.ring()->same_as(*cert.ring())) return {false, "entry " + std::to_string(i) + " lives over another ring"};
    if (!e.gamma.in_s2() || !e.gamma.norm().is_unit()) {
      return {false, "entry " + std::to_string(i) + ": group element is not in S2"};
    }
    const ProjPoint replay = act(e.gamma, cert.base);
    if (!congruent(replay.x(), e.point.x()) || !congruent(replay.y(), e.point.y())) {
      return {false, "entry " + std::to_string(i) + ": replayed image differs from the recorded point"};
    }
  }
  for (std::size_t i = 0; i < cert.entries.size(); ++i) {
    for (std::size_t j = i + 1; j < cert.entries.size(); ++j) {
      if (!distinct_at(cert.entries[i].point, cert.entries[j].point, cert.modulus)) {
        return {false, "entries " + std::to_string(i) + " and " + std::to_string(j) +
                           " coincide modulo p^" + std::to_string(cert.modulus)};
      }
    }
  }
  return {true, "ok: " + std::to_string(cert.entries.size()) + " points pairwise distinct modulo p^" +
                    std::to_string(cert.modulus)};
}

}  // namespace morava
