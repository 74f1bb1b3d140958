#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "../support/generators.hpp"
#include "morava/error.hpp"
#include "morava/powerseries/newton.hpp"
#include "morava/stabilizer/stabilizer.hpp"

using namespace morava;
using morava::testing::Gen;

namespace {

OrderElem random_gamma(Gen& g, const QuadraticModulus& mod, int n) {
  return make_stabilizer(g.unit(mod, n), g.witt(mod, n));
}

OrderElem random_order(Gen& g, const QuadraticModulus& mod, int n) { return {g.witt(mod, n), g.witt(mod, n)}; }

// A root of a random degree-1 or Eisenstein polynomial.
AdjoinedRoot random_root(Gen& g, const QuadraticModulus& mod, int n) {
  const int d = g.between(1, 3);
  return adjoin_root(d == 1 ? g.linear_distinguished(mod, n) : g.eisenstein(mod, n, d));
}

bool congruent_points(const ProjPoint& a, const ProjPoint& b, int n) {
  return a.x().reduced(n) == b.x().reduced(n) && a.y().reduced(n) == b.y().reduced(n);
}

std::int64_t v5(__int128 x) {
  int v = 0;
  if (x == 0) return 1000;
  while (x % 5 == 0) {
    x /= 5;
    ++v;
  }
  return v;
}

std::uint64_t solve_linear(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // t with a t = b mod m, by search.
  for (std::uint64_t t = 0; t < m; ++t)
    if (static_cast<unsigned __int128>(a) * t % m == b % m) return t;
  return m;
}

}  // namespace

// --- group law -------------------------------------------------------------

TEST(Stabilizer, IdentityIsNeutral) {
  const auto mod = QuadraticModulus::canonical(5);
  Gen g(1);
  const OrderElem e = OrderElem::identity(mod, 10);
  for (int t = 0; t < 20; ++t) {
    const OrderElem x = random_gamma(g, mod, 10);
    EXPECT_EQ(gamma_mul(x, e), x);
    EXPECT_EQ(gamma_mul(e, x), x);
  }
}

TEST(Stabilizer, PiSquaredIsP) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto mod = QuadraticModulus::canonical(p);
    const OrderElem pi = OrderElem::pi(mod, 10);
    EXPECT_EQ(gamma_mul(pi, pi), (OrderElem{WittElem(mod, 10, p, 0), WittElem(mod, 10, 0, 0)}));
    EXPECT_FALSE(pi.in_s2());
    EXPECT_THROW(gamma_inv(pi), NotInS2);
  }
}

TEST(Stabilizer, PiTwistsScalars) {
  // Pi c = sigma(c) Pi
  const auto mod = QuadraticModulus::canonical(7);
  const OrderElem pi = OrderElem::pi(mod, 8);
  const WittElem w = WittElem::omega(mod, 8);
  const OrderElem c{w, WittElem(mod, 8, 0, 0)};
  const OrderElem sc{frobenius(w), WittElem(mod, 8, 0, 0)};
  EXPECT_EQ(gamma_mul(pi, c), gamma_mul(sc, pi));
}

TEST(Stabilizer, GroupAxioms) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto mod = QuadraticModulus::canonical(p);
    Gen g(p * 31);
    const OrderElem e = OrderElem::identity(mod, 10);
    for (int t = 0; t < 200; ++t) {
      const OrderElem a = random_gamma(g, mod, 10), b = random_gamma(g, mod, 10), c = random_gamma(g, mod, 10);
      EXPECT_EQ(gamma_mul(gamma_mul(a, b), c), gamma_mul(a, gamma_mul(b, c)));
      EXPECT_EQ(gamma_mul(a, gamma_inv(a)), e);
      EXPECT_EQ(gamma_mul(gamma_inv(a), a), e);
      EXPECT_EQ(gamma_mul(a, b).norm(), a.norm() * b.norm());
    }
  }
}

TEST(Stabilizer, NormMultiplicativeOnWholeOrder) {
  const auto mod = QuadraticModulus::canonical(3);
  Gen g(77);
  for (int t = 0; t < 200; ++t) {
    const OrderElem a = random_order(g, mod, 10), b = random_order(g, mod, 10);
    EXPECT_EQ(gamma_mul(a, b).norm(), a.norm() * b.norm());
  }
}

TEST(Stabilizer, InverseExamples) {
  const auto mod = QuadraticModulus::canonical(5);
  const OrderElem e = OrderElem::identity(mod, 6);
  EXPECT_EQ(gamma_inv(e), e);
  Gen g(2);
  const WittElem a0 = g.unit(mod, 6);
  EXPECT_EQ(gamma_inv(OrderElem{a0, WittElem(mod, 6, 0, 0)}), (OrderElem{a0.inverse(), WittElem(mod, 6, 0, 0)}));
  EXPECT_THROW(make_stabilizer(WittElem(mod, 6, 5, 0), WittElem(mod, 6, 1, 0)), NotInS2);
}

// --- act -------------------------------------------------------------------

TEST(Action, Identity) {
  const auto mod = QuadraticModulus::canonical(5);
  Gen g(4);
  for (int t = 0; t < 20; ++t) {
    const AdjoinedRoot r = random_root(g, mod, 10);
    const ProjPoint x = ProjPoint::affine(r.mu);
    EXPECT_EQ(act(OrderElem::identity(mod, 10), x), x);
  }
}

TEST(Action, ExampleAtZero) {
  const auto mod = QuadraticModulus::canonical(3);
  const auto ring = ExtRing::base(mod, 8);
  const OrderElem g{WittElem(mod, 8, 1, 0), WittElem(mod, 8, 1, 0)};
  const ProjPoint img = act(g, ProjPoint::affine(ExtElem::zero(ring)));
  EXPECT_EQ(img, ProjPoint::affine(ExtElem::one(ring)));
}

TEST(Action, NormalizationOfNonPrimitiveInput) {
  const auto mod = QuadraticModulus::canonical(3);
  const auto ring = ExtRing::base(mod, 8);
  const ExtElem three = ExtElem::embed(ring, WittElem(mod, 8, 3, 0));
  const ExtElem nine = ExtElem::embed(ring, WittElem(mod, 8, 9, 0));
  // [9 : 3] = [3 : 1]
  const ProjPoint pt(nine, three);
  EXPECT_EQ(pt.x(), three.reduced(pt.precision()));
  EXPECT_TRUE(pt.y().is_unit());
  // [1 : 3] stays in the x-chart.
  const ProjPoint q(ExtElem::one(ring), three);
  EXPECT_FALSE(q.affine_coordinate().has_value());
}

TEST(Action, ComposesOnTheRight) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto mod = QuadraticModulus::canonical(p);
    Gen g(p * 3);
    const int N = 10;
    for (int t = 0; t < 200; ++t) {
      const AdjoinedRoot r = random_root(g, mod, N);
      const ProjPoint x = ProjPoint::affine(r.mu);
      const OrderElem a = random_gamma(g, mod, N), b = random_gamma(g, mod, N);
      EXPECT_TRUE(congruent_points(act(gamma_mul(a, b), x), act(b, act(a, x)), N - 2));
    }
  }
}

TEST(Action, LeftCompositionOrderFails) {
  // The formula composes as x.(ab) = (x.a).b; the left-handed order is false
  // in general.
  const auto mod = QuadraticModulus::canonical(3);
  const int N = 8;
  const auto ring = ExtRing::base(mod, N);
  const ProjPoint x = ProjPoint::affine(ExtElem::zero(ring));
  const OrderElem a{WittElem(mod, N, 1, 0), WittElem(mod, N, 1, 0)};
  const OrderElem b{WittElem::omega(mod, N), WittElem(mod, N, 0, 0)};
  EXPECT_TRUE(congruent_points(act(gamma_mul(a, b), x), act(b, act(a, x)), N));
  EXPECT_FALSE(congruent_points(act(gamma_mul(a, b), x), act(a, act(b, x)), 1));
}

// --- curve ------------------------------------------------------------------

TEST(Curve, AtZero) {
  const auto mod = QuadraticModulus::canonical(5);
  Gen g(9);
  const AdjoinedRoot r = random_root(g, mod, 8);
  EXPECT_EQ(curve_f_mu(r.mu, PadicInt(5, 8, 0)), r.mu);
}

TEST(Curve, RationalValue) {
  const auto mod = QuadraticModulus::canonical(5);
  const int N = 8;
  const auto ring = ExtRing::base(mod, N);
  const ExtElem mu = ExtElem::embed(ring, WittElem(mod, N, 5, 0));
  const std::uint64_t m = checked_power(5, N);
  const std::uint64_t expected = solve_linear(13, 3, m);
  EXPECT_EQ(curve_f_mu(mu, PadicInt(5, N, 1)), ExtElem::embed(ring, WittElem(mod, N, expected, 0)));
}

TEST(Curve, AgreesWithAction) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto mod = QuadraticModulus::canonical(p);
    Gen g(p * 5);
    const int N = 10;
    for (int t = 0; t < 200; ++t) {
      const AdjoinedRoot r = random_root(g, mod, N);
      const PadicInt z = g.zp(p, N);
      const OrderElem gz{WittElem(mod, N, 1, 0), WittElem(mod, z, PadicInt(p, N, 0))};
      const ProjPoint img = act(gz, ProjPoint::affine(r.mu));
      // Denominator 1 + p mu z is a unit, so the image stays in the y-chart.
      ASSERT_TRUE(img.affine_coordinate().has_value());
      EXPECT_EQ(*img.affine_coordinate(), curve_f_mu(r.mu, z));
    }
  }
}

TEST(Curve, DefinedAtUnitPoints) {
  // 1 + p mu z is a unit for every integral mu and z.
  const auto mod = QuadraticModulus::canonical(3);
  const auto ring = ExtRing::base(mod, 6);
  const ExtElem mu = ExtElem::embed(ring, WittElem(mod, 6, 2, 1));
  EXPECT_NO_THROW(curve_f_mu(mu, PadicInt(3, 6, 5)));
}

// --- derivative -------------------------------------------------------------

TEST(Derivative, ZeroPoint) {
  const auto mod = QuadraticModulus::canonical(5);
  const auto ring = ExtRing::base(mod, 10);
  const DerivativeGap gap = derivative_check(ExtElem::zero(ring), 3);
  EXPECT_TRUE(gap.lower_bound);
  EXPECT_EQ(gap.floor_value(), 7);
}

TEST(Derivative, ExactRationalOracle) {
  // mu = 5: the defect is -(1 - 5 mu^2) p^{k+1} mu / (1 + p^{k+1} mu) exactly.
  const auto mod = QuadraticModulus::canonical(5);
  const int N = 20;
  const auto ring = ExtRing::base(mod, N);
  const ExtElem mu = ExtElem::embed(ring, WittElem(mod, N, 5, 0));
  for (int k = 1; k <= 5; ++k) {
    __int128 h = 1;
    for (int i = 0; i < k; ++i) h *= 5;
    // f(h) - f(0) = h (1 - 5 mu^2) / (1 + 5 mu h); divide by h and subtract.
    const __int128 slope = 1 - 5 * 25;
    const __int128 den = 1 + 25 * h;
    const __int128 num = slope - slope * den;  // over den
    const DerivativeGap gap = derivative_check(mu, k);
    EXPECT_FALSE(gap.lower_bound);
    EXPECT_EQ(gap.floor_value(), v5(num) - v5(den));
    EXPECT_GE(gap.floor_value(), k);
  }
  EXPECT_EQ(derivative_check(mu, 3).floor_value(), 5);
}

TEST(Derivative, NondecreasingInK) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto mod = QuadraticModulus::canonical(p);
    Gen g(p * 11);
    const int N = p == 7 ? 20 : 22;
    for (int t = 0; t < 30; ++t) {
      const ExtElem mu = ExtElem::embed(ExtRing::base(mod, N), g.divisible(mod, N));
      int last = -1;
      for (int k = 1; k <= 5; ++k) {
        const DerivativeGap gap = derivative_check(mu, k);
        EXPECT_GE(gap.floor_value(), k);
        EXPECT_GE(gap.scaled, last);
        last = gap.scaled;
      }
    }
  }
}

TEST(Derivative, NeedsPrecision) {
  const auto mod = QuadraticModulus::canonical(5);
  const auto ring = ExtRing::base(mod, 5);
  const ExtElem mu = ExtElem::embed(ring, WittElem(mod, 5, 5, 0));
  try {
    derivative_check(mu, 3);
    FAIL();
  } catch (const InsufficientPrecision& e) {
    EXPECT_EQ(e.required(), 6);
  }
}

// --- orbit_enumerate --------------------------------------------------------

TEST(Orbit, FiftyPointsAtFive) {
  const auto mod = QuadraticModulus::canonical(5);
  const int N = 10, k = 6;
  const std::uint64_t m = checked_power(5, k);
  // Oracle: f(z) = (5 + z)/(1 + 25 z) mod 5^6 for z = 0..49, by search.
  std::vector<std::uint64_t> oracle;
  for (std::uint64_t z = 0; z < 50; ++z) oracle.push_back(solve_linear((1 + 25 * z) % m, (5 + z) % m, m));
  ASSERT_EQ(std::set<std::uint64_t>(oracle.begin(), oracle.end()).size(), 50u);

  const AdjoinedRoot r = adjoin_root({WittElem::from_signed(mod, N, -5), WittElem(mod, N, 1, 0)});
  const OrbitCertificate cert = orbit_enumerate(ProjPoint::affine(r.mu), {50, k, 0, 0});
  ASSERT_EQ(cert.size(), 50u);
  EXPECT_TRUE(verify_certificate(cert).ok);
  int checked = 0;
  for (const CertificateEntry& e : cert.entries) {
    if (!(e.gamma.a0 == WittElem(mod, N, 1, 0)) || !e.gamma.a1.in_base()) continue;
    const std::uint64_t z = e.gamma.a1.c0().residue();
    if (z >= 50) continue;
    EXPECT_EQ(e.point.x().coeffs()[0].c0().residue() % m, oracle[z]);
    EXPECT_TRUE(e.point.x().coeffs()[0].c1().residue() % m == 0);
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(Orbit, TargetOne) {
  const auto mod = QuadraticModulus::canonical(3);
  Gen g(6);
  const AdjoinedRoot r = random_root(g, mod, 8);
  const ProjPoint base = ProjPoint::affine(r.mu);
  const OrbitCertificate cert = orbit_enumerate(base, {1, 6, 0, 0});
  ASSERT_EQ(cert.size(), 1u);
  EXPECT_EQ(cert.entries[0].gamma, OrderElem::identity(mod, 8));
  EXPECT_EQ(cert.entries[0].point, base);
}

TEST(Orbit, DeterministicUnderSeed) {
  const auto mod = QuadraticModulus::canonical(7);
  Gen g(12);
  const AdjoinedRoot r = adjoin_root(g.eisenstein(mod, 10, 2));
  const ProjPoint base = ProjPoint::affine(r.mu);
  const OrbitCertificate a = orbit_enumerate(base, {60, 6, 42, 0});
  const OrbitCertificate b = orbit_enumerate(base, {60, 6, 42, 0});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.entries[i].gamma, b.entries[i].gamma);
    EXPECT_EQ(a.entries[i].point, b.entries[i].point);
  }
}

TEST(Orbit, EisensteinRootsAcrossPrimes) {
  for (std::uint64_t p : {3u, 5u, 7u}) {
    const auto mod = QuadraticModulus::canonical(p);
    Gen g(p * 19);
    for (int t = 0; t < 3; ++t) {
      const AdjoinedRoot r = random_root(g, mod, 9);
      const OrbitCertificate cert = orbit_enumerate(ProjPoint::affine(r.mu), {100, 6, 1, 0});
      EXPECT_EQ(cert.size(), 100u);
      EXPECT_TRUE(verify_certificate(cert).ok);
    }
  }
}

TEST(Orbit, BudgetExhaustedKeepsPartial) {
  // Modulo p the orbit of [0 : 1] has p^2 points.
  const auto mod = QuadraticModulus::canonical(3);
  const auto ring = ExtRing::base(mod, 4);
  const ProjPoint base = ProjPoint::affine(ExtElem::zero(ring));
  try {
    orbit_enumerate(base, {20, 1, 0, 400});
    FAIL();
  } catch (const BudgetExhausted& e) {
    EXPECT_EQ(e.partial().size(), 9u);
    EXPECT_TRUE(verify_certificate(e.partial()).ok);
  }
}

TEST(Orbit, PrecisionMustCoverModulus) {
  const auto mod = QuadraticModulus::canonical(5);
  const auto ring = ExtRing::base(mod, 7);
  EXPECT_THROW(orbit_enumerate(ProjPoint::affine(ExtElem::zero(ring)), {5, 6, 0, 0}), InsufficientPrecision);
}

TEST(Orbit, VerifierRejectsTampering) {
  const auto mod = QuadraticModulus::canonical(5);
  const AdjoinedRoot r = adjoin_root({WittElem::from_signed(mod, 10, -5), WittElem(mod, 10, 1, 0)});
  OrbitCertificate cert = orbit_enumerate(ProjPoint::affine(r.mu), {10, 6, 0, 0});
  OrbitCertificate moved = cert;
  moved.entries[3].point = cert.entries[4].point;
  EXPECT_FALSE(verify_certificate(moved).ok);
  OrbitCertificate dup = cert;
  dup.entries.push_back(cert.entries[2]);
  EXPECT_FALSE(verify_certificate(dup).ok);
  OrbitCertificate not_unit = cert;
  not_unit.entries[1].gamma.a0 = WittElem(mod, 10, 5, 0);
  EXPECT_FALSE(verify_certificate(not_unit).ok);
}
