#include "morava/classifier/classifier.hpp"

#include <algorithm>

namespace morava {

std::string verdict_name(VerdictKind v) {
  switch (v) {
    case VerdictKind::UnitIdeal: return "UnitIdeal";
    case VerdictKind::PPower: return "PPower";
    case VerdictKind::NotInvariant: return "NotInvariant";
    case VerdictKind::UnsupportedShape: return "UnsupportedShape";
  }
  return "?";
}

Classification classify_principal(const TruncatedSeries& F, const ClassifyOptions& options) {
  PreparedForm pf = weierstrass_prep(F);
  const int d = pf.degree();
  if (d == 0) {
    const VerdictKind v = pf.n == 0 ? VerdictKind::UnitIdeal : VerdictKind::PPower;
    return {v, std::move(pf), std::nullopt, std::nullopt};
  }

  std::optional<AdjoinedRoot> root;
  try {
    root = adjoin_root(pf.P);
  } catch (const UnsupportedSlope& e) {
    return {VerdictKind::UnsupportedShape, std::move(pf), std::nullopt, e.polygon()};
  }

  const int precision = root->mu.precision();
  const int modulus = std::min(options.modulus, precision - 2);
  if (modulus < 1) throw InsufficientPrecision(pf.n + 3, "orbit certificate for the distinguished factor");
  OrbitOptions orbit;
  orbit.target = std::max(2 * d, options.target > 0 ? options.target : 50);
  orbit.modulus = modulus;
  orbit.seed = options.seed;
  orbit.budget = options.budget;
  OrbitCertificate cert = orbit_enumerate(ProjPoint::affine(root->mu), orbit);
  return {VerdictKind::NotInvariant, std::move(pf), std::move(cert), std::nullopt};
}

std::string ideal_name(Ideal i) {
  switch (i) {
    case Ideal::Zero: return "(0)";
    case Ideal::P: return "(p)";
    case Ideal::Max: return "(p,X)";
    case Ideal::Unit: return "(1)";
  }
  return "?";
}

const std::array<InvariantPrime, 3>& invariant_prime_list() {
  static const std::array<InvariantPrime, 3> list{{
      {Ideal::Zero, "I_0", "zero ideal; generic point"},
      {Ideal::P, "I_1", "radical of every (p^n), n >= 1"},
      {Ideal::Max, "I_2", "maximal ideal; not principal"},
  }};
  return list;
}

bool ideal_contains(Ideal outer, Ideal inner) {
  return static_cast<int>(inner) <= static_cast<int>(outer);
}

Ideal radical_of_principal(const Classification& c) {
  switch (c.verdict) {
    case VerdictKind::UnitIdeal: return Ideal::Unit;
    case VerdictKind::PPower: return Ideal::P;
    default:
      throw NotApplicable("radical is only reported for invariant principal ideals (verdict " +
                          verdict_name(c.verdict) + ")");
  }
}

}  // namespace morava
