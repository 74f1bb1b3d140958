#pragma once

#include <array>
#include <optional>
#include <string>

#include "morava/powerseries/newton.hpp"
#include "morava/powerseries/weierstrass.hpp"
#include "morava/stabilizer/stabilizer.hpp"

namespace morava {

enum class VerdictKind { UnitIdeal, PPower, NotInvariant, UnsupportedShape };

std::string verdict_name(VerdictKind v);

struct Classification {
  VerdictKind verdict;
  PreparedForm prepared;
  // NotInvariant only: orbit of [mu : 1] for a root mu of P.
  std::optional<OrbitCertificate> certificate;
  // UnsupportedShape only.
  std::optional<NewtonPolygon> polygon;

  int n() const noexcept { return prepared.n; }
  int degree() const noexcept { return prepared.degree(); }
};

struct ClassifyOptions {
  // Orbit size is max(2 deg P, target), with 0 meaning 50.
  int target = 0;
  int modulus = 6;
  std::uint64_t seed = 0;
  std::size_t budget = 0;
};

// Invariance of the principal ideal (F) in W(F_{p^2})[[X]].
//
// F = p^n P U. With P constant the ideal is (p^n) (or the unit ideal). With P
// of degree 1 or Eisenstein, a root mu of P is adjoined and the orbit of
// [mu : 1] is enumerated at modulus min(k, N - n - 2); more distinct orbit
// points than deg P rule out invariance. Other shapes of P are reported as
// UnsupportedShape together with their Newton polygon.
Classification classify_principal(const TruncatedSeries& F, const ClassifyOptions& options = {});

enum class Ideal { Zero, P, Max, Unit };

std::string ideal_name(Ideal i);

struct InvariantPrime {
  Ideal ideal;
  std::string symbol;
  std::string description;
};

// (0) < (p) < (p, X): the stable prime ideals of W(F_{p^2})[[X]].
const std::array<InvariantPrime, 3>& invariant_prime_list();

// Inclusion among the ideals above.
bool ideal_contains(Ideal outer, Ideal inner);

// (1) for UnitIdeal, (p) for PPower; NotApplicable otherwise.
Ideal radical_of_principal(const Classification& c);

}  // namespace morava
