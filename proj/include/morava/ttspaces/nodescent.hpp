#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "morava/padic/witt.hpp"
#include "morava/stabilizer/stabilizer.hpp"
#include "morava/ttspaces/finite_space.hpp"

namespace morava {

// A height-one prime (P) of W(F_{p^2})[[X]], recorded by a monic
// distinguished P whose lower coefficients are residues mod p^2.
struct HeightOnePoint {
  std::string label;
  // c_0 .. c_{d-1}, 1 at precision 2.
  std::vector<WittElem> poly;
  int degree() const noexcept { return static_cast<int>(poly.size()) - 1; }
};

// "X^2+(3+6w)X+(3)" style label.
std::string polynomial_label(const std::vector<WittElem>& poly);

// Monic distinguished polynomials of degree exactly `degree` with lower
// coefficients in pW mod p^2, in lexicographic coefficient order.
std::vector<std::vector<WittElem>> distinguished_mod_p2(const QuadraticModulus& mod, int degree);

// Irreducibility modulo p^2: P is not a product of two monic distinguished
// polynomials of positive degree (trial multiplication).
bool irreducible_mod_p2(const std::vector<WittElem>& poly);

// All irreducible points of degree 1 .. max_degree.
std::vector<HeightOnePoint> enumerate_height_one(const QuadraticModulus& mod, int max_degree);

// P with its mod-p^2 residues taken as exact coefficients at precision n.
std::vector<WittElem> lift_polynomial(const std::vector<WittElem>& poly, int n);

struct OrbitClass {
  std::vector<int> members;  // indices into the height-one points
  std::optional<OrbitCertificate> certificate;
  // Density taken on trust instead of certified.
  bool assumed = false;
  // Where the certificate lives (file path, or empty).
  std::string certificate_ref;
};

// Spec(E_0) at finite resolution: the generic point Zero, the height-one
// points, P = (p) and Max = (p, X), together with an orbit partition of the
// height-one points.
struct SymbolicE0Space {
  QuadraticModulus mod;
  std::vector<HeightOnePoint> points;
  std::vector<OrbitClass> classes;

  // Classes may not mix degrees, must cover every point exactly once.
  void validate() const;

  // Zero, P, Max, then the height-one points in order. Zero ~> everything,
  // height-one points ~> Max, P ~> Max.
  FiniteSpace finite_model() const;
  // The orbit relation as a pair of maps R -> finite_model().
  void orbit_relation(FiniteSpace& r, PointMap& f, PointMap& g) const;
};

struct MergeRecord {
  std::string class_label;
  std::string merged_into;
  std::string certificate_ref;
  bool assumed;
};

struct NodescentReport {
  int prime = 0;
  int max_degree = 0;
  std::vector<int> points_per_degree;  // index 0 is degree 1
  std::size_t class_count = 0;
  FiniteSpace topological;
  FiniteSpace spectral;
  std::vector<MergeRecord> merges;
  bool spectral_is_chain = false;
};

struct NodescentOptions {
  // Produces a density certificate for an orbit class, or nothing.
  std::function<std::optional<OrbitCertificate>(const SymbolicE0Space&, const OrbitClass&)> certify;
  // Where a produced certificate is recorded; returns the reference string.
  std::function<std::string(const OrbitClass&, const OrbitCertificate&)> record;
  bool assume_density = false;
};

// Singleton orbit classes over all irreducible points up to max_degree.
SymbolicE0Space build_e0_space(const QuadraticModulus& mod, int max_degree);

// Certificate for a class: orbit of [mu : 1] for a root mu of the first
// member's lifted polynomial.
std::optional<OrbitCertificate> orbit_density_certificate(const SymbolicE0Space& space, const OrbitClass& cls,
                                                          int precision, const OrbitOptions& orbit);

// Compares the coequalizer of the orbit relation among topological spaces
// with the one among spectral spaces. A certified (or assumed) class is
// dense, so it specializes to Zero and is merged with it by the T0
// reflection. MissingCertificate when neither applies.
NodescentReport nodescent_demo(SymbolicE0Space space, const NodescentOptions& options);

}  // namespace morava
