#include "morava/ttspaces/nodescent.hpp"

#include <set>

#include "morava/powerseries/newton.hpp"

namespace morava {

namespace {

std::string residue_label(const WittElem& c) {
  const std::uint64_t a = c.c0().residue(), b = c.c1().residue();
  if (b == 0) return std::to_string(a);
  const std::string w = (b == 1 ? "" : std::to_string(b)) + "w";
  return a == 0 ? w : std::to_string(a) + "+" + w;
}

std::vector<WittElem> poly_mul(const std::vector<WittElem>& a, const std::vector<WittElem>& b) {
  const WittElem zero(a.front().modulus(), a.front().precision(), 0, 0);
  std::vector<WittElem> out(a.size() + b.size() - 1, zero);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
  return out;
}

using Key = std::vector<std::uint64_t>;

Key key_of(const std::vector<WittElem>& poly) {
  Key k;
  for (const WittElem& c : poly) {
    k.push_back(c.c0().residue());
    k.push_back(c.c1().residue());
  }
  return k;
}

std::set<Key> reducible_keys(const QuadraticModulus& mod, int degree) {
  std::set<Key> out;
  for (int a = 1; 2 * a <= degree; ++a) {
    const auto left = distinguished_mod_p2(mod, a);
    const auto right = distinguished_mod_p2(mod, degree - a);
    for (const auto& x : left)
      for (const auto& y : right) out.insert(key_of(poly_mul(x, y)));
  }
  return out;
}

}  // namespace

std::string polynomial_label(const std::vector<WittElem>& poly) {
  const int d = static_cast<int>(poly.size()) - 1;
  std::string s = d == 0 ? "1" : d == 1 ? "X" : "X^" + std::to_string(d);
  for (int i = d - 1; i >= 0; --i) {
    if (poly[i].is_zero()) continue;
    s += "+(" + residue_label(poly[i]) + ")";
    if (i == 1) s += "X";
    if (i >= 2) s += "X^" + std::to_string(i);
  }
  return s;
}

std::vector<std::vector<WittElem>> distinguished_mod_p2(const QuadraticModulus& mod, int degree) {
  const std::uint64_t p = mod.p;
  const std::uint64_t q = p * p;  // residues t = t0 + t1 w of F_{p^2}
  std::vector<std::vector<WittElem>> out;
  std::vector<std::uint64_t> digits(degree, 0);
  for (;;) {
    std::vector<WittElem> poly;
    for (int i = 0; i < degree; ++i) poly.emplace_back(mod, 2, p * (digits[i] / p), p * (digits[i] % p));
    poly.emplace_back(mod, 2, 1, 0);
    out.push_back(std::move(poly));
    int i = degree - 1;
    while (i >= 0 && ++digits[i] == q) digits[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

bool irreducible_mod_p2(const std::vector<WittElem>& poly) {
  const int d = static_cast<int>(poly.size()) - 1;
  if (d < 1) return false;
  return reducible_keys(poly.front().modulus(), d).count(key_of(poly)) == 0;
}

std::vector<HeightOnePoint> enumerate_height_one(const QuadraticModulus& mod, int max_degree) {
  std::vector<HeightOnePoint> out;
  for (int d = 1; d <= max_degree; ++d) {
    const std::set<Key> reducible = reducible_keys(mod, d);
    for (auto& poly : distinguished_mod_p2(mod, d)) {
      if (reducible.count(key_of(poly))) continue;
      out.push_back({polynomial_label(poly), std::move(poly)});
    }
  }
  return out;
}

std::vector<WittElem> lift_polynomial(const std::vector<WittElem>& poly, int n) {
  std::vector<WittElem> out;
  for (const WittElem& c : poly) out.emplace_back(c.modulus(), n, c.c0().residue(), c.c1().residue());
  return out;
}

void SymbolicE0Space::validate() const {
  std::vector<int> seen(points.size(), 0);
  for (const OrbitClass& c : classes) {
    if (c.members.empty()) throw StructuralError("empty orbit class");
    const int d = points.at(c.members.front()).degree();
    for (int m : c.members) {
      if (points.at(m).degree() != d) {
        throw StructuralError("orbit class mixes degrees " + std::to_string(d) + " and " +
                              std::to_string(points[m].degree()));
      }
      ++seen[m];
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 1) throw StructuralError("point " + points[i].label + " must lie in exactly one orbit class");
  }
}

FiniteSpace SymbolicE0Space::finite_model() const {
  std::vector<std::string> labels{"Zero", "P", "Max"};
  std::vector<std::pair<int, int>> rel{{1, 2}};
  for (std::size_t i = 0; i < points.size(); ++i) {
    labels.push_back(points[i].label);
    rel.emplace_back(3 + static_cast<int>(i), 2);
  }
  for (std::size_t x = 1; x < labels.size(); ++x) rel.emplace_back(0, static_cast<int>(x));
  return FiniteSpace::generated(std::move(labels), rel);
}

void SymbolicE0Space::orbit_relation(FiniteSpace& r, PointMap& f, PointMap& g) const {
  std::vector<std::string> labels;
  f.clear();
  g.clear();
  for (const OrbitClass& c : classes) {
    for (std::size_t i = 1; i < c.members.size(); ++i) {
      labels.push_back("r" + std::to_string(labels.size()));
      f.push_back(3 + c.members.front());
      g.push_back(3 + c.members[i]);
    }
  }
  r = FiniteSpace::generated(std::move(labels), {});
}

SymbolicE0Space build_e0_space(const QuadraticModulus& mod, int max_degree) {
  SymbolicE0Space s{mod, enumerate_height_one(mod, max_degree), {}};
  for (std::size_t i = 0; i < s.points.size(); ++i) s.classes.push_back({{static_cast<int>(i)}, std::nullopt, false, ""});
  return s;
}

std::optional<OrbitCertificate> orbit_density_certificate(const SymbolicE0Space& space, const OrbitClass& cls,
                                                          int precision, const OrbitOptions& orbit) {
  const auto poly = lift_polynomial(space.points.at(cls.members.front()).poly, precision);
  const AdjoinedRoot root = adjoin_root(poly);
  try {
    return orbit_enumerate(ProjPoint::affine(root.mu), orbit);
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

NodescentReport nodescent_demo(SymbolicE0Space space, const NodescentOptions& options) {
  space.validate();
  for (OrbitClass& c : space.classes) {
    if (!c.certificate && options.certify) {
      auto cert = options.certify(space, c);
      if (cert && verify_certificate(*cert).ok) {
        c.certificate_ref = options.record ? options.record(c, *cert) : "";
        c.certificate = std::move(cert);
      }
    }
    if (c.certificate) continue;
    if (!options.assume_density) {
      throw MissingCertificate("orbit class of " + space.points[c.members.front()].label +
                               " has no density certificate");
    }
    c.assumed = true;
  }

  const FiniteSpace model = space.finite_model();
  FiniteSpace r;
  PointMap f, g;
  space.orbit_relation(r, f, g);
  const Quotient top = coequalizer_top(r, model, f, g);

  // Density: the closure of every orbit class is everything.
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < top.space.size(); ++x)
    for (int y : top.space.point_closure(x).members()) rel.emplace_back(x, y);
  for (const OrbitClass& c : space.classes) {
    const int q = top.map[3 + c.members.front()];
    for (int y = 0; y < top.space.size(); ++y) rel.emplace_back(q, y);
  }
  const FiniteSpace dense = FiniteSpace::generated(top.space.labels(), rel);
  const Quotient spec = kolmogorov_quotient(dense);

  std::vector<std::string> names(spec.space.size());
  for (int x = top.space.size() - 1; x >= 0; --x) names[spec.map[x]] = "[" + top.space.label(x) + "]";

  NodescentReport rep;
  rep.prime = static_cast<int>(space.mod.p);
  for (const HeightOnePoint& pt : space.points) {
    if (pt.degree() > static_cast<int>(rep.points_per_degree.size())) rep.points_per_degree.resize(pt.degree(), 0);
    ++rep.points_per_degree[pt.degree() - 1];
  }
  rep.max_degree = static_cast<int>(rep.points_per_degree.size());
  rep.class_count = space.classes.size();
  rep.topological = top.space;
  rep.spectral = spec.space.relabeled(names);
  for (const OrbitClass& c : space.classes) {
    const int q = top.map[3 + c.members.front()];
    rep.merges.push_back({top.space.label(q), names[spec.map[q]], c.certificate_ref, c.assumed});
  }
  rep.spectral_is_chain = rep.spectral.size() == 3 && is_chain(rep.spectral);
  return rep;
}

}  // namespace morava
