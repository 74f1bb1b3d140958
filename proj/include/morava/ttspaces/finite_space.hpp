#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "morava/error.hpp"

namespace morava {

// Dynamic bitset over point indices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : n_(n), words_((n + 63) / 64, 0) {}

  int size() const noexcept { return n_; }
  bool test(int i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  int count() const noexcept;
  bool none() const noexcept;
  bool subset_of(const Bits& o) const noexcept;
  std::vector<int> members() const;

  Bits& operator|=(const Bits& o) noexcept;
  Bits& operator&=(const Bits& o) noexcept;
  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// A finite topological space given by its specialization preorder:
// x ~> y means y lies in the closure of x. Closed sets are exactly the
// specialization-closed (upward closed) sets.
class FiniteSpace {
 public:
  FiniteSpace() = default;
  // Reflexive-transitive closure of the given pairs (x, y), meaning x ~> y.
  static FiniteSpace generated(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& rel);
  // The given relation must already be a preorder; StructuralError otherwise.
  static FiniteSpace from_preorder(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& rel);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  int index_of(const std::string& label) const;
  FiniteSpace relabeled(std::vector<std::string> labels) const;

  bool specializes(int x, int y) const noexcept { return up_[x].test(y); }
  // cl{x}
  const Bits& point_closure(int x) const noexcept { return up_[x]; }
  Bits closure(const Bits& a) const;
  bool is_closed(const Bits& a) const;
  bool is_t0() const;

  // Pairs (x, y), x != y, x ~> y with nothing strictly between; mutually
  // specializing pairs are listed both ways.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const FiniteSpace&, const FiniteSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Bits> up_;
};

using PointMap = std::vector<int>;

// x ~> y implies f(x) ~> f(y).
bool is_continuous(const FiniteSpace& from, const FiniteSpace& to, const PointMap& f);

// Every specialization-closed subset, as sorted index lists in
// lexicographic order. NotT0 for non-T0 input.
std::vector<std::vector<int>> thomason_subsets(const FiniteSpace& s);

struct Quotient {
  FiniteSpace space;
  PointMap map;
};

// Identifies points with x ~> y and y ~> x. Classes are numbered by their
// least member; merged classes are labelled {a,b,...}.
Quotient kolmogorov_quotient(const FiniteSpace& s);

// Coequalizer of f, g : R -> S among finite topological spaces: S modulo the
// equivalence generated by f(r) ~ g(r), carrying the quotient topology.
Quotient coequalizer_top(const FiniteSpace& r, const FiniteSpace& s, const PointMap& f, const PointMap& g);

// The same among finite T0 (equivalently sober, spectral) spaces.
Quotient coequalizer_spec(const FiniteSpace& r, const FiniteSpace& s, const PointMap& f, const PointMap& g);

// D1, ..., D_{n+1} with cl{D_k} = {D_i : i >= k}.
FiniteSpace chain_spectrum(int n);

// Totally ordered and T0.
bool is_chain(const FiniteSpace& s);

}  // namespace morava
