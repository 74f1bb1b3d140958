#include "morava/ttspaces/finite_space.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace morava {

int Bits::count() const noexcept {
  int c = 0;
  for (std::uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Bits::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool Bits::subset_of(const Bits& o) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

std::vector<int> Bits::members() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

Bits& Bits::operator|=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bits& Bits::operator&=(const Bits& o) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

namespace {

std::vector<Bits> relation_rows(int n, const std::vector<std::pair<int, int>>& rel) {
  std::vector<Bits> up(n, Bits(n));
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (auto [x, y] : rel) {
    if (x < 0 || y < 0 || x >= n || y >= n) throw StructuralError("relation refers to a missing point");
    up[x].set(y);
  }
  return up;
}

void transitive_close(std::vector<Bits>& up) {
  const int n = static_cast<int>(up.size());
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
}

}  // namespace

FiniteSpace FiniteSpace::generated(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& rel) {
  FiniteSpace s;
  s.up_ = relation_rows(static_cast<int>(labels.size()), rel);
  transitive_close(s.up_);
  s.labels_ = std::move(labels);
  return s;
}

FiniteSpace FiniteSpace::from_preorder(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& rel) {
  FiniteSpace s;
  s.up_ = relation_rows(static_cast<int>(labels.size()), rel);
  auto closed = s.up_;
  transitive_close(closed);
  if (closed != s.up_) throw StructuralError("specialization relation is not transitive");
  s.labels_ = std::move(labels);
  return s;
}

int FiniteSpace::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw StructuralError("no point labelled " + label);
  return static_cast<int>(it - labels_.begin());
}

FiniteSpace FiniteSpace::relabeled(std::vector<std::string> labels) const {
  if (labels.size() != labels_.size()) throw StructuralError("relabeling needs one label per point");
  FiniteSpace s = *this;
  s.labels_ = std::move(labels);
  return s;
}

Bits FiniteSpace::closure(const Bits& a) const {
  Bits out(size());
  for (int x : a.members()) out |= up_[x];
  return out;
}

bool FiniteSpace::is_closed(const Bits& a) const { return closure(a) == a; }

bool FiniteSpace::is_t0() const {
  for (int x = 0; x < size(); ++x)
    for (int y = x + 1; y < size(); ++y)
      if (specializes(x, y) && specializes(y, x)) return false;
  return true;
}

std::vector<std::pair<int, int>> FiniteSpace::covers() const {
  std::vector<std::pair<int, int>> out;
  const auto equiv = [&](int a, int b) { return specializes(a, b) && specializes(b, a); };
  for (int x = 0; x < size(); ++x) {
    for (int y = 0; y < size(); ++y) {
      if (x == y || !specializes(x, y)) continue;
      bool direct = true;
      for (int z = 0; z < size() && direct; ++z) {
        if (equiv(z, x) || equiv(z, y)) continue;
        if (specializes(x, z) && specializes(z, y)) direct = false;
      }
      if (direct) out.emplace_back(x, y);
    }
  }
  return out;
}

bool is_continuous(const FiniteSpace& from, const FiniteSpace& to, const PointMap& f) {
  if (static_cast<int>(f.size()) != from.size()) return false;
  for (int v : f)
    if (v < 0 || v >= to.size()) return false;
  for (int x = 0; x < from.size(); ++x)
    for (int y = 0; y < from.size(); ++y)
      if (from.specializes(x, y) && !to.specializes(f[x], f[y])) return false;
  return true;
}

std::vector<std::vector<int>> thomason_subsets(const FiniteSpace& s) {
  if (!s.is_t0()) throw NotT0();
  const int n = s.size();
  // down[x]: points specializing to x. Excluding x excludes all of them.
  std::vector<Bits> down(n, Bits(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (s.specializes(y, x)) down[x].set(y);

  std::vector<std::vector<int>> out;
  Bits in(n), out_mask(n);
  auto rec = [&](auto&& self, int i) -> void {
    while (i < n && (in.test(i) || out_mask.test(i))) ++i;
    if (i == n) {
      out.push_back(in.members());
      return;
    }
    const Bits saved_in = in, saved_out = out_mask;
    out_mask |= down[i];
    self(self, i + 1);
    out_mask = saved_out;
    in |= s.point_closure(i);
    self(self, i + 1);
    in = saved_in;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::string class_label(const FiniteSpace& s, const std::vector<int>& members) {
  if (members.size() == 1) return s.label(members[0]);
  std::string l = "{";
  for (std::size_t i = 0; i < members.size(); ++i) l += (i ? "," : "") + s.label(members[i]);
  return l + "}";
}

// The quotient of s by the partition `cls` (class index per point, classes
// numbered by least member), with the image preorder closed transitively.
Quotient quotient_by(const FiniteSpace& s, const PointMap& cls, int classes) {
  std::vector<std::vector<int>> members(classes);
  for (int x = 0; x < s.size(); ++x) members[cls[x]].push_back(x);
  std::vector<std::string> labels;
  for (const auto& m : members) labels.push_back(class_label(s, m));
  std::vector<std::pair<int, int>> rel;
  for (int x = 0; x < s.size(); ++x)
    for (int y : s.point_closure(x).members())
      if (cls[x] != cls[y]) rel.emplace_back(cls[x], cls[y]);
  return {FiniteSpace::generated(std::move(labels), rel), cls};
}

// Renumber representative ids so that classes are ordered by least member.
int canonical_classes(PointMap& rep) {
  std::vector<int> id(rep.size(), -1);
  int next = 0;
  for (std::size_t x = 0; x < rep.size(); ++x) {
    const int r = rep[x];
    if (id[r] < 0) id[r] = next++;
    rep[x] = id[r];
  }
  return next;
}

}  // namespace

Quotient kolmogorov_quotient(const FiniteSpace& s) {
  PointMap rep(s.size());
  for (int x = 0; x < s.size(); ++x) {
    rep[x] = x;
    for (int y = 0; y < x; ++y) {
      if (s.specializes(x, y) && s.specializes(y, x)) {
        rep[x] = rep[y];
        break;
      }
    }
  }
  const int k = canonical_classes(rep);
  return quotient_by(s, rep, k);
}

Quotient coequalizer_top(const FiniteSpace& r, const FiniteSpace& s, const PointMap& f, const PointMap& g) {
  if (!is_continuous(r, s, f) || !is_continuous(r, s, g)) {
    throw StructuralError("coequalizer needs continuous maps");
  }
  PointMap parent(s.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < r.size(); ++i) {
    const int a = find(f[i]), b = find(g[i]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  PointMap rep(s.size());
  for (int x = 0; x < s.size(); ++x) rep[x] = find(x);
  const int k = canonical_classes(rep);
  return quotient_by(s, rep, k);
}

Quotient coequalizer_spec(const FiniteSpace& r, const FiniteSpace& s, const PointMap& f, const PointMap& g) {
  const Quotient top = coequalizer_top(r, s, f, g);
  Quotient t0 = kolmogorov_quotient(top.space);
  PointMap composite(s.size());
  for (int x = 0; x < s.size(); ++x) composite[x] = t0.map[top.map[x]];
  return {std::move(t0.space), std::move(composite)};
}

FiniteSpace chain_spectrum(int n) {
  if (n < 0) throw StructuralError("chain length must be nonnegative");
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> rel;
  for (int k = 0; k <= n; ++k) {
    labels.push_back("D" + std::to_string(k + 1));
    if (k > 0) rel.emplace_back(k - 1, k);
  }
  return FiniteSpace::generated(std::move(labels), rel);
}

bool is_chain(const FiniteSpace& s) {
  if (!s.is_t0()) return false;
  for (int x = 0; x < s.size(); ++x)
    for (int y = x + 1; y < s.size(); ++y)
      if (!s.specializes(x, y) && !s.specializes(y, x)) return false;
  return true;
}

}  // namespace morava
