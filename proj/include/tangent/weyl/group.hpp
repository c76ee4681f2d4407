// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <tuple>
#include <vector>

#include "tangent/core/error.hpp"
#include "tangent/weyl/subspace.hpp"

namespace tangent::weyl {

enum class WeylType { A, B, C, BC, D };

inline const char* type_name(WeylType t) {
  switch (t) {
    case WeylType::A: return "A";
    case WeylType::B: return "B";
    case WeylType::C: return "C";
    case WeylType::BC: return "BC";
    case WeylType::D: return "D";
  }
  return "?";
}

inline WeylType parse_type(const std::string& s) {
  if (s == "A") return WeylType::A;
  if (s == "B") return WeylType::B;
  if (s == "C") return WeylType::C;
  if (s == "BC") return WeylType::BC;
  if (s == "D") return WeylType::D;
  throw Error("unknown Weyl group type '" + s + "'");
}

inline constexpr std::size_t kMaxEnumerationRank = 9;

// Element acting by e_i -> signs[i] * e_{permutation[i]}.
struct WeylElement {
  std::vector<std::size_t> permutation;
  std::vector<int> signs;

  static WeylElement identity(std::size_t n) {
    WeylElement w;
    w.permutation.resize(n);
    std::iota(w.permutation.begin(), w.permutation.end(), std::size_t{0});
    w.signs.assign(n, 1);
    return w;
  }

  std::size_t size() const { return permutation.size(); }

  Vector apply(const Vector& v) const {
    if (v.size() != size()) throw Error("Weyl element and vector have different dimensions");
    Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[permutation[i]] = signs[i] < 0 ? -v[i] : v[i];
    return out;
  }

  // (a * b)(v) = a(b(v))
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement w;
    w.permutation.resize(b.size());
    w.signs.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      w.permutation[i] = a.permutation[b.permutation[i]];
      w.signs[i] = b.signs[i] * a.signs[b.permutation[i]];
    }
    return w;
  }

  WeylElement inverse() const {
    WeylElement w;
    w.permutation.resize(size());
    w.signs.resize(size());
    for (std::size_t i = 0; i < size(); ++i) {
      w.permutation[permutation[i]] = i;
      w.signs[permutation[i]] = signs[i];
    }
    return w;
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    return std::tie(a.permutation, a.signs) < std::tie(b.permutation, b.signs);
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < size(); ++i) {
      s += i ? " " : "";
      s += (signs[i] < 0 ? "-" : "") + std::to_string(permutation[i] + 1);
    }
    return s + "]";
  }
};

struct SignedPermutationGroup {
  WeylType type = WeylType::A;
  std::size_t rank = 0;

  std::size_t ambient() const { return type == WeylType::A ? rank + 1 : rank; }

  std::uint64_t order() const {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= ambient(); ++i) f *= i;
    if (type == WeylType::A) return f;
    if (type == WeylType::D) return rank == 0 ? 1 : (std::uint64_t{1} << (rank - 1)) * f;
    return (std::uint64_t{1} << rank) * f;
  }

  bool contains(const WeylElement& w) const {
    if (w.size() != ambient()) return false;
    std::vector<bool> seen(w.size(), false);
    for (auto p : w.permutation) {
      if (p >= w.size() || seen[p]) return false;
      seen[p] = true;
    }
    int neg = 0;
    for (int s : w.signs) {
      if (s != 1 && s != -1) return false;
      neg += s < 0;
    }
    if (type == WeylType::A) return neg == 0;
    if (type == WeylType::D) return neg % 2 == 0;
    return true;
  }

  std::vector<WeylElement> generators() const {
    std::vector<WeylElement> gens;
    const std::size_t n = ambient();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      WeylElement s = WeylElement::identity(n);
      std::swap(s.permutation[i], s.permutation[i + 1]);
      gens.push_back(s);
    }
    if ((type == WeylType::B || type == WeylType::C || type == WeylType::BC) && n >= 1) {
      WeylElement s = WeylElement::identity(n);
      s.signs[n - 1] = -1;
      gens.push_back(s);
    }
    if (type == WeylType::D && n >= 2) {
      WeylElement s = WeylElement::identity(n);
      std::swap(s.permutation[n - 2], s.permutation[n - 1]);
      s.signs[n - 2] = -1;
      s.signs[n - 1] = -1;
      gens.push_back(s);
    }
    return gens;
  }

  std::string str() const { return std::string(type_name(type)) + "_" + std::to_string(rank); }

  void check_bound() const {
    if (rank > kMaxEnumerationRank)
      throw BoundError("Weyl group " + str() + " exceeds the enumeration ceiling rank " +
                       std::to_string(kMaxEnumerationRank));
  }
};

// Deterministic enumeration: permutations in lexicographic order, and for
// each permutation the sign patterns in increasing bitmask order.
class ElementRange {
 public:
  explicit ElementRange(SignedPermutationGroup g) : g_(g) { g_.check_bound(); }

  class iterator {
   public:
    using value_type = WeylElement;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    iterator(const SignedPermutationGroup* g, bool end) : g_(g), done_(end) {
      if (!end) {
        cur_ = WeylElement::identity(g->ambient());
        mask_ = 0;
      }
    }
    const WeylElement& operator*() const { return cur_; }
    const WeylElement* operator->() const { return &cur_; }
    iterator& operator++() {
      advance();
      return *this;
    }
    bool operator==(const iterator& o) const { return done_ == o.done_ && (done_ || (cur_ == o.cur_)); }
    bool operator!=(const iterator& o) const { return !(*this == o); }

   private:
    void advance() {
      const std::size_t n = cur_.size();
      if (g_->type != WeylType::A) {
        const std::uint64_t limit = std::uint64_t{1} << n;
        for (++mask_; mask_ < limit; ++mask_)
          if (g_->type != WeylType::D || __builtin_popcountll(mask_) % 2 == 0) break;
        if (mask_ < limit) {
          for (std::size_t i = 0; i < n; ++i) cur_.signs[i] = (mask_ >> i) & 1 ? -1 : 1;
          return;
        }
      }
      mask_ = 0;
      std::fill(cur_.signs.begin(), cur_.signs.end(), 1);
      if (!std::next_permutation(cur_.permutation.begin(), cur_.permutation.end())) done_ = true;
    }

    const SignedPermutationGroup* g_ = nullptr;
    WeylElement cur_;
    std::uint64_t mask_ = 0;
    bool done_ = true;
  };

  iterator begin() const { return iterator(&g_, false); }
  iterator end() const { return iterator(&g_, true); }

 private:
  SignedPermutationGroup g_;
};

inline ElementRange elements(const SignedPermutationGroup& g) { return ElementRange(g); }

inline RationalSubspace act(const WeylElement& w, const RationalSubspace& v) {
  if (w.size() != v.ambient_dim()) throw Error("act: dimension mismatch");
  std::vector<Vector> images;
  for (const auto& b : v.basis()) images.push_back(w.apply(b));
  return RationalSubspace::span(v.ambient_dim(), std::move(images));
}

struct OrbitMember {
  RationalSubspace subspace;
  WeylElement element;  // subspace = act(element, A)
};

inline constexpr std::size_t kMaxOrbitSize = 2'000'000;

// The orbit W.A by breadth-first search over the simple generators; each
// member carries one group element reaching it.
inline std::vector<OrbitMember> orbit(const RationalSubspace& a, const SignedPermutationGroup& g) {
  g.check_bound();
  if (a.ambient_dim() != g.ambient()) throw Error("orbit: subspace and group live in different dimensions");
  const auto gens = g.generators();
  std::map<RationalSubspace, std::size_t> index;
  std::vector<OrbitMember> members;
  members.push_back({a, WeylElement::identity(g.ambient())});
  index.emplace(a, 0);
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (const auto& s : gens) {
      RationalSubspace img = act(s, members[head].subspace);
      if (index.count(img)) continue;
      if (members.size() >= kMaxOrbitSize) throw BoundError("orbit exceeds " + std::to_string(kMaxOrbitSize) + " subspaces");
      index.emplace(img, members.size());
      members.push_back({std::move(img), s * members[head].element});
    }
  }
  return members;
}

// Some w with V contained in w.A, if any. A subspace over an infinite field
// lies in a finite union of subspaces only if it lies in one of them, so
// this decides V being inside the union W.A.
inline std::optional<WeylElement> subspace_in_orbit_union(const RationalSubspace& v, const RationalSubspace& a,
                                                          const SignedPermutationGroup& g) {
  if (v.ambient_dim() != a.ambient_dim()) throw Error("subspace_in_orbit_union: dimension mismatch");
  if (v.dim() > a.dim()) {
    g.check_bound();
    return std::nullopt;
  }
  for (const auto& m : orbit(a, g))
    if (m.subspace.contains(v)) return m.element;
  return std::nullopt;
}

struct UnionSearchResult {
  std::size_t dim = 0;
  RationalSubspace witness;
  bool exact = false;
  std::size_t orbit_size = 0;
};

// Largest subspace found inside the union W.A by trying orbit members and
// pairwise sums of them. Exhaustive over pairs when rank <= 4; above that
// only the first sample_budget pairs are tried and the result is a lower
// bound.
inline UnionSearchResult max_subspace_dim_in_union(const RationalSubspace& a, const SignedPermutationGroup& g,
                                                   std::size_t sample_budget) {
  const auto members = orbit(a, g);
  UnionSearchResult best;
  best.orbit_size = members.size();
  best.exact = g.rank <= 4;
  best.dim = a.dim();
  best.witness = a;
  std::size_t tried = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!best.exact && tried >= sample_budget) return best;
      ++tried;
      RationalSubspace s = members[i].subspace + members[j].subspace;
      if (s.dim() <= best.dim) continue;
      for (const auto& m : members) {
        if (m.subspace.contains(s)) {
          best.dim = s.dim();
          best.witness = s;
          break;
        }
      }
    }
  }
  return best;
}

}  // namespace tangent::weyl
