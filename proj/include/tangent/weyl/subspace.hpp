// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tangent/core/error.hpp"
#include "tangent/core/linalg.hpp"
#include "tangent/core/rational.hpp"

namespace tangent::weyl {

using Vector = std::vector<Rational>;

// A subspace of Q^n stored by its reduced row echelon basis, so two equal
// subspaces have identical representations.
class RationalSubspace {
 public:
  RationalSubspace() = default;
  explicit RationalSubspace(std::size_t ambient) : ambient_(ambient) {}

  static RationalSubspace span(std::size_t ambient, std::vector<Vector> vectors) {
    for (const auto& v : vectors)
      if (v.size() != ambient) throw Error("vector length does not match ambient dimension");
    RationalSubspace s(ambient);
    s.pivots_ = linalg::rref(vectors);
    s.basis_ = std::move(vectors);
    return s;
  }

  // Span of the standard basis vectors e_first .. e_{first+count-1}.
  static RationalSubspace coordinates(std::size_t ambient, std::size_t first, std::size_t count) {
    if (first + count > ambient) throw Error("coordinate block outside ambient space");
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < count; ++i) {
      Vector v(ambient, Rational(0));
      v[first + i] = 1;
      vs.push_back(std::move(v));
    }
    return span(ambient, std::move(vs));
  }

  static RationalSubspace whole(std::size_t ambient) { return coordinates(ambient, 0, ambient); }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }

  bool contains(const Vector& v) const {
    if (v.size() != ambient_) throw Error("vector length does not match ambient dimension");
    return linalg::in_row_span(basis_, pivots_, v);
  }

  bool contains(const RationalSubspace& o) const {
    if (o.ambient_ != ambient_) throw Error("ambient dimension mismatch");
    if (o.dim() > dim()) return false;
    for (const auto& v : o.basis_)
      if (!contains(v)) return false;
    return true;
  }

  RationalSubspace operator+(const RationalSubspace& o) const {
    if (o.ambient_ != ambient_) throw Error("ambient dimension mismatch");
    std::vector<Vector> vs = basis_;
    vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
    return span(ambient_, std::move(vs));
  }

  friend bool operator==(const RationalSubspace& a, const RationalSubspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator<(const RationalSubspace& a, const RationalSubspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.basis_.size() != b.basis_.size()) return a.basis_.size() < b.basis_.size();
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
      for (std::size_t j = 0; j < a.ambient_; ++j)
        if (!(a.basis_[i][j] == b.basis_[i][j])) return a.basis_[i][j] < b.basis_[i][j];
    return false;
  }

  std::string str() const {
    std::string s = "span{";
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      s += i ? ", (" : "(";
      for (std::size_t j = 0; j < ambient_; ++j) s += (j ? "," : "") + basis_[i][j].str();
      s += ")";
    }
    return s + "}";
  }

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace tangent::weyl
