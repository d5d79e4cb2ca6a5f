#pragma once

#include <cstdint>
#include <vector>

#include "hcyl/intmatrix.hpp"
#include "hcyl/laurent.hpp"

namespace hcyl {

/// Square integer matrix of even size 2g, the linking form of a genus-g
/// Seifert surface in some basis of its first homology.
class SeifertMatrix {
 public:
  /// Throws InvalidArgument unless `entries` is square with even size >= 2.
  explicit SeifertMatrix(IntMatrix entries);

  std::size_t size() const { return entries_.size(); }
  std::size_t genus() const { return entries_.size() / 2; }
  const IntMatrix& entries() const { return entries_; }
  const Integer& at(std::size_t i, std::size_t j) const { return entries_[i][j]; }

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  IntMatrix entries_;
};

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

/// Exact determinant of a square matrix of Laurent polynomials.
///
/// Each row is shifted to polynomial form, the determinant is evaluated at
/// deg+1 integer points with Bareiss elimination and the polynomial is
/// recovered by Newton interpolation over the rationals.
LaurentPoly determinant_poly(const PolyMatrix& m);

/// Normalized det(V - t V^T). Throws NotUnitAtOne when det(V - V^T) != +-1.
LaurentPoly alexander_from_seifert(const SeifertMatrix& v);

/// Genus-1 Seifert matrix of the pretzel knot P(2l+1, 2m+1, 2n+1) from its
/// standard two-band surface.
SeifertMatrix pretzel_seifert_matrix(std::int64_t l, std::int64_t m, std::int64_t n);

/// The complementary sutured manifold is a homology product iff det V = +-1.
bool is_homology_product(const SeifertMatrix& v);

/// Same test read off the Alexander polynomial: full degree 2g and unit
/// constant term. Throws NotUnitAtOne like alexander_from_seifert.
bool is_homology_product_via_alexander(const SeifertMatrix& v);

}  // namespace hcyl
