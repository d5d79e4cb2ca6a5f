#include "hcyl/seifert.hpp"

#include <algorithm>
#include <limits>
#include <utility>

#include "hcyl/error.hpp"

namespace hcyl {

SeifertMatrix::SeifertMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  const std::size_t n = entries_.size();
  if (n < 2 || n % 2 != 0)
    throw Error(ErrorCode::InvalidArgument,
                "Seifert matrix size must be even and at least 2, got " + std::to_string(n));
  for (const auto& row : entries_)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "Seifert matrix must be square");
}

namespace {

// Interpolation nodes 0, 1, -1, 2, -2, ...
Integer node(std::size_t i) {
  const long k = static_cast<long>((i + 1) / 2);
  return (i % 2 == 1) ? Integer(k) : Integer(-k);
}

Integer eval_poly_at_int(const LaurentPoly& p, const Integer& x) {
  // Only called on polynomials with lowest() >= 0.
  Integer acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p.lowest()));
  return acc * scale;
}

// Newton divided differences, then expansion to the monomial basis.
std::vector<Integer> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
      if (i == level) break;
    }
  }
  std::vector<Rational> coeffs(n, Rational(0));
  // Horner on the Newton form: p = dd[n-1]; p = p*(t - x_i) + dd[i].
  for (std::size_t step = n; step-- > 0;) {
    for (std::size_t j = n - 1; j > 0; --j) coeffs[j] = coeffs[j - 1] - coeffs[j] * Rational(xs[step]);
    coeffs[0] = -coeffs[0] * Rational(xs[step]);
    coeffs[0] += dd[step];
  }
  std::vector<Integer> out;
  out.reserve(n);
  for (auto& c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1)
      throw std::logic_error("interpolated determinant has a non-integral coefficient");
    out.push_back(c.get_num());
  }
  return out;
}

}  // namespace

LaurentPoly determinant_poly(const PolyMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  if (n == 0) return LaurentPoly::constant(1);

  PolyMatrix shifted = m;
  std::int64_t total_shift = 0;
  std::int64_t degree_bound = 0;
  for (auto& row : shifted) {
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    for (const auto& e : row)
      if (!e.is_zero()) lo = std::min(lo, e.lowest());
    if (lo == std::numeric_limits<std::int64_t>::max()) return {};
    std::int64_t hi = 0;
    for (auto& e : row) {
      e = shift(e, -lo);
      if (!e.is_zero()) hi = std::max(hi, e.highest());
    }
    total_shift += lo;
    degree_bound += hi;
  }

  const std::size_t points = static_cast<std::size_t>(degree_bound) + 1;
  std::vector<Integer> xs, ys;
  xs.reserve(points);
  ys.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const Integer x = node(i);
    IntMatrix numeric(n, std::vector<Integer>(n));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) numeric[r][c] = eval_poly_at_int(shifted[r][c], x);
    xs.push_back(x);
    ys.push_back(determinant(std::move(numeric)));
  }
  return LaurentPoly(total_shift, interpolate(xs, ys));
}

LaurentPoly alexander_from_seifert(const SeifertMatrix& v) {
  const std::size_t n = v.size();
  IntMatrix at_one(n, std::vector<Integer>(n));
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      at_one[i][j] = v.at(i, j) - v.at(j, i);
      m[i][j] = LaurentPoly(0, std::vector<Integer>{v.at(i, j), -v.at(j, i)});
    }
  }
  const Integer unimodular = determinant(std::move(at_one));
  if (unimodular != 1 && unimodular != -1)
    throw Error(ErrorCode::NotUnitAtOne,
                "det(V - V^T) = " + unimodular.get_str() + ", not a Seifert matrix of a knot");
  return normalize(determinant_poly(m));
}

SeifertMatrix pretzel_seifert_matrix(std::int64_t l, std::int64_t m, std::int64_t n) {
  const Integer L(static_cast<long>(l)), M(static_cast<long>(m)), N(static_cast<long>(n));
  return SeifertMatrix({{L + M + 1, M + 1}, {M, M + N + 1}});
}

bool is_homology_product(const SeifertMatrix& v) {
  const Integer d = determinant(v.entries());
  return d == 1 || d == -1;
}

bool is_homology_product_via_alexander(const SeifertMatrix& v) {
  const LaurentPoly delta = alexander_from_seifert(v);
  if (degree_span(delta) != static_cast<std::int64_t>(2 * v.genus())) return false;
  const Rational at_zero = eval_at(delta, 0);
  return at_zero == 1 || at_zero == -1;
}

}  // namespace hcyl
