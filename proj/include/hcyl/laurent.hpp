#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hcyl {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer Laurent polynomial in one variable t.
///
/// Stored as a dense coefficient list starting at `lowest()`. The constructor
/// trims leading and trailing zeros, so two equal polynomials always have
/// identical representations; the zero polynomial has no coefficients and
/// lowest exponent 0.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::int64_t lowest, std::vector<Integer> coeffs);
  LaurentPoly(std::int64_t lowest, std::initializer_list<long> coeffs);

  static LaurentPoly constant(const Integer& c);
  static LaurentPoly monomial(const Integer& c, std::int64_t exponent);

  std::int64_t lowest() const { return lowest_; }
  std::int64_t highest() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Coefficient of t^e (zero outside the stored range).
  Integer coeff(std::int64_t e) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::int64_t lowest_ = 0;
  std::vector<Integer> coeffs_;
};

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly negate(const LaurentPoly& a);
LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly pow(const LaurentPoly& a, unsigned exponent);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return mul(a, b); }

/// Multiply by t^shift.
LaurentPoly shift(const LaurentPoly& a, std::int64_t shift);

/// Canonical Alexander-polynomial form: lowest degree 0 and value +1 at t = 1.
/// Throws ZeroPolynomial for 0 and NotUnitAtOne when a(1) is not +-1.
LaurentPoly normalize(const LaurentPoly& a);

/// highest exponent minus lowest exponent. Throws ZeroPolynomial.
std::int64_t degree_span(const LaurentPoly& a);

/// Exact evaluation. Throws PoleAtZero for x = 0 with a negative exponent present.
Rational eval_at(const LaurentPoly& a, const Rational& x);

/// True iff the coefficient list is a palindrome up to a global sign.
/// Throws ZeroPolynomial.
bool is_symmetric(const LaurentPoly& a);

/// Ascending-exponent rendering, e.g. "1 - t + t^2".
std::string to_string(const LaurentPoly& a);

}  // namespace hcyl
