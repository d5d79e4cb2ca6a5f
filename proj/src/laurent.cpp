#include "hcyl/laurent.hpp"

#include <algorithm>
#include <utility>

#include "hcyl/error.hpp"

namespace hcyl {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NotUnitAtOne: return "NotUnitAtOne";
    case ErrorCode::PoleAtZero: return "PoleAtZero";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotOneModFour: return "NotOneModFour";
    case ErrorCode::UnsupportedStabilized: return "UnsupportedStabilized";
    case ErrorCode::AlreadyStabilized: return "AlreadyStabilized";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

LaurentPoly::LaurentPoly(std::int64_t lowest, std::vector<Integer> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const Integer& c) { return sgn(c) != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    lowest_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(),
                           [](const Integer& c) { return sgn(c) != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  lowest_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

LaurentPoly::LaurentPoly(std::int64_t lowest, std::initializer_list<long> coeffs)
    : LaurentPoly(lowest, std::vector<Integer>(coeffs.begin(), coeffs.end())) {}

LaurentPoly LaurentPoly::constant(const Integer& c) { return LaurentPoly(0, std::vector<Integer>{c}); }

LaurentPoly LaurentPoly::monomial(const Integer& c, std::int64_t exponent) {
  return LaurentPoly(exponent, std::vector<Integer>{c});
}

std::int64_t LaurentPoly::highest() const {
  return lowest_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Integer LaurentPoly::coeff(std::int64_t e) const {
  if (e < lowest_ || e > highest()) return 0;
  return coeffs_[static_cast<std::size_t>(e - lowest_)];
}

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const std::int64_t lo = std::min(a.lowest(), b.lowest());
  const std::int64_t hi = std::max(a.highest(), b.highest());
  std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    out[static_cast<std::size_t>(a.lowest() - lo) + i] += a.coeffs()[i];
  for (std::size_t i = 0; i < b.coeffs().size(); ++i)
    out[static_cast<std::size_t>(b.lowest() - lo) + i] += b.coeffs()[i];
  return LaurentPoly(lo, std::move(out));
}

LaurentPoly negate(const LaurentPoly& a) {
  std::vector<Integer> out = a.coeffs();
  for (auto& c : out) c = -c;
  return LaurentPoly(a.lowest(), std::move(out));
}

LaurentPoly sub(const LaurentPoly& a, const LaurentPoly& b) { return add(a, negate(b)); }

LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  std::vector<Integer> out(ac.size() + bc.size() - 1);
  for (std::size_t i = 0; i < ac.size(); ++i)
    for (std::size_t j = 0; j < bc.size(); ++j) out[i + j] += ac[i] * bc[j];
  return LaurentPoly(a.lowest() + b.lowest(), std::move(out));
}

LaurentPoly pow(const LaurentPoly& a, unsigned exponent) {
  LaurentPoly result = LaurentPoly::constant(1);
  LaurentPoly base = a;
  while (exponent) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent) base = mul(base, base);
  }
  return result;
}

LaurentPoly shift(const LaurentPoly& a, std::int64_t s) {
  if (a.is_zero()) return a;
  return LaurentPoly(a.lowest() + s, a.coeffs());
}

LaurentPoly normalize(const LaurentPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot normalize the zero polynomial");
  Integer at_one = 0;
  for (const auto& c : a.coeffs()) at_one += c;
  if (at_one != 1 && at_one != -1)
    throw Error(ErrorCode::NotUnitAtOne,
                "polynomial takes value " + at_one.get_str() + " at t = 1, expected +-1");
  LaurentPoly out(0, a.coeffs());
  return at_one == 1 ? out : negate(out);
}

std::int64_t degree_span(const LaurentPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "degree of the zero polynomial");
  return a.highest() - a.lowest();
}

Rational eval_at(const LaurentPoly& a, const Rational& x) {
  if (a.is_zero()) return 0;
  if (sgn(x) == 0) {
    if (a.lowest() < 0)
      throw Error(ErrorCode::PoleAtZero, "negative exponent present, cannot evaluate at 0");
    return a.lowest() == 0 ? Rational(a.coeffs().front()) : Rational(0);
  }
  // Horner over the stored coefficients, then scale by x^lowest.
  Rational acc = 0;
  for (auto it = a.coeffs().rbegin(); it != a.coeffs().rend(); ++it) acc = acc * x + Rational(*it);
  Rational scale = 1;
  const Rational factor = a.lowest() >= 0 ? x : Rational(1) / x;
  for (std::int64_t i = 0, n = a.lowest() >= 0 ? a.lowest() : -a.lowest(); i < n; ++i) scale *= factor;
  Rational out = acc * scale;
  out.canonicalize();
  return out;
}

bool is_symmetric(const LaurentPoly& a) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "symmetry of the zero polynomial");
  const auto& c = a.coeffs();
  const std::size_t n = c.size();
  bool same = true, opposite = true;
  for (std::size_t i = 0; i < n && (same || opposite); ++i) {
    if (c[i] != c[n - 1 - i]) same = false;
    if (c[i] != -c[n - 1 - i]) opposite = false;
  }
  return same || opposite;
}

std::string to_string(const LaurentPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const Integer& c = a.coeffs()[i];
    if (sgn(c) == 0) continue;
    const std::int64_t e = a.lowest() + static_cast<std::int64_t>(i);
    const Integer mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    if (e == 0) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str();
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace hcyl
