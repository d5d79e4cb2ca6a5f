#include "hcyl/pretzel.hpp"

#include <string>

#include "hcyl/error.hpp"

namespace hcyl {

namespace {

std::int64_t half_strand(std::int64_t s) {
  if (s % 2 == 0)
    throw Error(ErrorCode::InvalidArgument, "pretzel strand " + std::to_string(s) + " is even");
  // floor((s - 1) / 2) without overflow for negative odd s.
  return (s - 1) / 2;
}

const LaurentPoly& trefoil() {
  static const LaurentPoly poly(0, {1, -1, 1});
  return poly;
}

}  // namespace

PretzelKnot PretzelKnot::from_strands(std::int64_t a, std::int64_t b, std::int64_t c) {
  return PretzelKnot{half_strand(a), half_strand(b), half_strand(c)};
}

Integer pretzel_coefficient(const PretzelKnot& k) {
  const Integer l(static_cast<long>(k.l)), m(static_cast<long>(k.m)), n(static_cast<long>(k.n));
  return 1 + l + m + n + l * m + m * n + n * l;
}

LaurentPoly alexander_closed_form(const PretzelKnot& k) {
  const Integer c = pretzel_coefficient(k);
  // c (t^2 - 2t + 1) + t
  return normalize(LaurentPoly(0, std::vector<Integer>{c, 1 - 2 * c, c}));
}

bool is_homologically_fibered(const PretzelKnot& k) {
  const Integer c = pretzel_coefficient(k);
  return c == 1 || c == -1;
}

WitnessKnot::WitnessKnot(std::uint64_t index, std::uint64_t stab_count)
    : index_(index), stab_count_(stab_count) {
  if (index == 0) throw Error(ErrorCode::InvalidArgument, "witness index must be at least 1");
}

PretzelKnot WitnessKnot::base() const {
  if (index_ > kMaxWitnessIndex)
    throw Error(ErrorCode::Overflow, "witness index " + std::to_string(index_) + " too large");
  const auto n = static_cast<std::int64_t>(index_);
  return PretzelKnot{-n, n, n * n};
}

WitnessKnot witness(std::uint64_t index) { return WitnessKnot(index, 0); }

std::uint64_t hfk_top_rank(const WitnessKnot& w) {
  const std::uint64_t n = w.index();
  if (n > kMaxWitnessIndex)
    throw Error(ErrorCode::Overflow, "rank of witness " + std::to_string(n) + " exceeds 64 bits");
  return 2 * n * n - 2 * n + 1;
}

std::vector<std::pair<int, std::uint64_t>> hfk_bigraded(const WitnessKnot& w) {
  if (w.stab_count() > 0)
    throw Error(ErrorCode::UnsupportedStabilized,
                "bigraded ranks are only known for unstabilized witnesses");
  const std::uint64_t n = w.index();
  if (n > kMaxWitnessIndex)
    throw Error(ErrorCode::Overflow, "rank of witness " + std::to_string(n) + " exceeds 64 bits");
  return {{1, n * n - n}, {2, n * n - n + 1}};
}

WitnessKnot stabilize(const WitnessKnot& w, std::uint64_t k) {
  if (w.stab_count() > 0)
    throw Error(ErrorCode::AlreadyStabilized, "witness already carries trefoil summands");
  return WitnessKnot(w.index(), k);
}

LaurentPoly alexander_of_witness(const WitnessKnot& w) {
  if (w.stab_count() > 1'000'000)
    throw Error(ErrorCode::InvalidArgument, "too many trefoil summands");
  return mul(pow(trefoil(), static_cast<unsigned>(w.stab_count())), alexander_closed_form(w.base()));
}

}  // namespace hcyl
