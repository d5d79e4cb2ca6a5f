#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hcyl/laurent.hpp"

namespace hcyl {

/// The pretzel knot P(2l+1, 2m+1, 2n+1). Strands are odd by construction.
struct PretzelKnot {
  std::int64_t l = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;

  /// Throws InvalidArgument if any strand value is even.
  static PretzelKnot from_strands(std::int64_t a, std::int64_t b, std::int64_t c);

  std::int64_t strand_l() const { return 2 * l + 1; }
  std::int64_t strand_m() const { return 2 * m + 1; }
  std::int64_t strand_n() const { return 2 * n + 1; }

  friend bool operator==(const PretzelKnot&, const PretzelKnot&) = default;
};

/// 1 + l + m + n + lm + mn + nl, the coefficient of (t-1)^2 in the Alexander
/// polynomial. Also its value at t = 0.
Integer pretzel_coefficient(const PretzelKnot& k);

/// Normalized c (t-1)^2 + t.
LaurentPoly alexander_closed_form(const PretzelKnot& k);

/// Genus one with |c| = 1: the polynomial has full degree 2 and a unit
/// constant term.
bool is_homologically_fibered(const PretzelKnot& k);

/// P_index = P(-2 index + 1, 2 index + 1, 2 index^2 + 1), connected-summed
/// with `stab_count` trefoils.
class WitnessKnot {
 public:
  WitnessKnot(std::uint64_t index, std::uint64_t stab_count);

  std::uint64_t index() const { return index_; }
  std::uint64_t stab_count() const { return stab_count_; }
  std::uint64_t genus() const { return stab_count_ + 1; }
  PretzelKnot base() const;

  friend bool operator==(const WitnessKnot&, const WitnessKnot&) = default;

 private:
  std::uint64_t index_;
  std::uint64_t stab_count_;
};

/// Throws InvalidArgument for index 0.
WitnessKnot witness(std::uint64_t index);

/// 2 index^2 - 2 index + 1, unchanged by trefoil summands. Throws Overflow if
/// the rank does not fit in 64 bits.
std::uint64_t hfk_top_rank(const WitnessKnot& w);

/// (Alexander grading, rank) pairs of the top group for an unstabilized
/// witness: [(1, n^2 - n), (2, n^2 - n + 1)]. Throws UnsupportedStabilized.
std::vector<std::pair<int, std::uint64_t>> hfk_bigraded(const WitnessKnot& w);

/// Throws AlreadyStabilized if w already carries trefoil summands.
WitnessKnot stabilize(const WitnessKnot& w, std::uint64_t k);

/// (1 - t + t^2)^stab_count times the closed-form polynomial of the base knot.
LaurentPoly alexander_of_witness(const WitnessKnot& w);

/// Largest index whose rank fits in 64 bits.
inline constexpr std::uint64_t kMaxWitnessIndex = 3037000499ULL;

}  // namespace hcyl
