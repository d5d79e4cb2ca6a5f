#include "hcyl/selftest.hpp"

#include <algorithm>

#include "hcyl/characters.hpp"
#include "hcyl/error.hpp"
#include "hcyl/numtheory.hpp"
#include "hcyl/seifert.hpp"

namespace hcyl {

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck& c) { return c.ok; });
}

std::string SelftestReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return c.name;
  return {};
}

namespace {

template <typename Fn>
SelftestCheck run_check(std::string name, Fn&& body) {
  SelftestCheck check{std::move(name), false, {}};
  try {
    check.detail = body();
    check.ok = check.detail.empty();
  } catch (const std::exception& e) {
    check.detail = e.what();
  }
  return check;
}

std::string pretzel_box(std::int64_t radius) {
  for (std::int64_t l = -radius; l <= radius; ++l)
    for (std::int64_t m = -radius; m <= radius; ++m)
      for (std::int64_t n = -radius; n <= radius; ++n) {
        const PretzelKnot k{l, m, n};
        const SeifertMatrix v = pretzel_seifert_matrix(l, m, n);
        if (alexander_from_seifert(v) != alexander_closed_form(k) ||
            is_homology_product(v) != is_homologically_fibered(k))
          return "routes disagree at (l,m,n) = (" + std::to_string(l) + "," + std::to_string(m) + "," +
                 std::to_string(n) + ")";
      }
  return {};
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  const auto top_rank = [&](const WitnessKnot& w) {
    return options.rank_override ? options.rank_override(w) : hfk_top_rank(w);
  };

  SelftestReport report;
  report.checks.push_back(run_check("pretzel box", [&] { return pretzel_box(options.fast ? 6 : 15); }));

  report.checks.push_back(run_check("rank formula", [&]() -> std::string {
    for (std::uint64_t n = 1; n <= 100; ++n) {
      const WitnessKnot w = witness(n);
      const auto split = hfk_bigraded(w);
      const std::uint64_t r = top_rank(w);
      if (r != split[0].second + split[1].second || r != 2 * n * n - 2 * n + 1)
        return "rank of P_" + std::to_string(n) + " is " + std::to_string(r);
      if (top_rank(stabilize(w, 3)) != r) return "stabilization changed the rank of P_" + std::to_string(n);
    }
    return {};
  }));

  report.checks.push_back(run_check("witness verification", [&]() -> std::string {
    for (std::uint64_t p : primes_one_mod_four(options.fast ? 1000 : 10000)) {
      const std::uint64_t m = sqrt_minus_one(p);
      if (mul_mod(m, m, p) != p - 1) return "bad square root of -1 mod " + std::to_string(p);
      const WitnessKnot w = witness(witness_index(p));
      if (top_rank(w) % p != 0) return "witness rank not divisible by " + std::to_string(p);
    }
    return {};
  }));

  report.checks.push_back(run_check("certificate", [&]() -> std::string {
    const auto c = build_certificate(options.fast ? 10 : 25, 10000);
    if (auto v = verify_certificate(c); !v) return v.reason;
    for (const auto& cw : c.witnesses)
      if (top_rank(cw.witness) != cw.rank) return "certificate rank disagrees with the rank formula";
    return {};
  }));
  return report;
}

}  // namespace hcyl
