#include "hcyl/numtheory.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "hcyl/error.hpp"

namespace hcyl {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  static constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (x % p == 0) return x == p;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_one_mod_four(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  if (limit < 5) return out;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  for (std::uint64_t p = 5; p <= limit; p += 4)
    if (!composite[p]) out.push_back(p);
  return out;
}

std::uint64_t smallest_nonresidue(std::uint64_t p) {
  const std::uint64_t half = (p - 1) / 2;
  for (std::uint64_t a = 2; a < p; ++a)
    if (pow_mod(a, half, p) == p - 1) return a;
  throw Error(ErrorCode::InvalidArgument, "no quadratic non-residue modulo " + std::to_string(p));
}

namespace {

void require_one_mod_four_prime(std::uint64_t p) {
  if (p % 4 != 1)
    throw Error(ErrorCode::NotOneModFour, std::to_string(p) + " ≢ 1 (mod 4)");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

}  // namespace

std::uint64_t sqrt_minus_one(std::uint64_t p) {
  require_one_mod_four_prime(p);
  return pow_mod(smallest_nonresidue(p), (p - 1) / 4, p);
}

std::uint64_t witness_index_from_root(std::uint64_t p, std::uint64_t m) {
  if (m % 2 == 1) return (m + 1) / 2;
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(m) + p + 1) / 2);
}

std::uint64_t witness_index(std::uint64_t p) { return witness_index_from_root(p, sqrt_minus_one(p)); }

namespace {

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split(std::uint64_t n, std::vector<std::uint64_t>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const std::uint64_t d = pollard_brent(n);
  split(d, primes);
  split(n / d, primes);
}

}  // namespace

std::vector<PrimePower> factorize(std::uint64_t x) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "cannot factorize 0");
  std::vector<std::uint64_t> primes;
  constexpr std::uint64_t kTrialLimit = 1'000'000;
  for (std::uint64_t d = 2; d <= kTrialLimit && d * d <= x; d += (d == 2 ? 1 : 2)) {
    while (x % d == 0) {
      primes.push_back(d);
      x /= d;
    }
  }
  split(x, primes);
  std::sort(primes.begin(), primes.end());

  std::vector<PrimePower> out;
  for (std::uint64_t p : primes) {
    if (!out.empty() && out.back().prime == p)
      ++out.back().exponent;
    else
      out.push_back({p, 1});
  }
  return out;
}

std::uint32_t valuation(std::uint64_t x, std::uint64_t p) {
  if (x == 0 || p < 2) throw Error(ErrorCode::InvalidArgument, "valuation needs x > 0 and p >= 2");
  std::uint32_t e = 0;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  return e;
}

}  // namespace hcyl
