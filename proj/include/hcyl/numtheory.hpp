#pragma once

#include <cstdint>
#include <vector>

namespace hcyl {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint32_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t x);

/// All primes p <= limit with p = 1 (mod 4), ascending.
std::vector<std::uint64_t> primes_one_mod_four(std::uint64_t limit);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Smallest quadratic non-residue a mod p, by Euler's criterion.
std::uint64_t smallest_nonresidue(std::uint64_t p);

/// m in [1, p) with m^2 = -1 (mod p), computed as a^((p-1)/4) for the
/// smallest non-residue a. Throws NotOneModFour, then NotPrime.
std::uint64_t sqrt_minus_one(std::uint64_t p);

/// Witness index n from a square root m of -1 mod p:
/// (m + 1) / 2 for odd m, (m + p + 1) / 2 for even m.
std::uint64_t witness_index_from_root(std::uint64_t p, std::uint64_t m);

/// witness_index_from_root(p, sqrt_minus_one(p)). 2n^2 - 2n + 1 = 0 (mod p).
std::uint64_t witness_index(std::uint64_t p);

/// Sorted prime factorization; empty for 1. Throws InvalidArgument for 0.
std::vector<PrimePower> factorize(std::uint64_t x);

/// Exponent of p in x (x > 0).
std::uint32_t valuation(std::uint64_t x, std::uint64_t p);

}  // namespace hcyl
