#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hcyl/numtheory.hpp"
#include "hcyl/pretzel.hpp"

namespace hcyl {

/// Value of the rank character R on the homology cylinder carried by w.
std::uint64_t rank_value(const WitnessKnot& w);

/// R_p(w): exponent of p in rank_value(w). Throws NotPrime.
std::uint32_t prime_component(const WitnessKnot& w, std::uint64_t p);

/// Largest prime dividing the rank, or 1 when the rank is 1.
std::uint64_t max_prime(const WitnessKnot& w);

struct CertifiedWitness {
  WitnessKnot witness{1, 0};
  std::uint64_t rank = 1;
  std::vector<PrimePower> factorization;
  std::uint64_t max_prime = 1;

  friend bool operator==(const CertifiedWitness&, const CertifiedWitness&) = default;
};

CertifiedWitness certify(const WitnessKnot& w);

/// Witness P_n with n = witness_index(p). Throws NotOneModFour, NotPrime.
CertifiedWitness witness_for_prime(std::uint64_t p);

/// Triangular evaluation of prime components on witnesses:
/// evaluation[i][j] = R_{primes[i]}(witnesses[j]).
struct IndependenceCertificate {
  std::vector<CertifiedWitness> witnesses;
  std::vector<std::uint64_t> primes;
  std::vector<std::vector<std::uint32_t>> evaluation;

  friend bool operator==(const IndependenceCertificate&, const IndependenceCertificate&) = default;
};

/// Scans witness indices 1..search_limit and keeps each witness whose max
/// prime strictly exceeds the last kept one, until `count` are kept.
/// Throws SearchExhausted, or InvalidArgument for count = 0.
IndependenceCertificate build_certificate(std::size_t count, std::uint64_t search_limit);

struct VerifyResult {
  bool ok = true;
  std::string reason;  // empty when ok

  explicit operator bool() const { return ok; }
};

/// Recomputes everything from the stored witnesses; trusts nothing the
/// builder wrote.
VerifyResult verify_certificate(const IndependenceCertificate& c);

/// Exponent of p in the product of the given ranks, computed one factor at a
/// time. R is multiplicative, so this is R_p of the formal product.
std::uint64_t prime_component_of_product(const std::vector<std::uint64_t>& ranks, std::uint64_t p);

}  // namespace hcyl
