#include "hcyl/characters.hpp"

#include <string>

#include "hcyl/error.hpp"
#include "hcyl/intmatrix.hpp"

namespace hcyl {

std::uint64_t rank_value(const WitnessKnot& w) { return hfk_top_rank(w); }

std::uint32_t prime_component(const WitnessKnot& w, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return valuation(rank_value(w), p);
}

std::uint64_t max_prime(const WitnessKnot& w) {
  const auto f = factorize(rank_value(w));
  return f.empty() ? 1 : f.back().prime;
}

CertifiedWitness certify(const WitnessKnot& w) {
  CertifiedWitness out;
  out.witness = w;
  out.rank = rank_value(w);
  out.factorization = factorize(out.rank);
  out.max_prime = out.factorization.empty() ? 1 : out.factorization.back().prime;
  return out;
}

CertifiedWitness witness_for_prime(std::uint64_t p) { return certify(witness(witness_index(p))); }

namespace {

std::uint32_t exponent_in(const std::vector<PrimePower>& f, std::uint64_t p) {
  for (const auto& pp : f)
    if (pp.prime == p) return pp.exponent;
  return 0;
}

}  // namespace

IndependenceCertificate build_certificate(std::size_t count, std::uint64_t search_limit) {
  if (count == 0) throw Error(ErrorCode::InvalidArgument, "certificate count must be at least 1");
  IndependenceCertificate c;
  std::uint64_t last = 1;
  for (std::uint64_t n = 1; n <= search_limit && c.witnesses.size() < count; ++n) {
    CertifiedWitness cw = certify(witness(n));
    if (cw.max_prime <= last) continue;
    last = cw.max_prime;
    c.primes.push_back(cw.max_prime);
    c.witnesses.push_back(std::move(cw));
  }
  if (c.witnesses.size() < count)
    throw Error(ErrorCode::SearchExhausted,
                "found " + std::to_string(c.witnesses.size()) + " of " + std::to_string(count) +
                    " witnesses with indices up to " + std::to_string(search_limit));

  c.evaluation.assign(count, std::vector<std::uint32_t>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      c.evaluation[i][j] = exponent_in(c.witnesses[j].factorization, c.primes[i]);

  if (auto v = verify_certificate(c); !v)
    throw std::logic_error("freshly built certificate failed verification: " + v.reason);
  return c;
}

VerifyResult verify_certificate(const IndependenceCertificate& c) {
  auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
  const std::size_t k = c.witnesses.size();
  if (k == 0) return fail("certificate is empty");
  if (c.primes.size() != k) return fail("primes and witnesses differ in length");
  if (c.evaluation.size() != k) return fail("evaluation matrix has wrong row count");
  for (const auto& row : c.evaluation)
    if (row.size() != k) return fail("evaluation matrix is not square");

  for (std::size_t j = 0; j < k; ++j) {
    const auto& cw = c.witnesses[j];
    const std::string tag = "witness " + std::to_string(j) + ": ";
    std::uint64_t expected_rank = 0;
    try {
      expected_rank = rank_value(cw.witness);
    } catch (const Error& e) {
      return fail(tag + e.what());
    }
    if (cw.rank != expected_rank) return fail(tag + "stored rank does not match the rank formula");
    unsigned __int128 product = 1;
    std::uint64_t prev = 1;
    for (const auto& pp : cw.factorization) {
      if (pp.exponent == 0) return fail(tag + "zero exponent in factorization");
      if (pp.prime <= prev) return fail(tag + "factorization is not strictly ascending");
      if (!is_prime(pp.prime)) return fail(tag + std::to_string(pp.prime) + " is not prime");
      prev = pp.prime;
      for (std::uint32_t e = 0; e < pp.exponent; ++e) {
        product *= pp.prime;
        if (product > expected_rank) return fail(tag + "factorization exceeds the rank");
      }
    }
    if (product != expected_rank) return fail(tag + "factorization does not multiply to the rank");
    const std::uint64_t mp = cw.factorization.empty() ? 1 : cw.factorization.back().prime;
    if (cw.max_prime != mp) return fail(tag + "max_prime is not the largest prime factor");
    if (c.primes[j] != mp) return fail("prime " + std::to_string(j) + " is not p(M) of its witness");
  }

  for (std::size_t i = 1; i < k; ++i)
    if (c.primes[i] <= c.primes[i - 1]) return fail("primes are not strictly increasing");

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (c.evaluation[i][j] != 0)
        return fail("evaluation is not triangular at [" + std::to_string(i) + "][" + std::to_string(j) + "]");
    if (c.evaluation[i][i] == 0) return fail("zero diagonal entry at " + std::to_string(i));
  }

  IntMatrix exact(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (c.evaluation[i][j] != valuation(c.witnesses[j].rank, c.primes[i]))
        return fail("evaluation[" + std::to_string(i) + "][" + std::to_string(j) +
                    "] does not match the factorization");
      exact[i][j] = static_cast<unsigned long>(c.evaluation[i][j]);
    }
  }
  if (rank(std::move(exact)) != k) return fail("evaluation matrix is rank deficient");
  return {};
}

std::uint64_t prime_component_of_product(const std::vector<std::uint64_t>& ranks, std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  std::uint64_t total = 0;
  for (std::uint64_t r : ranks) total += valuation(r, p);
  return total;
}

}  // namespace hcyl
