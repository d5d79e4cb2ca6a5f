#pragma once

// Brute-force reference implementations used only by the tests. None of
// these share code with the library.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

// Sparse polynomial in t as exponent -> coefficient.
using SparsePoly = std::map<long, mpz_class>;

inline SparsePoly trim(SparsePoly p) {
  for (auto it = p.begin(); it != p.end();) it = (it->second == 0) ? p.erase(it) : std::next(it);
  return p;
}

inline SparsePoly add(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out = a;
  for (const auto& [e, c] : b) out[e] += c;
  return trim(out);
}

inline SparsePoly mul(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  return trim(out);
}

inline SparsePoly scale(const SparsePoly& a, long s) {
  SparsePoly out;
  for (const auto& [e, c] : a) out[e] = c * s;
  return trim(out);
}

// Laplace expansion along the first row.
inline SparsePoly cofactor_det(const std::vector<std::vector<SparsePoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return {{0, 1}};
  if (n == 1) return m[0][0];
  SparsePoly total;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<SparsePoly>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<SparsePoly> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != col) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    total = add(total, scale(mul(m[0][col], cofactor_det(minor)), col % 2 == 0 ? 1 : -1));
  }
  return total;
}

// Alexander polynomial of a Seifert matrix by cofactor expansion of
// V - t V^T, normalized to lowest exponent 0 and value +1 at t = 1.
// Returns coefficients from t^0 upwards.
inline std::vector<mpz_class> alexander(const std::vector<std::vector<long>>& v) {
  const std::size_t n = v.size();
  std::vector<std::vector<SparsePoly>> m(n, std::vector<SparsePoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = trim({{0, v[i][j]}, {1, -v[j][i]}});
  const SparsePoly d = cofactor_det(m);
  if (d.empty()) return {};
  const long lo = d.begin()->first, hi = d.rbegin()->first;
  mpz_class at_one = 0;
  for (const auto& [e, c] : d) at_one += c;
  std::vector<mpz_class> out(static_cast<std::size_t>(hi - lo + 1), 0);
  for (const auto& [e, c] : d) out[static_cast<std::size_t>(e - lo)] = at_one < 0 ? mpz_class(-c) : c;
  return out;
}

inline bool trial_is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d = 2; d * d <= x; ++d)
    if (x % d == 0) return false;
  return true;
}

inline std::vector<std::pair<std::uint64_t, std::uint32_t>> trial_factor(std::uint64_t x) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d * d <= x; ++d) {
    std::uint32_t e = 0;
    while (x % d == 0) {
      x /= d;
      ++e;
    }
    if (e) out.emplace_back(d, e);
  }
  if (x > 1) out.emplace_back(x, 1);
  return out;
}

// All m in [1, p) with m^2 = -1 mod p.
inline std::vector<std::uint64_t> scan_sqrt_minus_one(std::uint64_t p) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < p; ++m)
    if ((m * m + 1) % p == 0) out.push_back(m);
  return out;
}

// Rank over Q by plain Gaussian elimination on rationals.
inline std::size_t rational_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

}  // namespace oracle
