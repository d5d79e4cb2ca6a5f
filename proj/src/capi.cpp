#include "hcyl/hcyl.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hcyl/characters.hpp"
#include "hcyl/error.hpp"
#include "hcyl/json_io.hpp"
#include "hcyl/laurent.hpp"
#include "hcyl/numtheory.hpp"
#include "hcyl/pretzel.hpp"
#include "hcyl/seifert.hpp"
#include "hcyl/selftest.hpp"

struct hcyl_poly {
  hcyl::LaurentPoly value;
};
struct hcyl_seifert {
  hcyl::SeifertMatrix value;
};
struct hcyl_witness {
  hcyl::WitnessKnot value;
};
struct hcyl_certificate {
  hcyl::IndependenceCertificate value;
};

namespace {

thread_local std::string last_error;

hcyl_status map_code(hcyl::ErrorCode code) {
  using hcyl::ErrorCode;
  switch (code) {
    case ErrorCode::ZeroPolynomial: return HCYL_ERR_ZERO_POLYNOMIAL;
    case ErrorCode::NotUnitAtOne: return HCYL_ERR_NOT_UNIT_AT_ONE;
    case ErrorCode::PoleAtZero: return HCYL_ERR_POLE_AT_ZERO;
    case ErrorCode::NotPrime: return HCYL_ERR_NOT_PRIME;
    case ErrorCode::NotOneModFour: return HCYL_ERR_NOT_ONE_MOD_FOUR;
    case ErrorCode::UnsupportedStabilized: return HCYL_ERR_UNSUPPORTED_STABILIZED;
    case ErrorCode::AlreadyStabilized: return HCYL_ERR_ALREADY_STABILIZED;
    case ErrorCode::SearchExhausted: return HCYL_ERR_SEARCH_EXHAUSTED;
    case ErrorCode::InvalidArgument: return HCYL_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return HCYL_ERR_PARSE;
    case ErrorCode::Overflow: return HCYL_ERR_OVERFLOW;
  }
  return HCYL_ERR_INTERNAL;
}

hcyl_status fail(hcyl_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Fn>
hcyl_status guarded(Fn&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const hcyl::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(HCYL_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(HCYL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(HCYL_ERR_INTERNAL, e.what());
  }
}

#define HCYL_REQUIRE(ptr)                                                   \
  do {                                                                      \
    if ((ptr) == nullptr) return fail(HCYL_ERR_INVALID_ARGUMENT, #ptr " is NULL"); \
  } while (0)

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hcyl_status emit(const std::string& s, char** out) {
  *out = copy_string(s);
  return HCYL_OK;
}

hcyl_status emit_poly(hcyl::LaurentPoly p, hcyl_poly** out) {
  *out = new hcyl_poly{std::move(p)};
  return HCYL_OK;
}

hcyl::PretzelKnot strands(int64_t a, int64_t b, int64_t c) { return hcyl::PretzelKnot::from_strands(a, b, c); }

}  // namespace

extern "C" {

const char* hcyl_version(void) { return "1.0.0"; }

const char* hcyl_status_name(hcyl_status status) {
  switch (status) {
    case HCYL_OK: return "OK";
    case HCYL_ERR_ZERO_POLYNOMIAL: return "ZeroPolynomial";
    case HCYL_ERR_NOT_UNIT_AT_ONE: return "NotUnitAtOne";
    case HCYL_ERR_POLE_AT_ZERO: return "PoleAtZero";
    case HCYL_ERR_NOT_PRIME: return "NotPrime";
    case HCYL_ERR_NOT_ONE_MOD_FOUR: return "NotOneModFour";
    case HCYL_ERR_UNSUPPORTED_STABILIZED: return "UnsupportedStabilized";
    case HCYL_ERR_ALREADY_STABILIZED: return "AlreadyStabilized";
    case HCYL_ERR_SEARCH_EXHAUSTED: return "SearchExhausted";
    case HCYL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case HCYL_ERR_PARSE: return "Parse";
    case HCYL_ERR_OVERFLOW: return "Overflow";
    case HCYL_ERR_VERIFICATION_FAILED: return "VerificationFailed";
    case HCYL_ERR_SELFTEST_FAILED: return "SelftestFailed";
    case HCYL_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* hcyl_last_error(void) { return last_error.c_str(); }

void hcyl_string_free(char* s) { std::free(s); }

// ---- polynomials ----

hcyl_status hcyl_poly_from_json(const char* json, hcyl_poly** out) {
  HCYL_REQUIRE(json);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit_poly(hcyl::io::poly_from_json(hcyl::io::parse(json)), out); });
}

hcyl_status hcyl_poly_to_json(const hcyl_poly* p, char** out) {
  HCYL_REQUIRE(p);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit(hcyl::io::to_json(p->value).dump(), out); });
}

hcyl_status hcyl_poly_to_string(const hcyl_poly* p, char** out) {
  HCYL_REQUIRE(p);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit(hcyl::to_string(p->value), out); });
}

hcyl_status hcyl_poly_add(const hcyl_poly* a, const hcyl_poly* b, hcyl_poly** out) {
  HCYL_REQUIRE(a);
  HCYL_REQUIRE(b);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit_poly(hcyl::add(a->value, b->value), out); });
}

hcyl_status hcyl_poly_mul(const hcyl_poly* a, const hcyl_poly* b, hcyl_poly** out) {
  HCYL_REQUIRE(a);
  HCYL_REQUIRE(b);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit_poly(hcyl::mul(a->value, b->value), out); });
}

hcyl_status hcyl_poly_normalize(const hcyl_poly* a, hcyl_poly** out) {
  HCYL_REQUIRE(a);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit_poly(hcyl::normalize(a->value), out); });
}

hcyl_status hcyl_poly_degree_span(const hcyl_poly* a, int64_t* out) {
  HCYL_REQUIRE(a);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::degree_span(a->value);
    return HCYL_OK;
  });
}

hcyl_status hcyl_poly_eval(const hcyl_poly* a, const char* x, char** out) {
  HCYL_REQUIRE(a);
  HCYL_REQUIRE(x);
  HCYL_REQUIRE(out);
  return guarded([&] {
    hcyl::Rational q;
    if (q.set_str(x, 10) != 0 || q.get_den() == 0)
      return fail(HCYL_ERR_PARSE, std::string("bad rational '") + x + "'");
    q.canonicalize();
    return emit(hcyl::eval_at(a->value, q).get_str(), out);
  });
}

hcyl_status hcyl_poly_is_symmetric(const hcyl_poly* a, int* out) {
  HCYL_REQUIRE(a);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::is_symmetric(a->value) ? 1 : 0;
    return HCYL_OK;
  });
}

void hcyl_poly_free(hcyl_poly* p) { delete p; }

// ---- Seifert matrices ----

hcyl_status hcyl_seifert_from_json(const char* json, hcyl_seifert** out) {
  HCYL_REQUIRE(json);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = new hcyl_seifert{hcyl::io::seifert_from_json(hcyl::io::parse(json))};
    return HCYL_OK;
  });
}

hcyl_status hcyl_seifert_pretzel(int64_t l, int64_t m, int64_t n, hcyl_seifert** out) {
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = new hcyl_seifert{hcyl::pretzel_seifert_matrix(l, m, n)};
    return HCYL_OK;
  });
}

hcyl_status hcyl_seifert_to_json(const hcyl_seifert* v, char** out) {
  HCYL_REQUIRE(v);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit(hcyl::io::to_json(v->value).dump(), out); });
}

hcyl_status hcyl_seifert_genus(const hcyl_seifert* v, uint64_t* out) {
  HCYL_REQUIRE(v);
  HCYL_REQUIRE(out);
  *out = v->value.genus();
  return HCYL_OK;
}

hcyl_status hcyl_seifert_alexander(const hcyl_seifert* v, hcyl_poly** out) {
  HCYL_REQUIRE(v);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit_poly(hcyl::alexander_from_seifert(v->value), out); });
}

hcyl_status hcyl_seifert_is_homology_product(const hcyl_seifert* v, int* out) {
  HCYL_REQUIRE(v);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::is_homology_product(v->value) ? 1 : 0;
    return HCYL_OK;
  });
}

void hcyl_seifert_free(hcyl_seifert* v) { delete v; }

// ---- pretzel knots ----

hcyl_status hcyl_pretzel_alexander(int64_t a, int64_t b, int64_t c, hcyl_poly** out) {
  HCYL_REQUIRE(out);
  return guarded([&] { return emit_poly(hcyl::alexander_closed_form(strands(a, b, c)), out); });
}

hcyl_status hcyl_pretzel_is_homologically_fibered(int64_t a, int64_t b, int64_t c, int* out) {
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::is_homologically_fibered(strands(a, b, c)) ? 1 : 0;
    return HCYL_OK;
  });
}

// ---- witnesses ----

hcyl_status hcyl_witness_new(uint64_t index, hcyl_witness** out) {
  HCYL_REQUIRE(out);
  return guarded([&] {
    if (index > hcyl::kMaxWitnessIndex) return fail(HCYL_ERR_OVERFLOW, "witness index out of range");
    *out = new hcyl_witness{hcyl::witness(index)};
    return HCYL_OK;
  });
}

hcyl_status hcyl_witness_stabilize(const hcyl_witness* w, uint64_t k, hcyl_witness** out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = new hcyl_witness{hcyl::stabilize(w->value, k)};
    return HCYL_OK;
  });
}

hcyl_status hcyl_witness_index(const hcyl_witness* w, uint64_t* out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  *out = w->value.index();
  return HCYL_OK;
}

hcyl_status hcyl_witness_stab_count(const hcyl_witness* w, uint64_t* out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  *out = w->value.stab_count();
  return HCYL_OK;
}

hcyl_status hcyl_witness_genus(const hcyl_witness* w, uint64_t* out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  *out = w->value.genus();
  return HCYL_OK;
}

hcyl_status hcyl_witness_strands(const hcyl_witness* w, int64_t out[3]) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  return guarded([&] {
    const hcyl::PretzelKnot k = w->value.base();
    out[0] = k.strand_l();
    out[1] = k.strand_m();
    out[2] = k.strand_n();
    return HCYL_OK;
  });
}

hcyl_status hcyl_witness_top_rank(const hcyl_witness* w, uint64_t* out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::hfk_top_rank(w->value);
    return HCYL_OK;
  });
}

hcyl_status hcyl_witness_bigraded(const hcyl_witness* w, uint64_t* grading1, uint64_t* grading2) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(grading1);
  HCYL_REQUIRE(grading2);
  return guarded([&] {
    const auto split = hcyl::hfk_bigraded(w->value);
    *grading1 = split[0].second;
    *grading2 = split[1].second;
    return HCYL_OK;
  });
}

hcyl_status hcyl_witness_alexander(const hcyl_witness* w, hcyl_poly** out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit_poly(hcyl::alexander_of_witness(w->value), out); });
}

hcyl_status hcyl_witness_prime_component(const hcyl_witness* w, uint64_t p, uint32_t* out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::prime_component(w->value, p);
    return HCYL_OK;
  });
}

hcyl_status hcyl_witness_max_prime(const hcyl_witness* w, uint64_t* out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::max_prime(w->value);
    return HCYL_OK;
  });
}

hcyl_status hcyl_witness_to_json(const hcyl_witness* w, char** out) {
  HCYL_REQUIRE(w);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit(hcyl::io::to_json(w->value).dump(), out); });
}

void hcyl_witness_free(hcyl_witness* w) { delete w; }

// ---- number theory ----

hcyl_status hcyl_is_prime(uint64_t x, int* out) {
  HCYL_REQUIRE(out);
  *out = hcyl::is_prime(x) ? 1 : 0;
  return HCYL_OK;
}

hcyl_status hcyl_sqrt_minus_one(uint64_t p, uint64_t* out) {
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::sqrt_minus_one(p);
    return HCYL_OK;
  });
}

hcyl_status hcyl_witness_index_for_prime(uint64_t p, uint64_t* out) {
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = hcyl::witness_index(p);
    return HCYL_OK;
  });
}

hcyl_status hcyl_factorize(uint64_t x, hcyl_prime_power* out, size_t capacity, size_t* count) {
  HCYL_REQUIRE(count);
  return guarded([&] {
    const auto f = hcyl::factorize(x);
    *count = f.size();
    if (out != nullptr)
      for (size_t i = 0; i < f.size() && i < capacity; ++i) out[i] = {f[i].prime, f[i].exponent};
    return HCYL_OK;
  });
}

hcyl_status hcyl_primes_one_mod_four(uint64_t limit, uint64_t* out, size_t capacity, size_t* count) {
  HCYL_REQUIRE(count);
  return guarded([&] {
    if (limit > (uint64_t{1} << 34)) return fail(HCYL_ERR_INVALID_ARGUMENT, "sieve limit too large");
    const auto primes = hcyl::primes_one_mod_four(limit);
    *count = primes.size();
    if (out != nullptr)
      for (size_t i = 0; i < primes.size() && i < capacity; ++i) out[i] = primes[i];
    return HCYL_OK;
  });
}

// ---- certificates ----

hcyl_status hcyl_certificate_build(size_t count, uint64_t search_limit, hcyl_certificate** out) {
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = new hcyl_certificate{hcyl::build_certificate(count, search_limit)};
    return HCYL_OK;
  });
}

hcyl_status hcyl_certificate_from_json(const char* json, hcyl_certificate** out) {
  HCYL_REQUIRE(json);
  HCYL_REQUIRE(out);
  return guarded([&] {
    *out = new hcyl_certificate{hcyl::io::certificate_from_json(hcyl::io::parse(json))};
    return HCYL_OK;
  });
}

hcyl_status hcyl_certificate_to_json(const hcyl_certificate* c, char** out) {
  HCYL_REQUIRE(c);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit(hcyl::io::to_json(c->value).dump(), out); });
}

hcyl_status hcyl_certificate_to_csv(const hcyl_certificate* c, char** out) {
  HCYL_REQUIRE(c);
  HCYL_REQUIRE(out);
  return guarded([&] { return emit(hcyl::io::certificate_csv(c->value), out); });
}

hcyl_status hcyl_certificate_size(const hcyl_certificate* c, size_t* out) {
  HCYL_REQUIRE(c);
  HCYL_REQUIRE(out);
  *out = c->value.witnesses.size();
  return HCYL_OK;
}

hcyl_status hcyl_certificate_verify(const hcyl_certificate* c, int* ok, char** reason) {
  HCYL_REQUIRE(c);
  HCYL_REQUIRE(ok);
  return guarded([&] {
    const auto result = hcyl::verify_certificate(c->value);
    *ok = result.ok ? 1 : 0;
    if (reason != nullptr) *reason = result.ok ? nullptr : copy_string(result.reason);
    return HCYL_OK;
  });
}

void hcyl_certificate_free(hcyl_certificate* c) { delete c; }

// ---- self test ----

hcyl_status hcyl_selftest(int fast, hcyl_rank_fn rank_override, char** report) {
  return guarded([&] {
    hcyl::SelftestOptions options;
    options.fast = fast != 0;
    if (rank_override != nullptr)
      options.rank_override = [rank_override](const hcyl::WitnessKnot& w) {
        return rank_override(w.index(), w.stab_count());
      };
    const auto result = hcyl::run_selftest(options);
    if (report != nullptr) {
      nlohmann::json checks = nlohmann::json::array();
      for (const auto& c : result.checks)
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
      *report = copy_string(nlohmann::json{{"passed", result.passed()}, {"checks", checks}}.dump());
    }
    if (!result.passed())
      return fail(HCYL_ERR_SELFTEST_FAILED, "self test failed: " + result.first_failure());
    return HCYL_OK;
  });
}

}  // extern "C"
