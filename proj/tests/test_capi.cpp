#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "hcyl/hcyl.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  hcyl_string_free(s);
  return out;
}

uint64_t sabotaged_rank(uint64_t index, uint64_t) { return 2 * index * index - 2 * index + 3; }

}  // namespace

TEST_CASE("polynomial handles") {
  hcyl_poly* a = nullptr;
  REQUIRE(hcyl_poly_from_json(R"({"lowest": 1, "coeffs": [-1, 1, -1]})", &a) == HCYL_OK);
  hcyl_poly* n = nullptr;
  REQUIRE(hcyl_poly_normalize(a, &n) == HCYL_OK);
  char* s = nullptr;
  REQUIRE(hcyl_poly_to_string(n, &s) == HCYL_OK);
  CHECK(take(s) == "1 - t + t^2");
  int64_t span = 0;
  CHECK(hcyl_poly_degree_span(n, &span) == HCYL_OK);
  CHECK(span == 2);
  int sym = 0;
  CHECK(hcyl_poly_is_symmetric(n, &sym) == HCYL_OK);
  CHECK(sym == 1);
  REQUIRE(hcyl_poly_eval(n, "1/2", &s) == HCYL_OK);
  CHECK(take(s) == "3/4");
  hcyl_poly* sq = nullptr;
  REQUIRE(hcyl_poly_mul(n, n, &sq) == HCYL_OK);
  REQUIRE(hcyl_poly_to_json(sq, &s) == HCYL_OK);
  CHECK(take(s) == R"({"coeffs":[1,-2,3,-2,1],"lowest":0})");
  hcyl_poly* sum = nullptr;
  REQUIRE(hcyl_poly_add(n, sq, &sum) == HCYL_OK);
  hcyl_poly_free(sum);
  hcyl_poly_free(sq);
  hcyl_poly_free(n);
  hcyl_poly_free(a);

  hcyl_poly* zero = nullptr;
  REQUIRE(hcyl_poly_from_json(R"({"lowest": 0, "coeffs": []})", &zero) == HCYL_OK);
  CHECK(hcyl_poly_normalize(zero, &n) == HCYL_ERR_ZERO_POLYNOMIAL);
  CHECK(std::string(hcyl_last_error()).size() > 0);
  hcyl_poly_free(zero);

  hcyl_poly* pole = nullptr;
  REQUIRE(hcyl_poly_from_json(R"({"lowest": -1, "coeffs": [1, 1]})", &pole) == HCYL_OK);
  CHECK(hcyl_poly_eval(pole, "0", &s) == HCYL_ERR_POLE_AT_ZERO);
  CHECK(hcyl_poly_eval(pole, "x", &s) == HCYL_ERR_PARSE);
  hcyl_poly_free(pole);

  CHECK(hcyl_poly_from_json("{", &a) == HCYL_ERR_PARSE);
  CHECK(hcyl_poly_from_json(nullptr, &a) == HCYL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("Seifert and pretzel entry points") {
  hcyl_seifert* v = nullptr;
  REQUIRE(hcyl_seifert_from_json(R"({"size": 2, "entries": [[1, 1], [0, 1]]})", &v) == HCYL_OK);
  hcyl_poly* p = nullptr;
  REQUIRE(hcyl_seifert_alexander(v, &p) == HCYL_OK);
  char* s = nullptr;
  REQUIRE(hcyl_poly_to_string(p, &s) == HCYL_OK);
  CHECK(take(s) == "1 - t + t^2");
  int hp = 0;
  CHECK(hcyl_seifert_is_homology_product(v, &hp) == HCYL_OK);
  CHECK(hp == 1);
  uint64_t genus = 0;
  CHECK(hcyl_seifert_genus(v, &genus) == HCYL_OK);
  CHECK(genus == 1);
  hcyl_poly_free(p);
  hcyl_seifert_free(v);

  REQUIRE(hcyl_seifert_pretzel(-2, 2, 8, &v) == HCYL_OK);
  REQUIRE(hcyl_seifert_to_json(v, &s) == HCYL_OK);
  CHECK(take(s) == R"({"entries":[[1,3],[2,11]],"size":2})");
  hcyl_seifert_free(v);

  REQUIRE(hcyl_seifert_from_json(R"({"size": 2, "entries": [[1, 0], [0, 1]]})", &v) == HCYL_OK);
  CHECK(hcyl_seifert_alexander(v, &p) == HCYL_ERR_NOT_UNIT_AT_ONE);
  hcyl_seifert_free(v);
  CHECK(hcyl_seifert_from_json(R"({"size": 1, "entries": [[1]]})", &v) == HCYL_ERR_INVALID_ARGUMENT);

  REQUIRE(hcyl_pretzel_alexander(1, 1, -1, &p) == HCYL_OK);
  REQUIRE(hcyl_poly_to_string(p, &s) == HCYL_OK);
  CHECK(take(s) == "1");
  hcyl_poly_free(p);
  CHECK(hcyl_pretzel_alexander(2, 1, 1, &p) == HCYL_ERR_INVALID_ARGUMENT);
  int f = 0;
  CHECK(hcyl_pretzel_is_homologically_fibered(-1, 3, 3, &f) == HCYL_OK);
  CHECK(f == 1);
  CHECK(hcyl_pretzel_is_homologically_fibered(3, 3, 3, &f) == HCYL_OK);
  CHECK(f == 0);
}

TEST_CASE("witness handles") {
  hcyl_witness* w = nullptr;
  REQUIRE(hcyl_witness_new(2, &w) == HCYL_OK);
  uint64_t g1 = 0, g2 = 0, rank = 0, mp = 0;
  CHECK(hcyl_witness_bigraded(w, &g1, &g2) == HCYL_OK);
  CHECK(g1 == 2);
  CHECK(g2 == 3);
  int64_t strands[3] = {};
  CHECK(hcyl_witness_strands(w, strands) == HCYL_OK);
  CHECK(strands[0] == -3);
  CHECK(strands[1] == 5);
  CHECK(strands[2] == 9);
  hcyl_witness* s = nullptr;
  REQUIRE(hcyl_witness_stabilize(w, 3, &s) == HCYL_OK);
  CHECK(hcyl_witness_top_rank(s, &rank) == HCYL_OK);
  CHECK(rank == 5);
  CHECK(hcyl_witness_bigraded(s, &g1, &g2) == HCYL_ERR_UNSUPPORTED_STABILIZED);
  hcyl_witness* again = nullptr;
  CHECK(hcyl_witness_stabilize(s, 1, &again) == HCYL_ERR_ALREADY_STABILIZED);
  char* text = nullptr;
  REQUIRE(hcyl_witness_to_json(s, &text) == HCYL_OK);
  CHECK(take(text) == R"({"genus":4,"index":2,"pretzel":[-3,5,9],"stab":3,"top_rank":5})");
  CHECK(hcyl_witness_max_prime(s, &mp) == HCYL_OK);
  CHECK(mp == 5);
  uint32_t comp = 0;
  CHECK(hcyl_witness_prime_component(s, 5, &comp) == HCYL_OK);
  CHECK(comp == 1);
  CHECK(hcyl_witness_prime_component(s, 4, &comp) == HCYL_ERR_NOT_PRIME);
  hcyl_poly* p = nullptr;
  REQUIRE(hcyl_witness_alexander(s, &p) == HCYL_OK);
  int64_t span = 0;
  CHECK(hcyl_poly_degree_span(p, &span) == HCYL_OK);
  CHECK(span == 8);
  hcyl_poly_free(p);
  hcyl_witness_free(s);
  hcyl_witness_free(w);
  CHECK(hcyl_witness_new(0, &w) == HCYL_ERR_INVALID_ARGUMENT);
}

TEST_CASE("number theory entry points") {
  uint64_t m = 0, n = 0;
  CHECK(hcyl_sqrt_minus_one(13, &m) == HCYL_OK);
  CHECK(m == 8);
  CHECK(hcyl_witness_index_for_prime(13, &n) == HCYL_OK);
  CHECK(n == 11);
  CHECK(hcyl_sqrt_minus_one(7, &m) == HCYL_ERR_NOT_ONE_MOD_FOUR);
  CHECK(hcyl_sqrt_minus_one(21, &m) == HCYL_ERR_NOT_PRIME);

  size_t count = 0;
  REQUIRE(hcyl_factorize(221, nullptr, 0, &count) == HCYL_OK);
  CHECK(count == 2);
  std::vector<hcyl_prime_power> f(count);
  REQUIRE(hcyl_factorize(221, f.data(), f.size(), &count) == HCYL_OK);
  CHECK(f[0].prime == 13);
  CHECK(f[1].prime == 17);

  REQUIRE(hcyl_primes_one_mod_four(30, nullptr, 0, &count) == HCYL_OK);
  std::vector<uint64_t> primes(count);
  REQUIRE(hcyl_primes_one_mod_four(30, primes.data(), primes.size(), &count) == HCYL_OK);
  CHECK(primes == std::vector<uint64_t>{5, 13, 17, 29});

  int prime = 0;
  CHECK(hcyl_is_prime(97, &prime) == HCYL_OK);
  CHECK(prime == 1);
}

TEST_CASE("certificate handles") {
  hcyl_certificate* c = nullptr;
  REQUIRE(hcyl_certificate_build(2, 10, &c) == HCYL_OK);
  size_t size = 0;
  CHECK(hcyl_certificate_size(c, &size) == HCYL_OK);
  CHECK(size == 2);
  int ok = 0;
  char* reason = nullptr;
  CHECK(hcyl_certificate_verify(c, &ok, &reason) == HCYL_OK);
  CHECK(ok == 1);
  CHECK(reason == nullptr);
  char* csv = nullptr;
  REQUIRE(hcyl_certificate_to_csv(c, &csv) == HCYL_OK);
  CHECK(take(csv) == "prime,n=2,n=3\n5,1,0\n13,0,1\n");
  char* text = nullptr;
  REQUIRE(hcyl_certificate_to_json(c, &text) == HCYL_OK);
  std::string json = take(text);
  hcyl_certificate_free(c);

  // Tamper with the diagonal through the JSON surface.
  const auto pos = json.find(R"("matrix":[[1,)");
  REQUIRE(pos != std::string::npos);
  json.replace(pos, 13, R"("matrix":[[0,)");
  REQUIRE(hcyl_certificate_from_json(json.c_str(), &c) == HCYL_OK);
  CHECK(hcyl_certificate_verify(c, &ok, &reason) == HCYL_OK);
  CHECK(ok == 0);
  CHECK(take(reason).find("diagonal") != std::string::npos);
  hcyl_certificate_free(c);

  CHECK(hcyl_certificate_build(100000, 10, &c) == HCYL_ERR_SEARCH_EXHAUSTED);
}

TEST_CASE("selftest through the C API") {
  char* report = nullptr;
  CHECK(hcyl_selftest(1, nullptr, &report) == HCYL_OK);
  CHECK(take(report).find(R"("passed":true)") != std::string::npos);

  CHECK(hcyl_selftest(1, sabotaged_rank, &report) == HCYL_ERR_SELFTEST_FAILED);
  CHECK(take(report).find(R"("passed":false)") != std::string::npos);
  CHECK(std::string(hcyl_last_error()).find("rank formula") != std::string::npos);
}

TEST_CASE("status names") {
  CHECK(std::string(hcyl_status_name(HCYL_OK)) == "OK");
  CHECK(std::string(hcyl_status_name(HCYL_ERR_SEARCH_EXHAUSTED)) == "SearchExhausted");
  CHECK(std::string(hcyl_version()) == "1.0.0");
}
