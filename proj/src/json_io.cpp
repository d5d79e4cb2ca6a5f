#include "hcyl/json_io.hpp"

#include <limits>
#include <sstream>

#include "hcyl/error.hpp"

namespace hcyl::io {

namespace {

json integer_to_json(const Integer& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_unsigned()) return Integer(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::Parse, "bad integer string '" + j.get<std::string>() + "'");
    return z;
  }
  throw Error(ErrorCode::Parse, "expected an integer, got " + j.dump());
}

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw Error(ErrorCode::Parse, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return *it;
}

std::uint64_t unsigned_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_unsigned())
    throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::uint64_t>();
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw Error(ErrorCode::Parse, std::string("field '") + key + "' must be an array");
  return v;
}

std::uint64_t unsigned_value(const json& v) {
  if (!v.is_number_unsigned()) throw Error(ErrorCode::Parse, "expected a non-negative integer, got " + v.dump());
  return v.get<std::uint64_t>();
}

}  // namespace

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

json to_json(const LaurentPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(integer_to_json(c));
  return {{"lowest", p.lowest()}, {"coeffs", coeffs}};
}

LaurentPoly poly_from_json(const json& j) {
  const json& lowest = field(j, "lowest");
  if (!lowest.is_number_integer()) throw Error(ErrorCode::Parse, "'lowest' must be an integer");
  std::vector<Integer> coeffs;
  for (const auto& c : array_field(j, "coeffs")) coeffs.push_back(integer_from_json(c));
  return LaurentPoly(lowest.get<std::int64_t>(), std::move(coeffs));
}

json to_json(const SeifertMatrix& v) {
  json rows = json::array();
  for (const auto& row : v.entries()) {
    json r = json::array();
    for (const auto& e : row) r.push_back(integer_to_json(e));
    rows.push_back(std::move(r));
  }
  return {{"size", v.size()}, {"entries", rows}};
}

SeifertMatrix seifert_from_json(const json& j) {
  const std::uint64_t size = unsigned_field(j, "size");
  IntMatrix entries;
  for (const auto& row : array_field(j, "entries")) {
    if (!row.is_array()) throw Error(ErrorCode::Parse, "matrix rows must be arrays");
    std::vector<Integer> r;
    for (const auto& e : row) r.push_back(integer_from_json(e));
    entries.push_back(std::move(r));
  }
  if (entries.size() != size)
    throw Error(ErrorCode::InvalidArgument, "declared size " + std::to_string(size) + " but matrix has " +
                                                std::to_string(entries.size()) + " rows");
  return SeifertMatrix(std::move(entries));
}

json to_json(const WitnessKnot& w) {
  const PretzelKnot k = w.base();
  return {{"index", w.index()},
          {"stab", w.stab_count()},
          {"pretzel", {k.strand_l(), k.strand_m(), k.strand_n()}},
          {"genus", w.genus()},
          {"top_rank", hfk_top_rank(w)}};
}

WitnessKnot witness_from_json(const json& j) {
  const std::uint64_t index = unsigned_field(j, "index");
  const std::uint64_t stab = unsigned_field(j, "stab");
  if (index == 0) throw Error(ErrorCode::Parse, "witness index must be at least 1");
  if (index > kMaxWitnessIndex) throw Error(ErrorCode::Parse, "witness index out of range");
  WitnessKnot w(index, stab);
  const PretzelKnot k = w.base();
  const json& strands = array_field(j, "pretzel");
  if (strands != json{k.strand_l(), k.strand_m(), k.strand_n()})
    throw Error(ErrorCode::Parse, "pretzel strands do not match witness index " + std::to_string(index));
  if (unsigned_field(j, "genus") != w.genus())
    throw Error(ErrorCode::Parse, "genus does not match stab + 1");
  return w;
}

json to_json(const CertifiedWitness& w) {
  json j = to_json(w.witness);
  j["top_rank"] = w.rank;
  json f = json::array();
  for (const auto& pp : w.factorization) f.push_back({pp.prime, pp.exponent});
  j["factorization"] = f;
  j["max_prime"] = w.max_prime;
  return j;
}

CertifiedWitness certified_witness_from_json(const json& j) {
  CertifiedWitness out;
  out.witness = witness_from_json(j);
  out.rank = unsigned_field(j, "top_rank");
  for (const auto& pp : array_field(j, "factorization")) {
    if (!pp.is_array() || pp.size() != 2) throw Error(ErrorCode::Parse, "factorization entries are [prime, exponent]");
    const std::uint64_t e = unsigned_value(pp[1]);
    if (e > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::Parse, "exponent out of range");
    out.factorization.push_back({unsigned_value(pp[0]), static_cast<std::uint32_t>(e)});
  }
  out.max_prime = unsigned_field(j, "max_prime");
  return out;
}

json to_json(const IndependenceCertificate& c) {
  json ws = json::array();
  for (const auto& w : c.witnesses) ws.push_back(to_json(w));
  return {{"witnesses", ws}, {"primes", c.primes}, {"matrix", c.evaluation}};
}

IndependenceCertificate certificate_from_json(const json& j) {
  IndependenceCertificate c;
  for (const auto& w : array_field(j, "witnesses")) c.witnesses.push_back(certified_witness_from_json(w));
  for (const auto& p : array_field(j, "primes")) c.primes.push_back(unsigned_value(p));
  for (const auto& row : array_field(j, "matrix")) {
    if (!row.is_array()) throw Error(ErrorCode::Parse, "matrix rows must be arrays");
    std::vector<std::uint32_t> r;
    for (const auto& e : row) {
      const std::uint64_t v = unsigned_value(e);
      if (v > std::numeric_limits<std::uint32_t>::max()) throw Error(ErrorCode::Parse, "matrix entry out of range");
      r.push_back(static_cast<std::uint32_t>(v));
    }
    c.evaluation.push_back(std::move(r));
  }
  return c;
}

std::string certificate_csv(const IndependenceCertificate& c) {
  std::ostringstream out;
  out << "prime";
  for (const auto& w : c.witnesses) out << ",n=" << w.witness.index();
  out << '\n';
  for (std::size_t i = 0; i < c.evaluation.size(); ++i) {
    out << (i < c.primes.size() ? std::to_string(c.primes[i]) : std::string("?"));
    for (std::uint32_t e : c.evaluation[i]) out << ',' << e;
    out << '\n';
  }
  return out.str();
}

}  // namespace hcyl::io
