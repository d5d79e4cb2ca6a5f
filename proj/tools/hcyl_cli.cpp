// hcyl: command-line front end over the C API in libhcyl.
//
// Exit codes: 0 success, 1 domain failure, 2 usage or input error,
// 3 search exhausted.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcyl/hcyl.h"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitExhausted = 3;

// Thrown to unwind a command with a given exit code.
struct CommandFailure {
  int exit_code;
  std::string message;
};

int exit_code_for(hcyl_status status) {
  switch (status) {
    case HCYL_ERR_INVALID_ARGUMENT:
    case HCYL_ERR_PARSE:
    case HCYL_ERR_NOT_PRIME:
    case HCYL_ERR_NOT_ONE_MOD_FOUR:
    case HCYL_ERR_OVERFLOW:
      return kExitUsage;
    case HCYL_ERR_SEARCH_EXHAUSTED:
      return kExitExhausted;
    default:
      return kExitDomain;
  }
}

void check(hcyl_status status) {
  if (status != HCYL_OK) throw CommandFailure{exit_code_for(status), hcyl_last_error()};
}

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Poly = std::unique_ptr<hcyl_poly, Deleter<hcyl_poly, hcyl_poly_free>>;
using Seifert = std::unique_ptr<hcyl_seifert, Deleter<hcyl_seifert, hcyl_seifert_free>>;
using Witness = std::unique_ptr<hcyl_witness, Deleter<hcyl_witness, hcyl_witness_free>>;
using Certificate = std::unique_ptr<hcyl_certificate, Deleter<hcyl_certificate, hcyl_certificate_free>>;

std::string take_string(char* s) {
  std::string out = s ? s : "";
  hcyl_string_free(s);
  return out;
}

template <typename Handle, typename Fn>
std::string string_of(const Handle& h, Fn fn) {
  char* s = nullptr;
  check(fn(h.get(), &s));
  return take_string(s);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CommandFailure{kExitUsage, "cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw CommandFailure{kExitUsage, "cannot write " + path};
  out << contents;
}

std::vector<std::int64_t> parse_strands(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw CommandFailure{kExitUsage, "bad pretzel strand '" + item + "'"};
    }
    if (used != item.size()) throw CommandFailure{kExitUsage, "bad pretzel strand '" + item + "'"};
    values.push_back(v);
  }
  if (values.size() != 3) throw CommandFailure{kExitUsage, "--pretzel takes three comma-separated odd integers"};
  for (auto v : values)
    if (v % 2 == 0) throw CommandFailure{kExitUsage, "pretzel strand " + std::to_string(v) + " is even"};
  return values;
}

struct Output {
  bool as_json = false;
  std::string command;

  void emit(const json& result, const std::string& text) const {
    if (as_json)
      std::cout << nlohmann::json{{"schema_version", "1"}, {"command", command}, {"result", result}}.dump() << '\n';
    else
      std::cout << text << '\n';
  }
};

struct KnotInput {
  std::string pretzel;
  std::string seifert;
};

void require_one_source(const KnotInput& in) {
  if (in.pretzel.empty() == in.seifert.empty())
    throw CommandFailure{kExitUsage, "give exactly one of --pretzel or --seifert"};
}

// Alexander polynomial plus a JSON description of where it came from.
struct KnotData {
  Poly poly;
  json source;
  std::uint64_t genus = 1;
  std::optional<bool> fibered;
};

KnotData load_knot(const KnotInput& in, bool need_fibered) {
  require_one_source(in);
  KnotData out;
  hcyl_poly* p = nullptr;
  if (!in.pretzel.empty()) {
    const auto s = parse_strands(in.pretzel);
    check(hcyl_pretzel_alexander(s[0], s[1], s[2], &p));
    out.poly.reset(p);
    out.source = {{"pretzel", s}};
    if (need_fibered) {
      int f = 0;
      check(hcyl_pretzel_is_homologically_fibered(s[0], s[1], s[2], &f));
      out.fibered = f != 0;
    }
    return out;
  }
  hcyl_seifert* v = nullptr;
  check(hcyl_seifert_from_json(read_file(in.seifert).c_str(), &v));
  Seifert matrix(v);
  check(hcyl_seifert_genus(matrix.get(), &out.genus));
  out.source = {{"seifert", in.seifert}};
  if (need_fibered) {
    int f = 0;
    check(hcyl_seifert_is_homology_product(matrix.get(), &f));
    out.fibered = f != 0;
  }
  check(hcyl_seifert_alexander(matrix.get(), &p));
  out.poly.reset(p);
  return out;
}

json poly_json(const Poly& p) { return json::parse(string_of(p, hcyl_poly_to_json)); }

int cmd_alexander(const Output& out, const KnotInput& in) {
  const KnotData knot = load_knot(in, false);
  const std::string pretty = string_of(knot.poly, hcyl_poly_to_string);
  json result = knot.source;
  result["alexander"] = poly_json(knot.poly);
  result["pretty"] = pretty;
  out.emit(result, pretty);
  return kExitOk;
}

int cmd_fibered(const Output& out, const KnotInput& in) {
  const KnotData knot = load_knot(in, true);
  std::int64_t degree = 0;
  check(hcyl_poly_degree_span(knot.poly.get(), &degree));
  char* at_zero_raw = nullptr;
  check(hcyl_poly_eval(knot.poly.get(), "0", &at_zero_raw));
  const std::string at_zero = take_string(at_zero_raw);

  const std::int64_t full = static_cast<std::int64_t>(2 * knot.genus);
  std::string reason;
  if (degree != full)
    reason = "degree " + std::to_string(degree) + " ≠ " + std::to_string(full);
  else if (at_zero != "1" && at_zero != "-1")
    reason = "Δ(0) = " + at_zero;

  const bool fibered = *knot.fibered;
  if (fibered == !reason.empty())
    throw CommandFailure{kExitDomain, "determinant and polynomial criteria disagree"};

  json result = knot.source;
  result["fibered"] = fibered;
  result["genus"] = knot.genus;
  result["degree"] = degree;
  result["value_at_zero"] = at_zero;
  result["failing_condition"] = reason.empty() ? json(nullptr) : json(reason);
  out.emit(result, fibered ? "true" : "false (" + reason + ")");
  return kExitOk;
}

json factorization_json(std::uint64_t x) {
  std::size_t count = 0;
  check(hcyl_factorize(x, nullptr, 0, &count));
  std::vector<hcyl_prime_power> f(count);
  check(hcyl_factorize(x, f.data(), f.size(), &count));
  json out = json::array();
  for (const auto& pp : f) out.push_back({pp.prime, pp.exponent});
  return out;
}

std::string factorization_text(const json& f) {
  if (f.empty()) return "1";
  std::string s;
  for (const auto& pp : f) {
    if (!s.empty()) s += " * ";
    s += std::to_string(pp[0].get<std::uint64_t>());
    if (pp[1].get<std::uint32_t>() > 1) s += "^" + std::to_string(pp[1].get<std::uint32_t>());
  }
  return s;
}

int cmd_witness(const Output& out, std::uint64_t p) {
  std::uint64_t m = 0, n = 0;
  check(hcyl_sqrt_minus_one(p, &m));
  check(hcyl_witness_index_for_prime(p, &n));
  hcyl_witness* raw = nullptr;
  check(hcyl_witness_new(n, &raw));
  Witness w(raw);
  std::int64_t strands[3];
  check(hcyl_witness_strands(w.get(), strands));
  std::uint64_t rank = 0;
  check(hcyl_witness_top_rank(w.get(), &rank));
  const json factors = factorization_json(rank);

  json result = {{"p", p},
                 {"m", m},
                 {"n", n},
                 {"pretzel", {strands[0], strands[1], strands[2]}},
                 {"rank", rank},
                 {"factorization", factors},
                 {"rank_mod_p", rank % p}};
  std::ostringstream text;
  text << "p = " << p << ", m = " << m << " (m^2 = -1 mod p), n = " << n << '\n'
       << "witness P(" << strands[0] << ", " << strands[1] << ", " << strands[2] << ")\n"
       << "rank = " << rank << " = " << factorization_text(factors) << ", rank mod p = " << rank % p;
  out.emit(result, text.str());
  return kExitOk;
}

int report_certificate(const Output& out, const Certificate& cert, const std::string& csv_path,
                       const std::string& out_path) {
  int ok = 0;
  char* reason = nullptr;
  check(hcyl_certificate_verify(cert.get(), &ok, &reason));
  const std::string why = take_string(reason);
  const std::string body = string_of(cert, hcyl_certificate_to_json);
  const std::string csv = string_of(cert, hcyl_certificate_to_csv);
  if (!csv_path.empty()) write_file(csv_path, csv);
  if (!out_path.empty()) write_file(out_path, body + "\n");

  json result = {{"certificate", json::parse(body)}, {"verified", ok != 0}};
  if (!ok) result["reason"] = why;
  std::string text = csv + (ok ? "verified: true" : "verified: false (" + why + ")");
  out.emit(result, text);
  return ok ? kExitOk : kExitDomain;
}

int cmd_certificate(const Output& out, std::size_t count, std::uint64_t limit, const std::string& csv_path,
                    const std::string& out_path) {
  hcyl_certificate* raw = nullptr;
  check(hcyl_certificate_build(count, limit, &raw));
  return report_certificate(out, Certificate(raw), csv_path, out_path);
}

int cmd_verify(const Output& out, const std::string& path, const std::string& csv_path) {
  hcyl_certificate* raw = nullptr;
  check(hcyl_certificate_from_json(read_file(path).c_str(), &raw));
  return report_certificate(out, Certificate(raw), csv_path, "");
}

int cmd_rank(const Output& out, std::int64_t index, std::int64_t stab) {
  if (index < 1) throw CommandFailure{kExitUsage, "--index must be at least 1"};
  if (stab < 0) throw CommandFailure{kExitUsage, "--stab must be non-negative"};
  hcyl_witness* raw = nullptr;
  check(hcyl_witness_new(static_cast<std::uint64_t>(index), &raw));
  Witness base(raw);
  check(hcyl_witness_stabilize(base.get(), static_cast<std::uint64_t>(stab), &raw));
  Witness w(raw);

  std::uint64_t rank = 0, genus = 0;
  check(hcyl_witness_top_rank(w.get(), &rank));
  check(hcyl_witness_genus(w.get(), &genus));
  hcyl_poly* p = nullptr;
  check(hcyl_witness_alexander(w.get(), &p));
  Poly poly(p);

  json result = json::parse(string_of(w, hcyl_witness_to_json));
  result["rank"] = rank;
  result["alexander"] = poly_json(poly);
  std::ostringstream text;
  text << "rank = " << rank << ", genus = " << genus;
  if (stab == 0) {
    std::uint64_t g1 = 0, g2 = 0;
    check(hcyl_witness_bigraded(w.get(), &g1, &g2));
    result["bigraded"] = {{1, g1}, {2, g2}};
    text << ", bigraded Z_(1)^" << g1 << " + Z_(2)^" << g2;
  }
  text << "\nalexander = " << string_of(poly, hcyl_poly_to_string);
  out.emit(result, text.str());
  return kExitOk;
}

int cmd_selftest(const Output& out, bool fast) {
  char* report = nullptr;
  const hcyl_status status = hcyl_selftest(fast ? 1 : 0, nullptr, &report);
  const json r = json::parse(take_string(report));
  std::string text;
  std::string first_failure;
  for (const auto& c : r["checks"]) {
    const bool ok = c["ok"].get<bool>();
    text += (ok ? "PASS " : "FAIL ") + c["name"].get<std::string>();
    if (!ok) {
      text += ": " + c["detail"].get<std::string>();
      if (first_failure.empty()) first_failure = c["name"].get<std::string>();
    }
    text += '\n';
  }
  text += status == HCYL_OK ? "selftest passed" : "selftest failed: " + first_failure;
  out.emit(r, text);
  return status == HCYL_OK ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alexander polynomials of pretzel knots, witness knots and rank-character certificates"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hcyl_version()));

  Output out;
  KnotInput knot;
  int result = kExitOk;
  std::function<int()> run;

  auto add_knot_options = [&](CLI::App* sub) {
    sub->add_option("--pretzel", knot.pretzel, "odd strand values A,B,C of P(A,B,C)")->allow_extra_args(false);
    sub->add_option("--seifert", knot.seifert, "path to a Seifert matrix JSON file");
    sub->add_flag("--json", out.as_json, "emit a JSON envelope");
  };

  auto* alexander = app.add_subcommand("alexander", "normalized Alexander polynomial");
  add_knot_options(alexander);
  alexander->callback([&] { run = [&] { return cmd_alexander(out, knot); }; });

  auto* fibered = app.add_subcommand("fibered", "homological fiberedness test");
  add_knot_options(fibered);
  fibered->callback([&] { run = [&] { return cmd_fibered(out, knot); }; });

  std::uint64_t prime = 0;
  auto* witness = app.add_subcommand("witness", "witness knot whose rank is divisible by a prime p = 1 mod 4");
  witness->add_option("--prime", prime, "prime p with p = 1 (mod 4)")->required();
  witness->add_flag("--json", out.as_json, "emit a JSON envelope");
  witness->callback([&] { run = [&] { return cmd_witness(out, prime); }; });

  std::size_t count = 10;
  std::uint64_t limit = 10000;
  std::string csv_path, out_path;
  auto* certificate = app.add_subcommand("certificate", "build and verify an independence certificate");
  certificate->add_option("--count", count, "number of witnesses")->capture_default_str();
  certificate->add_option("--search-limit", limit, "largest witness index scanned")->capture_default_str();
  certificate->add_option("--csv", csv_path, "write the evaluation matrix as CSV");
  certificate->add_option("--out", out_path, "write the certificate JSON");
  certificate->add_flag("--json", out.as_json, "emit a JSON envelope");
  certificate->callback([&] { run = [&] { return cmd_certificate(out, count, limit, csv_path, out_path); }; });

  std::string cert_path;
  auto* verify = app.add_subcommand("verify", "verify a certificate JSON file");
  verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  verify->add_option("--csv", csv_path, "write the evaluation matrix as CSV");
  verify->add_flag("--json", out.as_json, "emit a JSON envelope");
  verify->callback([&] { run = [&] { return cmd_verify(out, cert_path, csv_path); }; });

  std::int64_t index = 0, stab = 0;
  auto* rank = app.add_subcommand("rank", "top knot Floer rank of a witness P_n(k)");
  rank->add_option("--index", index, "witness index n >= 1")->required();
  rank->add_option("--stab", stab, "number of trefoil summands k")->capture_default_str();
  rank->add_flag("--json", out.as_json, "emit a JSON envelope");
  rank->callback([&] { run = [&] { return cmd_rank(out, index, stab); }; });

  bool fast = false;
  auto* selftest = app.add_subcommand("selftest", "run the built-in consistency checks");
  selftest->add_flag("--fast", fast, "smaller ranges");
  selftest->add_flag("--json", out.as_json, "emit a JSON envelope");
  selftest->callback([&] { run = [&] { return cmd_selftest(out, fast); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  out.command = app.get_subcommands().front()->get_name();
  try {
    result = run();
  } catch (const CommandFailure& f) {
    std::cerr << "hcyl " << out.command << ": " << f.message << '\n';
    return f.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "hcyl " << out.command << ": " << e.what() << '\n';
    return kExitDomain;
  }
  return result;
}
