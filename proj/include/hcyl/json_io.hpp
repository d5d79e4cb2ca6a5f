#pragma once

#include <string>

#include <json.hpp>

#include "hcyl/characters.hpp"
#include "hcyl/laurent.hpp"
#include "hcyl/pretzel.hpp"
#include "hcyl/seifert.hpp"

namespace hcyl::io {

using nlohmann::json;

// Coefficients are written as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; the parser accepts both.
json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json to_json(const SeifertMatrix& v);
SeifertMatrix seifert_from_json(const json& j);

json to_json(const WitnessKnot& w);
WitnessKnot witness_from_json(const json& j);

json to_json(const CertifiedWitness& w);
CertifiedWitness certified_witness_from_json(const json& j);

json to_json(const IndependenceCertificate& c);
IndependenceCertificate certificate_from_json(const json& j);

/// Evaluation matrix with a header row of witness indices and a leading
/// column of primes.
std::string certificate_csv(const IndependenceCertificate& c);

/// Parses text into JSON, mapping syntax errors to Error(Parse).
json parse(const std::string& text);

}  // namespace hcyl::io
