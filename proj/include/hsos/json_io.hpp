#pragma once

#include <json.hpp>

#include "hsos/certify.hpp"

namespace hsos {

/// JSON (de)serialization for every value the CLI exchanges. Complex
/// numbers are [re, im] pairs; matrices are row-major arrays of rows, with
/// poly rows indexed by the conjugate exponent. Writers use ordered maps so
/// repeated runs serialize byte-identically; readers throw
/// std::invalid_argument (wrapping the JSON library's errors) on malformed
/// input.
using Json = nlohmann::ordered_json;

Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

Json matrix_to_json(const Eigen::MatrixXcd& m);
Eigen::MatrixXcd matrix_from_json(const Json& j);

// {"deg": d, "coeffs": [[...], ...]}
Json poly_to_json(const HermitianPoly& f);
HermitianPoly poly_from_json(const Json& j);

// {"N": n, "m": m, "data": [block, ...]}
Json normal_form_to_json(const TrigNormalForm& t);
TrigNormalForm normal_form_from_json(const Json& j);

// {"theta": t, "v": [[re,im], ...], "value": x}
Json witness_to_json(const RefutationWitness& w);
RefutationWitness witness_from_json(const Json& j);

// {"n": N, "squares": [[[re,im], ...], ...], "multiplier": <poly>, "residual": x}
Json certificate_to_json(const SosCertificate& cert);
SosCertificate certificate_from_json(const Json& j);

// {"verdict": ..., "diagnostics": {...}, "certificate"/"witness" when present}
Json decision_to_json(const Decision& dec);

}  // namespace hsos
