#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "hadamard/algebra.hpp"
#include "hadamard/criteria.hpp"
#include "hadamard/polynomial.hpp"
#include "hadamard/roots.hpp"
#include "hadamard/thresholds.hpp"

namespace hadamard {

using Json = nlohmann::ordered_json;

/// Rounds to 12 significant digits so emitted numbers are reproducible text.
double round12(double x);

/// "%.12g"
std::string format12(double x);

/// Integer-order polynomial plus the commensurate base when the input was
/// fractional.
struct LoadedPolynomial {
    MonicPolynomial poly;
    std::optional<Rational> alpha;
};

/// {"degree": n, "coeffs": [[re, im], ...]} or {"terms": [{"pow": [num, den], "coeff": [re, im]}, ...]}.
/// Throws InvalidInput on any schema violation.
LoadedPolynomial polynomial_from_json(const Json& j);
FractionalPolynomial fractional_from_json(const Json& j);
LoadedPolynomial parse_polynomial(const std::string& text);
LoadedPolynomial load_polynomial_file(const std::string& path);

Json to_json(const Complex& c);
Json to_json(const MonicPolynomial& f);
Json to_json(const RootSet& r);
Json to_json(const CriterionOutcome& c, bool include_witness = true);
Json to_json(const ThresholdResult& t);

} // namespace hadamard
