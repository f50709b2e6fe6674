#include "hadamard/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hadamard {

namespace {

Complex complex_from_json(const Json& j, const char* what)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw InvalidInput(std::string(what) + " must be a [re, im] pair of numbers");
    return {j[0].get<double>(), j[1].get<double>()};
}

Json number(double x)
{
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    if (std::isnan(x))
        return nullptr;
    return round12(x);
}

} // namespace

double round12(double x)
{
    if (!std::isfinite(x))
        return x;
    return std::stod(format12(x));
}

std::string format12(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x == 0.0 ? 0.0 : x);
    return buf;
}

FractionalPolynomial fractional_from_json(const Json& j)
{
    const auto& terms = j.at("terms");
    if (!terms.is_array() || terms.empty())
        throw InvalidInput("'terms' must be a non-empty array");

    auto power_of = [](const Json& t) {
        const auto& p = t.at("pow");
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw InvalidInput("'pow' must be [num, den] integers");
        if (p[1].get<std::int64_t>() <= 0)
            throw InvalidInput("'pow' denominator must be positive");
        return Rational(p[0].get<std::int64_t>(), p[1].get<std::int64_t>());
    };

    FractionalPolynomial out;
    out.leading_power = power_of(terms[0]);
    if (terms[0].contains("coeff")) {
        const auto lead = complex_from_json(terms[0]["coeff"], "leading coefficient");
        if (lead != Complex{1.0, 0.0})
            throw InvalidInput("leading coefficient must be 1 (or omitted)");
    }
    for (std::size_t i = 1; i < terms.size(); ++i) {
        if (!terms[i].contains("coeff"))
            throw InvalidInput("non-leading term without 'coeff'");
        out.terms.push_back({power_of(terms[i]), complex_from_json(terms[i]["coeff"], "coefficient")});
    }
    out.validate();
    return out;
}

LoadedPolynomial polynomial_from_json(const Json& j)
{
    try {
        if (!j.is_object())
            throw InvalidInput("polynomial must be a JSON object");
        if (j.contains("terms")) {
            auto form = to_integer_order(fractional_from_json(j));
            return {std::move(form.poly), form.alpha};
        }
        const auto& deg = j.at("degree");
        if (!deg.is_number_integer() || deg.get<std::int64_t>() < 1)
            throw InvalidInput("'degree' must be a positive integer");
        const auto& coeffs = j.at("coeffs");
        if (!coeffs.is_array() || coeffs.size() != deg.get<std::size_t>())
            throw InvalidInput("'coeffs' must hold exactly 'degree' pairs");
        std::vector<Complex> c;
        for (const auto& e : coeffs)
            c.push_back(complex_from_json(e, "coefficient"));
        return {MonicPolynomial(std::move(c)), std::nullopt};
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("polynomial schema: ") + e.what());
    }
}

LoadedPolynomial parse_polynomial(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(std::string("malformed JSON: ") + e.what());
    }
    return polynomial_from_json(j);
}

LoadedPolynomial load_polynomial_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_polynomial(ss.str());
}

Json to_json(const Complex& c)
{
    return Json::array({round12(c.real()), round12(c.imag())});
}

Json to_json(const MonicPolynomial& f)
{
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs())
        coeffs.push_back(to_json(c));
    return {{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const RootSet& r)
{
    Json roots = Json::array();
    for (const auto& z : r.roots)
        roots.push_back(to_json(z));
    return {{"roots", std::move(roots)}, {"max_modulus", round12(r.max_modulus())}};
}

Json to_json(const CriterionOutcome& c, bool include_witness)
{
    Json j{{"criterion", to_string(c.criterion)}, {"satisfied", c.satisfied}};
    if (include_witness && c.witness) {
        Json w = Json::object();
        for (const auto& [k, lambda] : c.witness->as_map())
            w[std::to_string(k)] = round12(lambda);
        j["witness"] = std::move(w);
    }
    if (c.violated_at)
        j["violated_at"] = *c.violated_at;
    return j;
}

Json to_json(const ThresholdResult& t)
{
    Json j{{"kind", to_string(t.kind)}, {"value", number(t.value)}, {"method", to_string(t.method)}};
    if (t.bracket)
        j["bracket"] = Json::array({number(t.bracket->first), number(t.bracket->second)});
    if (t.grid_resolution)
        j["grid_n"] = *t.grid_resolution;
    return j;
}

} // namespace hadamard
