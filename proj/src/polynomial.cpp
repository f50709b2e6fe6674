#include "hadamard/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>

namespace hadamard {

MonicPolynomial::MonicPolynomial(std::vector<Complex> lower_coeffs) : coeffs_(std::move(lower_coeffs))
{
    if (coeffs_.empty())
        throw InvalidInput("monic polynomial must have degree >= 1");
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw InvalidInput("polynomial coefficients must be finite");
}

MonicPolynomial MonicPolynomial::monomial(std::size_t degree)
{
    return MonicPolynomial(std::vector<Complex>(degree, Complex{}));
}

std::vector<std::size_t> MonicPolynomial::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        if (!is_zero(coeffs_[k]))
            out.push_back(k);
    return out;
}

bool MonicPolynomial::has_real_coeffs() const noexcept
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Complex& c) { return c.imag() == 0.0; });
}

double MonicPolynomial::max_coeff_modulus() const noexcept
{
    double m = 0.0;
    for (const auto& c : coeffs_)
        m = std::max(m, std::abs(c));
    return m;
}

Complex MonicPolynomial::operator()(Complex s) const noexcept
{
    Complex acc{1.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * s + *it;
    return acc;
}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0)
        throw InvalidInput("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(const std::string& text)
{
    auto parse_int = [&](std::string_view part) {
        std::int64_t v = 0;
        const auto* first = part.data();
        const auto* last = part.data() + part.size();
        if (!part.empty() && *first == '+')
            ++first;
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc{} || ptr != last || first == last)
            throw InvalidInput("malformed rational '" + text + "'");
        return v;
    };
    const std::string_view view(text);
    const auto slash = view.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(view), 1);
    const auto den = parse_int(view.substr(slash + 1));
    if (den <= 0)
        throw InvalidInput("rational denominator must be positive in '" + text + "'");
    return Rational(parse_int(view.substr(0, slash)), den);
}

std::string Rational::to_string() const
{
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

bool operator<(const Rational& a, const Rational& b) noexcept
{
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
}

double binomial(std::size_t n, std::size_t k) noexcept
{
    if (k > n)
        return 0.0;
    k = std::min(k, n - k);
    double r = 1.0;
    for (std::size_t i = 1; i <= k; ++i)
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    return std::round(r);
}

} // namespace hadamard
