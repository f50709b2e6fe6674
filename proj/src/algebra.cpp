#include "hadamard/algebra.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace hadamard {

namespace {

void require_same_degree(const MonicPolynomial& f, const MonicPolynomial& g)
{
    if (f.degree() != g.degree())
        throw InvalidInput("degree mismatch: " + std::to_string(f.degree()) + " vs " +
                           std::to_string(g.degree()));
}

Complex branch_value(const Complex& a, double p, int l, std::int64_t m)
{
    if (is_zero(a))
        return {};
    // Real base, integer power: keeps real polynomials exactly real.
    if (a.imag() == 0.0 && m == 1 && l == 0 && p == std::trunc(p))
        return std::pow(a.real(), p);
    const double angle = p * std::arg(a) + 2.0 * std::numbers::pi * static_cast<double>(l) / static_cast<double>(m);
    return std::pow(std::abs(a), p) * Complex(std::cos(angle), std::sin(angle));
}

} // namespace

MonicPolynomial hadamard_product(const MonicPolynomial& f, const MonicPolynomial& g)
{
    require_same_degree(f, g);
    std::vector<Complex> c(f.degree());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = f.coeff(k) * g.coeff(k);
    return MonicPolynomial(std::move(c));
}

MonicPolynomial szego_weight(std::size_t n)
{
    if (n == 0)
        throw InvalidInput("szego weight needs n >= 1");
    std::vector<Complex> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = 1.0 / binomial(n, k);
    return MonicPolynomial(std::move(c));
}

MonicPolynomial szego_product(const MonicPolynomial& f, const MonicPolynomial& g)
{
    return hadamard_product(hadamard_product(f, g), szego_weight(f.degree()));
}

BranchSet hadamard_power(const MonicPolynomial& f, const RationalExponent& p)
{
    const auto support = f.support();
    const std::int64_t m = p.den();
    const double pd = p.to_double();

    std::size_t count = 1;
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (count > (std::size_t{1} << 20) / static_cast<std::size_t>(m))
            throw UnsupportedInput("hadamard power would enumerate more than 2^20 branches");
        count *= static_cast<std::size_t>(m);
    }

    BranchSet out{f, p, {}, {}};
    out.members.reserve(count);
    out.branch_index.reserve(count);

    // Odometer over (l_k) for k in N_f, first support index varying fastest.
    std::vector<int> digits(support.size(), 0);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<Complex> c(f.degree());
        for (std::size_t j = 0; j < support.size(); ++j)
            c[support[j]] = branch_value(f.coeff(support[j]), pd, digits[j], m);
        out.members.emplace_back(std::move(c));
        out.branch_index.push_back(digits);
        for (std::size_t j = 0; j < digits.size(); ++j) {
            if (++digits[j] < m)
                break;
            digits[j] = 0;
        }
    }
    return out;
}

MonicPolynomial principal_power(const MonicPolynomial& f, double p)
{
    std::vector<Complex> c(f.degree());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = branch_value(f.coeff(k), p, 0, 1);
    return MonicPolynomial(std::move(c));
}

MonicPolynomial conjugate(const MonicPolynomial& f)
{
    std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
    for (auto& x : c)
        x = std::conj(x);
    return MonicPolynomial(std::move(c));
}

MonicPolynomial real_form(const MonicPolynomial& f)
{
    const std::size_t n = f.degree();
    std::vector<Complex> full(f.coeffs().begin(), f.coeffs().end());
    full.push_back(1.0);

    std::vector<Complex> prod(2 * n + 1);
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j)
            prod[i + j] += std::conj(full[i]) * full[j];

    prod.pop_back();
    for (auto& x : prod)
        x = Complex(x.real(), 0.0);
    return MonicPolynomial(std::move(prod));
}

void FractionalPolynomial::validate() const
{
    if (leading_power.num() <= 0)
        throw InvalidInput("leading power must be positive");
    Rational prev = leading_power;
    for (const auto& t : terms) {
        if (!(t.power < prev))
            throw InvalidInput("fractional powers must be strictly decreasing");
        if (t.power.num() < 0)
            throw InvalidInput("fractional powers must be nonnegative");
        prev = t.power;
    }
}

IntegerOrderForm to_integer_order(const FractionalPolynomial& f, std::size_t max_degree)
{
    f.validate();

    // gcd of rationals = gcd(numerators scaled to a common denominator) / lcm.
    std::int64_t common_den = f.leading_power.den();
    for (const auto& t : f.terms)
        common_den = std::lcm(common_den, t.power.den());

    auto scaled = [&](const Rational& r) { return r.num() * (common_den / r.den()); };

    std::int64_t g = scaled(f.leading_power);
    for (const auto& t : f.terms)
        g = std::gcd(g, scaled(t.power));

    const Rational alpha(g, common_den);
    const auto degree = static_cast<std::size_t>(scaled(f.leading_power) / g);
    if (degree > max_degree)
        throw UnsupportedInput("commensurate order " + alpha.to_string() + " gives degree " +
                               std::to_string(degree) + " above the supported maximum");

    std::vector<Complex> c(degree);
    for (const auto& t : f.terms)
        c[static_cast<std::size_t>(scaled(t.power) / g)] = t.coeff;
    return {alpha, MonicPolynomial(std::move(c))};
}

} // namespace hadamard
