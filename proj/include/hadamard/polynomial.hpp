#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hadamard {

using Complex = std::complex<double>;

// Error taxonomy. The CLI maps each family onto an exit code.
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UnsupportedInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A criterion's hypotheses do not hold for the given polynomial.
struct NotApplicable : std::domain_error {
    using std::domain_error::domain_error;
};

struct NumericalFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Monic polynomial s^n + a_{n-1}s^{n-1} + ... + a_0 over the complex field.
///
/// Coefficients are stored ascending (a_0 first); the leading 1 is implicit.
/// The support N_f is the set of indices k with a_k != 0, decided by an exact
/// zero test on both parts.
class MonicPolynomial {
public:
    /// Takes the n lower coefficients a_0..a_{n-1}; throws InvalidInput when empty.
    explicit MonicPolynomial(std::vector<Complex> lower_coeffs);

    /// s^n
    static MonicPolynomial monomial(std::size_t degree);

    std::size_t degree() const noexcept { return coeffs_.size(); }
    const Complex& coeff(std::size_t k) const { return coeffs_.at(k); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }

    std::vector<std::size_t> support() const;
    bool has_real_coeffs() const noexcept;
    double max_coeff_modulus() const noexcept;

    /// Horner evaluation including the leading term.
    Complex operator()(Complex s) const noexcept;

    friend bool operator==(const MonicPolynomial&, const MonicPolynomial&) = default;

private:
    std::vector<Complex> coeffs_;
};

inline bool is_zero(const Complex& c) noexcept { return c.real() == 0.0 && c.imag() == 0.0; }

/// Exact rational num/den, always stored in lowest terms with den >= 1.
class Rational {
public:
    Rational(std::int64_t num = 0, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    bool is_integer() const noexcept { return den_ == 1; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Accepts "K/M" or an integer "K".
    static Rational parse(const std::string& text);
    std::string to_string() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) noexcept;

private:
    std::int64_t num_;
    std::int64_t den_;
};

using RationalExponent = Rational;

/// C(n, k) as a double; exact for the degrees this library handles.
double binomial(std::size_t n, std::size_t k) noexcept;

} // namespace hadamard
