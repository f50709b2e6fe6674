#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hadamard/algebra.hpp"
#include "hadamard/roots.hpp"

using namespace hadamard;

namespace {

MonicPolynomial random_poly(std::mt19937_64& rng, std::size_t n, double max_mod = 2.0, double zero_prob = 0.2)
{
    std::uniform_real_distribution<double> mod(0.05, max_mod), phase(-std::numbers::pi, std::numbers::pi), u(0, 1);
    std::vector<Complex> c(n);
    for (auto& x : c)
        x = u(rng) < zero_prob ? Complex{} : std::polar(mod(rng), phase(rng));
    return MonicPolynomial(c);
}

void check_close(const MonicPolynomial& a, const MonicPolynomial& b, double tol = 1e-12)
{
    REQUIRE(a.degree() == b.degree());
    for (std::size_t k = 0; k < a.degree(); ++k)
        CHECK(std::abs(a.coeff(k) - b.coeff(k)) <= tol * (1.0 + std::abs(b.coeff(k))));
}

const MonicPolynomial ex1_f({0.7, 0.2, 0.9, 0.0, 0.0});
const MonicPolynomial ex1_g({3.0, 2.0, 2.5, 0.0, 0.0});

} // namespace

TEST_CASE("monic polynomial invariants")
{
    CHECK_THROWS_AS(MonicPolynomial(std::vector<Complex>{}), InvalidInput);
    CHECK(ex1_f.support() == std::vector<std::size_t>{0, 1, 2});
    CHECK(MonicPolynomial::monomial(4).support().empty());
    // Exact-zero test: a denormal-sized coefficient is still in the support.
    CHECK(MonicPolynomial({Complex{0.0, 1e-300}, 0.0}).support() == std::vector<std::size_t>{0});
    CHECK(ex1_f(Complex{1.0, 0.0}) == Complex{2.8, 0.0});
}

TEST_CASE("rational exponents are kept in lowest terms")
{
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6) == Rational(-1, 2));
    CHECK(Rational(4, 2).is_integer());
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-4") == Rational(-4, 1));
    CHECK_THROWS_AS(Rational::parse("3/0"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("x/2"), InvalidInput);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InvalidInput);
}

TEST_CASE("hadamard product")
{
    SUBCASE("all-ones polynomial is the identity")
    {
        check_close(hadamard_product(ex1_f, MonicPolynomial(std::vector<Complex>(5, 1.0))), ex1_f);
    }
    SUBCASE("example 1 inputs")
    {
        check_close(hadamard_product(ex1_f, ex1_g), MonicPolynomial({2.1, 0.4, 2.25, 0.0, 0.0}));
    }
    SUBCASE("zero coefficients annihilate")
    {
        CHECK(hadamard_product(ex1_f, MonicPolynomial::monomial(5)) == MonicPolynomial::monomial(5));
    }
    SUBCASE("degree mismatch")
    {
        CHECK_THROWS_AS(hadamard_product(ex1_f, MonicPolynomial::monomial(4)), InvalidInput);
    }
    SUBCASE("commutative and associative")
    {
        std::mt19937_64 rng(11);
        for (int i = 0; i < 200; ++i) {
            const auto n = 1 + rng() % 8;
            const auto a = random_poly(rng, n), b = random_poly(rng, n), c = random_poly(rng, n);
            CHECK(hadamard_product(a, b) == hadamard_product(b, a));
            check_close(hadamard_product(hadamard_product(a, b), c), hadamard_product(a, hadamard_product(b, c)));
        }
    }
}

TEST_CASE("szego weight and product")
{
    check_close(szego_weight(2), MonicPolynomial({1.0, 0.5}));
    check_close(szego_weight(1), MonicPolynomial({1.0}));
    CHECK(szego_weight(5).coeff(2).real() == doctest::Approx(0.1));

    const MonicPolynomial ones2({1.0, 1.0});
    check_close(szego_product(ones2, ones2), szego_weight(2));
    check_close(szego_product(MonicPolynomial({1.0, 1.0}), MonicPolynomial({2.0, 2.0})), MonicPolynomial({2.0, 1.0}));

    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        const auto n = 1 + rng() % 8;
        const auto a = random_poly(rng, n), b = random_poly(rng, n);
        check_close(szego_product(a, b), szego_product(b, a));
    }
    CHECK_THROWS_AS(szego_product(ex1_f, MonicPolynomial::monomial(2)), InvalidInput);
}

TEST_CASE("hadamard power: integer and rational exponents")
{
    SUBCASE("square roots of i")
    {
        const MonicPolynomial f({0.0, Complex{0.0, 1.0}});
        const auto set = hadamard_power(f, Rational(1, 2));
        REQUIRE(set.members.size() == 2);
        const Complex r0 = std::polar(1.0, std::numbers::pi / 4), r1 = std::polar(1.0, 5 * std::numbers::pi / 4);
        CHECK(std::abs(set.members[0].coeff(1) - r0) < 1e-15);
        CHECK(std::abs(set.members[1].coeff(1) - r1) < 1e-15);
        CHECK(set.members[0].coeff(0) == Complex{});
        CHECK(set.branch_index[1] == std::vector<int>{1});
    }
    SUBCASE("integer powers are singletons")
    {
        const auto sq = hadamard_power(ex1_f, Rational(2));
        REQUIRE(sq.members.size() == 1);
        check_close(sq.members[0], MonicPolynomial({0.49, 0.04, 0.81, 0.0, 0.0}));
        const auto inv = hadamard_power(ex1_g, Rational(-1));
        check_close(inv.members[0], MonicPolynomial({1.0 / 3.0, 0.5, 0.4, 0.0, 0.0}));
    }
    SUBCASE("p = 0 maps nonzero coefficients to 1 and keeps zeros")
    {
        check_close(hadamard_power(ex1_f, Rational(0)).members[0], MonicPolynomial({1.0, 1.0, 1.0, 0.0, 0.0}));
    }
    SUBCASE("branch count and branch-independent moduli")
    {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 100; ++i) {
            const auto n = 1 + rng() % 5;
            const auto f = random_poly(rng, n, 3.0, 0.3);
            const Rational p(static_cast<std::int64_t>(rng() % 13) - 6, 1 + static_cast<std::int64_t>(rng() % 4));
            const auto set = hadamard_power(f, p);
            const auto support = f.support();
            std::size_t expected = 1;
            for (std::size_t j = 0; j < support.size(); ++j)
                expected *= static_cast<std::size_t>(p.den());
            REQUIRE(set.members.size() == expected);
            for (const auto& m : set.members) {
                for (std::size_t k = 0; k < n; ++k) {
                    const double want = is_zero(f.coeff(k)) ? 0.0 : std::pow(std::abs(f.coeff(k)), p.to_double());
                    CHECK(std::abs(std::abs(m.coeff(k)) - want) <= 1e-12 * std::max(1.0, want));
                }
            }
        }
    }
    SUBCASE("integer power laws")
    {
        std::mt19937_64 rng(8);
        for (int i = 0; i < 100; ++i) {
            const auto n = 1 + rng() % 6;
            const auto f = random_poly(rng, n, 1.5);
            const int p = static_cast<int>(rng() % 7) - 3, q = static_cast<int>(rng() % 7) - 3;
            const auto lhs = hadamard_power(f, Rational(p + q)).members[0];
            const auto rhs = hadamard_product(hadamard_power(f, Rational(p)).members[0],
                                              hadamard_power(f, Rational(q)).members[0]);
            check_close(lhs, rhs);
        }
    }
    SUBCASE("principal power agrees with branch 0")
    {
        const MonicPolynomial f({Complex{1.0, -0.5}, 0.0, Complex{2.0, -1.0}, -1.5});
        check_close(principal_power(f, 1.5), hadamard_power(f, Rational(3, 2)).members[0]);
    }
}

TEST_CASE("conjugate and real form")
{
    const MonicPolynomial f({Complex{0.0, 3.0}, Complex{1.0, 2.0}});
    CHECK(conjugate(f) == MonicPolynomial({Complex{0.0, -3.0}, Complex{1.0, -2.0}}));
    CHECK(conjugate(ex1_f) == ex1_f);
    CHECK(conjugate(conjugate(f)) == f);

    check_close(real_form(MonicPolynomial({Complex{0.0, 1.0}})), MonicPolynomial({1.0, 0.0}));
    check_close(real_form(MonicPolynomial({0.5})), MonicPolynomial({0.25, 1.0}));

    std::mt19937_64 rng(21);
    for (int i = 0; i < 50; ++i) {
        const auto g = random_poly(rng, 1 + rng() % 6);
        const auto r = real_form(g);
        CHECK(r.degree() == 2 * g.degree());
        CHECK(r.has_real_coeffs());
        CHECK(r(Complex{0.37, 0.0}).imag() == 0.0);
        const double a = find_roots(g).max_modulus(), b = find_roots(r).max_modulus();
        CHECK(std::abs(a - b) <= 1e-6 * (1.0 + a));
    }
}

TEST_CASE("fractional-order reduction")
{
    SUBCASE("half-integer powers")
    {
        FractionalPolynomial f{Rational(3, 2), {{Rational(1, 2), 0.4}, {Rational(0), 0.3}}};
        const auto form = to_integer_order(f);
        CHECK(form.alpha == Rational(1, 2));
        check_close(form.poly, MonicPolynomial({0.3, 0.4, 0.0}));
    }
    SUBCASE("integer powers are left alone")
    {
        FractionalPolynomial f{Rational(5), {{Rational(2), 0.9}, {Rational(1), 0.2}, {Rational(0), 0.7}}};
        const auto form = to_integer_order(f);
        CHECK(form.alpha == Rational(1));
        CHECK(form.poly == ex1_f);
    }
    SUBCASE("commensurate example 1")
    {
        FractionalPolynomial f{Rational(5, 2), {{Rational(1), 0.9}, {Rational(1, 2), 0.2}, {Rational(0), 0.7}}};
        const auto form = to_integer_order(f);
        CHECK(form.alpha == Rational(1, 2));
        CHECK(form.poly == ex1_f);
    }
    SUBCASE("mixed denominators use the rational gcd")
    {
        FractionalPolynomial f{Rational(2), {{Rational(4, 3), 1.0}, {Rational(1, 2), 1.0}}};
        const auto form = to_integer_order(f);
        CHECK(form.alpha == Rational(1, 6));
        CHECK(form.poly.degree() == 12);
        CHECK(form.poly.support() == std::vector<std::size_t>{3, 8});
    }
    SUBCASE("invalid or oversized inputs")
    {
        CHECK_THROWS_AS(to_integer_order({Rational(1), {{Rational(2), 1.0}}}), InvalidInput);
        CHECK_THROWS_AS(to_integer_order({Rational(0), {}}), InvalidInput);
        CHECK_THROWS_AS(to_integer_order({Rational(1), {{Rational(-1, 2), 1.0}}}), InvalidInput);
        CHECK_THROWS_AS(to_integer_order({Rational(1), {{Rational(1, 99991), 1.0}}}), UnsupportedInput);
    }
}
