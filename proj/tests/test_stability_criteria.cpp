#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hadamard/algebra.hpp"
#include "hadamard/criteria.hpp"
#include "hadamard/roots.hpp"

using namespace hadamard;

namespace {

MonicPolynomial random_poly(std::mt19937_64& rng, std::size_t n, double max_mod, double zero_prob = 0.15)
{
    std::uniform_real_distribution<double> mod(0.0, max_mod), phase(-std::numbers::pi, std::numbers::pi), u(0, 1);
    std::vector<Complex> c(n);
    for (auto& x : c)
        x = u(rng) < zero_prob ? Complex{} : std::polar(mod(rng), phase(rng));
    return MonicPolynomial(c);
}

double modulus_sum(const MonicPolynomial& f)
{
    double s = 0.0;
    for (std::size_t k = 0; k < f.degree(); ++k)
        s += std::abs(f.coeff(k));
    return s;
}

// The witness must be a valid weight sequence strictly dominating the moduli.
void check_witness(const MonicPolynomial& f, const CriterionOutcome& out)
{
    REQUIRE(out.witness.has_value());
    const auto& w = *out.witness;
    CHECK(w.support() == f.support());
    CHECK(w.sum() <= 1.0 + 1e-12);
    for (auto k : f.support())
        CHECK(std::abs(f.coeff(k)) < w.at(k));
}

} // namespace

TEST_CASE("stability condition examples")
{
    SUBCASE("example 1 inputs fail")
    {
        CHECK_FALSE(satisfies_stability_condition(MonicPolynomial({0.7, 0.2, 0.9, 0.0, 0.0})).satisfied);
        CHECK_FALSE(satisfies_stability_condition(MonicPolynomial({3.0, 2.0, 2.5, 0.0, 0.0})).satisfied);
    }
    SUBCASE("sum below one passes with a witness")
    {
        const MonicPolynomial f({0.5, 0.3});
        const auto out = satisfies_stability_condition(f);
        CHECK(out.satisfied);
        CHECK(out.criterion == Criterion::Fujiwara);
        check_witness(f, out);
        CHECK(out.witness->at(0) == doctest::Approx(0.6));
        CHECK(out.witness->at(1) == doctest::Approx(0.4));
    }
    SUBCASE("sum exactly one fails")
    {
        CHECK_FALSE(satisfies_stability_condition(MonicPolynomial({-0.5, -0.5})).satisfied);
    }
    SUBCASE("empty support is vacuously satisfied")
    {
        const auto out = satisfies_stability_condition(MonicPolynomial::monomial(3));
        CHECK(out.satisfied);
        CHECK_FALSE(out.witness.has_value());
    }
    SUBCASE("example 1 f at p = 4 passes")
    {
        const auto f4 = principal_power(MonicPolynomial({0.7, 0.2, 0.9, 0.0, 0.0}), 4.0);
        CHECK(satisfies_stability_condition(f4).satisfied);
    }
}

TEST_CASE("soundness of the stability condition")
{
    std::mt19937_64 rng(7);
    int satisfied = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto n = 2 + rng() % 7;
        const auto f = random_poly(rng, n, 2.0 / static_cast<double>(n));
        const auto out = satisfies_stability_condition(f);
        CHECK(out.satisfied == (modulus_sum(f) < 1.0));
        if (out.satisfied) {
            ++satisfied;
            if (!f.support().empty())
                check_witness(f, out);
            CHECK(is_schur_stable(f).status == Stability::Stable);
        }
    }
    CHECK(satisfied > 200);
}

TEST_CASE("sharpness witness")
{
    SUBCASE("weights summing to one give a root at 1")
    {
        const std::vector<double> w{0.25, 0.25, 0.5};
        const auto f = sharpness_witness(3, w, 0.0);
        CHECK(f == MonicPolynomial({-0.25, -0.25, -0.5}));
        CHECK(std::abs(f(Complex{1.0, 0.0})) < 1e-15);
        CHECK(find_roots(f).max_modulus() >= 1.0 - 1e-9);
    }
    SUBCASE("random weights")
    {
        std::mt19937_64 rng(13);
        std::uniform_real_distribution<double> u(0.01, 1.0);
        for (std::size_t n = 1; n <= 8; ++n) {
            for (double eps : {0.0, 0.1, 1.0}) {
                for (int i = 0; i < 20; ++i) {
                    std::vector<double> w(n);
                    double total = 0.0;
                    for (auto& x : w)
                        total += (x = u(rng));
                    for (auto& x : w)
                        x *= (1.0 + eps) / total;
                    CHECK(find_roots(sharpness_witness(n, w, eps)).max_modulus() >= 1.0 - 1e-9);
                }
            }
        }
    }
    SUBCASE("invalid arguments")
    {
        const std::vector<double> w{0.5, 0.5};
        CHECK_THROWS_AS(sharpness_witness(3, w, 0.0), InvalidInput);
        CHECK_THROWS_AS(sharpness_witness(2, w, 0.1), InvalidInput);
        CHECK_THROWS_AS(sharpness_witness(2, w, -0.1), InvalidInput);
    }
}

TEST_CASE("necessary condition")
{
    SUBCASE("examples")
    {
        const auto a = necessary_condition(MonicPolynomial({0.1, 3.0}));
        CHECK_FALSE(a.satisfied);
        CHECK(a.violated_at == std::size_t{1});
        const auto b = necessary_condition(MonicPolynomial({3.0, 2.0, 2.5, 0.0, 0.0}));
        CHECK_FALSE(b.satisfied);
        CHECK(b.violated_at == std::size_t{0});
        CHECK(necessary_condition(MonicPolynomial({0.7, 0.2, 0.9, 0.0, 0.0})).satisfied);
    }
    SUBCASE("violation implies instability")
    {
        std::mt19937_64 rng(29);
        int violated = 0;
        for (int i = 0; i < 1000; ++i) {
            const auto n = 2 + rng() % 7;
            const auto f = random_poly(rng, n, 4.0);
            const auto out = necessary_condition(f);
            if (!out.satisfied) {
                ++violated;
                CHECK(is_schur_stable(f).status == Stability::Unstable);
            }
        }
        CHECK(violated > 100);
    }
    SUBCASE("stable polynomials satisfy it")
    {
        std::mt19937_64 rng(30);
        for (int i = 0; i < 300; ++i) {
            const auto f = random_poly(rng, 2 + rng() % 7, 2.0);
            if (is_schur_stable(f).status == Stability::Stable)
                CHECK(necessary_condition(f).satisfied);
        }
    }
}

TEST_CASE("product criteria examples")
{
    const MonicPolynomial f({0.5, 0.3});
    SUBCASE("variant a")
    {
        const auto out = theorem3_check(f, MonicPolynomial({1.0, 1.0}), Thm3Variant::A);
        CHECK(out.satisfied);
        CHECK(out.criterion == Criterion::Thm3a);
        CHECK(hadamard_product(f, MonicPolynomial({1.0, 1.0})) == f);
    }
    SUBCASE("variant b")
    {
        const MonicPolynomial g({1.0, 2.0});
        CHECK(theorem3_check(f, g, Thm3Variant::B).satisfied);
        CHECK_FALSE(theorem3_check(f, g, Thm3Variant::A).satisfied);
        const auto s = szego_product(f, g);
        CHECK(s.coeff(1).real() == doctest::Approx(0.3));
        CHECK(satisfies_stability_condition(s).satisfied);
    }
    SUBCASE("variant c with two polynomials that fail the condition")
    {
        const MonicPolynomial h({0.6, 0.6});
        CHECK_FALSE(satisfies_stability_condition(h).satisfied);
        CHECK(theorem3_check(h, h, Thm3Variant::C).satisfied);
        CHECK(is_schur_stable(hadamard_product(h, h)).status == Stability::Stable);
    }
    SUBCASE("regression: the criterion holds while g is unstable")
    {
        // g = s^2 - s - 1 has the root (1 + sqrt 5)/2.
        const MonicPolynomial g({-1.0, -1.0});
        CHECK(is_schur_stable(g).status == Stability::Unstable);
        const auto out = theorem3_check(f, g, Thm3Variant::A);
        CHECK(out.satisfied);
        CHECK(is_schur_stable(hadamard_product(f, g)).status == Stability::Stable);
        CHECK(is_schur_stable(szego_product(f, g)).status == Stability::Stable);
    }
    SUBCASE("failures and errors")
    {
        CHECK_FALSE(theorem3_check(MonicPolynomial({0.6, 0.6}), MonicPolynomial({0.1, 0.1}), Thm3Variant::A).satisfied);
        CHECK_FALSE(theorem3_check(f, MonicPolynomial({1.0, 2.5}), Thm3Variant::B).satisfied);
        CHECK_FALSE(theorem3_check(MonicPolynomial({0.8, 0.8}), MonicPolynomial({0.1, 0.1}), Thm3Variant::C).satisfied);
        CHECK_THROWS_AS(theorem3_check(f, MonicPolynomial({0.1, 0.1, 0.1}), Thm3Variant::A), InvalidInput);
    }
}

TEST_CASE("product criteria soundness")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> pick(0, 2);
    int counts[3] = {0, 0, 0};
    int attempts = 0;
    while (counts[0] + counts[1] + counts[2] < 1000 && attempts < 200000) {
        ++attempts;
        const int v = pick(rng);
        const auto n = 2 + rng() % 7;
        const double scale = v == 2 ? 1.5 / std::sqrt(static_cast<double>(n)) : 1.0 / static_cast<double>(n);
        const auto f = random_poly(rng, n, 1.6 * scale);
        const auto g = random_poly(rng, n, v == 0 ? 1.2 : v == 1 ? 1.5 * binomial(n, n / 2) : 1.6 * scale);
        const auto variant = static_cast<Thm3Variant>(v);
        const auto out = theorem3_check(f, g, variant);
        if (!out.satisfied)
            continue;
        ++counts[v];
        const auto szego = szego_product(f, g);
        CHECK(satisfies_stability_condition(szego).satisfied);
        CHECK(is_schur_stable(szego).status == Stability::Stable);
        if (variant != Thm3Variant::B) {
            const auto had = hadamard_product(f, g);
            CHECK(satisfies_stability_condition(had).satisfied);
            CHECK(is_schur_stable(had).status == Stability::Stable);
        }
    }
    CHECK(counts[0] > 100);
    CHECK(counts[1] > 100);
    CHECK(counts[2] > 100);
}

TEST_CASE("stabilizing partner")
{
    SUBCASE("example")
    {
        const MonicPolynomial f({5.0, 10.0});
        const auto g = stabilizing_partner(f);
        // lambda = 1/4, b_k = lambda / (2 (1 + |a_k|))
        CHECK(g.coeff(1).real() == doctest::Approx(0.25 / 22.0));
        CHECK(g.coeff(0).real() == doctest::Approx(0.25 / 12.0));
        CHECK(satisfies_stability_condition(hadamard_product(f, g)).satisfied);
    }
    SUBCASE("empty support")
    {
        CHECK(stabilizing_partner(MonicPolynomial::monomial(4)) == MonicPolynomial::monomial(4));
    }
    SUBCASE("random inputs")
    {
        std::mt19937_64 rng(53);
        for (int i = 0; i < 500; ++i) {
            const auto f = random_poly(rng, 2 + rng() % 7, 50.0, 0.3);
            const auto g = stabilizing_partner(f);
            CHECK(g.support() == f.support());
            CHECK(satisfies_stability_condition(g).satisfied);
            CHECK(satisfies_stability_condition(hadamard_product(f, g)).satisfied);
            CHECK(satisfies_stability_condition(szego_product(f, g)).satisfied);
            CHECK(is_schur_stable(g).status == Stability::Stable);
        }
    }
}
