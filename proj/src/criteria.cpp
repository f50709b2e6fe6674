#include "hadamard/criteria.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hadamard/algebra.hpp"

namespace hadamard {

namespace {

// Slack construction shared by the stability condition and product variant C:
// given moduli with strict sum < 1, returns weights that dominate them.
std::optional<SimplexWeights> slack_witness(const std::vector<std::size_t>& support, const std::vector<double>& moduli)
{
    const double total = std::accumulate(moduli.begin(), moduli.end(), 0.0);
    if (support.empty() || !(total < 1.0))
        return std::nullopt;
    const double slack = (1.0 - total) / static_cast<double>(support.size());
    std::vector<double> w(moduli.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        w[i] = std::min(1.0, moduli[i] + slack);
    return SimplexWeights(support, std::move(w));
}

std::vector<std::size_t> common_support(const MonicPolynomial& f, const MonicPolynomial& g)
{
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < f.degree(); ++k)
        if (!is_zero(f.coeff(k)) && !is_zero(g.coeff(k)))
            out.push_back(k);
    return out;
}

} // namespace

const char* to_string(Criterion c) noexcept
{
    switch (c) {
    case Criterion::Fujiwara:
        return "fujiwara";
    case Criterion::Necessary:
        return "necessary";
    case Criterion::Thm3a:
        return "thm3a";
    case Criterion::Thm3b:
        return "thm3b";
    case Criterion::Thm3c:
        return "thm3c";
    }
    return "?";
}

CriterionOutcome satisfies_stability_condition(const MonicPolynomial& f)
{
    const auto support = f.support();
    CriterionOutcome out{Criterion::Fujiwara, false, std::nullopt, std::nullopt};
    if (support.empty()) {
        out.satisfied = true;
        return out;
    }
    std::vector<double> moduli;
    for (auto k : support)
        moduli.push_back(std::abs(f.coeff(k)));
    out.witness = slack_witness(support, moduli);
    out.satisfied = out.witness.has_value();
    return out;
}

MonicPolynomial sharpness_witness(std::size_t n, std::span<const double> weights, double eps)
{
    if (n == 0 || weights.size() != n)
        throw InvalidInput("sharpness witness needs exactly n weights");
    if (!(eps >= 0.0))
        throw InvalidInput("eps must be nonnegative");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0))
            throw InvalidInput("sharpness weights must be positive");
        total += w;
    }
    if (std::abs(total - (1.0 + eps)) > 1e-12)
        throw InvalidInput("weights sum to " + std::to_string(total) + ", expected 1 + eps");
    std::vector<Complex> c(n);
    for (std::size_t k = 0; k < n; ++k)
        c[k] = -weights[k];
    return MonicPolynomial(std::move(c));
}

CriterionOutcome necessary_condition(const MonicPolynomial& f)
{
    CriterionOutcome out{Criterion::Necessary, true, std::nullopt, std::nullopt};
    const auto n = f.degree();
    for (std::size_t k = 0; k < n; ++k) {
        if (!(std::abs(f.coeff(k)) < binomial(n, k))) {
            out.satisfied = false;
            out.violated_at = k;
            break;
        }
    }
    return out;
}

CriterionOutcome theorem3_check(const MonicPolynomial& f, const MonicPolynomial& g, Thm3Variant variant)
{
    if (f.degree() != g.degree())
        throw InvalidInput("degree mismatch: " + std::to_string(f.degree()) + " vs " + std::to_string(g.degree()));
    const auto n = f.degree();
    const auto common = common_support(f, g);

    CriterionOutcome out{variant == Thm3Variant::A   ? Criterion::Thm3a
                         : variant == Thm3Variant::B ? Criterion::Thm3b
                                                     : Criterion::Thm3c,
                         false, std::nullopt, std::nullopt};

    bool need_hadamard = false;
    switch (variant) {
    case Thm3Variant::A:
    case Thm3Variant::B: {
        const auto base = satisfies_stability_condition(f);
        if (!base.satisfied)
            return out;
        for (auto k : common) {
            const double cap = variant == Thm3Variant::A ? 1.0 : binomial(n, k);
            if (!(std::abs(g.coeff(k)) <= cap))
                return out;
        }
        out.satisfied = true;
        out.witness = base.witness;
        need_hadamard = variant == Thm3Variant::A;
        break;
    }
    case Thm3Variant::C: {
        std::vector<double> squares;
        for (auto k : common) {
            const double m = std::max(std::abs(f.coeff(k)), std::abs(g.coeff(k)));
            squares.push_back(m * m);
        }
        if (common.empty()) {
            out.satisfied = true;
        } else {
            out.witness = slack_witness(common, squares);
            out.satisfied = out.witness.has_value();
        }
        need_hadamard = true;
        break;
    }
    }

    if (out.satisfied) {
        if (!satisfies_stability_condition(szego_product(f, g)).satisfied ||
            (need_hadamard && !satisfies_stability_condition(hadamard_product(f, g)).satisfied))
            throw std::logic_error(std::string(to_string(out.criterion)) +
                                   " held but a guaranteed product fails the stability condition");
    }
    return out;
}

MonicPolynomial stabilizing_partner(const MonicPolynomial& f)
{
    const auto support = f.support();
    std::vector<Complex> b(f.degree());
    if (support.empty())
        return MonicPolynomial(std::move(b));
    const double lambda = 1.0 / (2.0 * static_cast<double>(support.size()));
    for (auto k : support)
        b[k] = lambda / (2.0 * (1.0 + std::abs(f.coeff(k))));
    return MonicPolynomial(std::move(b));
}

} // namespace hadamard
