#include "hadamard/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Eigenvalues>

namespace hadamard {

namespace {

constexpr double kStopFactor = 4.0 * DBL_EPSILON;

// Newton correction p/p' and relative backward error at z for a polynomial
// given by its full ascending coefficient vector (leading entry last).
struct NewtonStep {
    Complex correction;
    double backward_error;
};

NewtonStep newton_step(const std::vector<Complex>& c, const Complex& z)
{
    const std::size_t d = c.size() - 1;
    const double r = std::abs(z);
    if (r <= 1.0) {
        Complex p = c[d], dp = 0.0;
        double scale = std::abs(c[d]);
        for (std::size_t i = d; i-- > 0;) {
            dp = dp * z + p;
            p = p * z + c[i];
            scale = scale * r + std::abs(c[i]);
        }
        const Complex corr = (dp == Complex{}) ? Complex{} : p / dp;
        return {corr, scale > 0.0 ? std::abs(p) / scale : 0.0};
    }
    // Reversed evaluation in y = 1/z avoids overflow for large roots:
    // p(z) = z^d R(y), p'(z) = z^{d-1} (d R(y) - y R'(y)).
    const Complex y = 1.0 / z;
    const double ry = 1.0 / r;
    Complex R = c[0], dR = 0.0;
    double scale = std::abs(c[0]);
    for (std::size_t i = 1; i <= d; ++i) {
        dR = dR * y + R;
        R = R * y + c[i];
        scale = scale * ry + std::abs(c[i]);
    }
    const Complex denom = static_cast<double>(d) * R - y * dR;
    const Complex corr = (denom == Complex{}) ? Complex{} : z * R / denom;
    return {corr, scale > 0.0 ? std::abs(R) / scale : 0.0};
}

// Newton-polygon starting points: circles whose radii come from the upper convex
// hull of (i, log|c_i|).
std::vector<Complex> initial_guesses(const std::vector<Complex>& c)
{
    const std::size_t d = c.size() - 1;
    std::vector<double> logs(d + 1);
    for (std::size_t i = 0; i <= d; ++i)
        logs[i] = is_zero(c[i]) ? -HUGE_VAL : std::log(std::abs(c[i]));

    std::vector<std::size_t> hull;
    for (std::size_t i = 0; i <= d; ++i) {
        if (logs[i] == -HUGE_VAL)
            continue;
        while (hull.size() >= 2) {
            const auto a = hull[hull.size() - 2], b = hull.back();
            const double cross = (static_cast<double>(b) - a) * (logs[i] - logs[a]) -
                                 (static_cast<double>(i) - a) * (logs[b] - logs[a]);
            if (cross >= 0.0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(i);
    }

    std::vector<Complex> z;
    z.reserve(d);
    constexpr double kOffset = 0.7;
    for (std::size_t h = 0; h + 1 < hull.size(); ++h) {
        const auto lo = hull[h], hi = hull[h + 1];
        const auto count = hi - lo;
        const double radius = std::exp((logs[lo] - logs[hi]) / static_cast<double>(count));
        for (std::size_t k = 0; k < count; ++k) {
            const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) / count +
                                                            static_cast<double>(lo) / d) + kOffset;
            z.push_back(std::polar(radius, angle));
        }
    }
    return z;
}

bool aberth(const std::vector<Complex>& c, std::vector<Complex>& z)
{
    const std::size_t d = z.size();
    std::vector<bool> done(d, false);
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool all_done = true;
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i])
                continue;
            const auto step = newton_step(c, z[i]);
            if (step.backward_error <= kStopFactor * static_cast<double>(d + 1)) {
                done[i] = true;
                continue;
            }
            all_done = false;
            Complex sum = 0.0;
            for (std::size_t j = 0; j < d; ++j)
                if (j != i && z[i] != z[j])
                    sum += 1.0 / (z[i] - z[j]);
            const Complex denom = 1.0 - step.correction * sum;
            const Complex w = (denom == Complex{}) ? step.correction : step.correction / denom;
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                return false;
            z[i] -= w;
            if (std::abs(w) <= DBL_EPSILON * std::abs(z[i]))
                done[i] = true;
        }
        if (all_done)
            return true;
    }
    return std::all_of(done.begin(), done.end(), [](bool b) { return b; });
}

std::vector<Complex> companion_eigenvalues(const std::vector<Complex>& c)
{
    const auto d = static_cast<Eigen::Index>(c.size() - 1);
    Eigen::MatrixXcd K = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index i = 1; i < d; ++i)
        K(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i)
        K(i, d - 1) = -c[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(K, false);
    if (solver.info() != Eigen::Success)
        return {};
    std::vector<Complex> out(static_cast<std::size_t>(d));
    for (Eigen::Index i = 0; i < d; ++i)
        out[static_cast<std::size_t>(i)] = solver.eigenvalues()(i);
    return out;
}

} // namespace

namespace {

double set_error(const std::vector<Complex>& c, const std::vector<Complex>& z)
{
    const auto rebuilt = expand_from_roots(z);
    double err = 0.0, scale = 0.0;
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        err = std::max(err, std::abs(rebuilt[k] - c[k]));
        scale = std::max(scale, std::abs(c[k]));
    }
    return err / (1.0 + scale);
}

} // namespace

const char* to_string(Stability s) noexcept
{
    switch (s) {
    case Stability::Stable:
        return "stable";
    case Stability::Unstable:
        return "unstable";
    case Stability::Marginal:
        return "marginal";
    }
    return "?";
}

double RootSet::max_modulus() const noexcept
{
    double m = 0.0;
    for (const auto& z : roots)
        m = std::max(m, std::abs(z));
    return m;
}

StabilityVerdict classify(double max_modulus) noexcept
{
    Stability s = Stability::Marginal;
    if (max_modulus < 1.0 - kBoundaryBand)
        s = Stability::Stable;
    else if (max_modulus > 1.0 + kBoundaryBand)
        s = Stability::Unstable;
    return {s, max_modulus, max_modulus - 1.0};
}

std::vector<Complex> expand_from_roots(const std::vector<Complex>& roots)
{
    std::vector<Complex> c{1.0};
    for (const auto& z : roots) {
        c.push_back(0.0);
        for (std::size_t i = c.size() - 1; i > 0; --i)
            c[i] = c[i - 1] - z * c[i];
        c[0] = -z * c[0];
    }
    c.pop_back();
    return c;
}

RootSet find_roots(const MonicPolynomial& f)
{
    const std::size_t n = f.degree();
    std::size_t zeros = 0;
    while (zeros < n && is_zero(f.coeff(zeros)))
        ++zeros;

    RootSet out;
    out.roots.assign(zeros, Complex{});
    out.residuals.assign(zeros, 0.0);
    out.converged.assign(zeros, true);
    if (zeros == n)
        return out;

    // Remaining factor q(s) = f(s) / s^zeros with q(0) != 0.
    std::vector<Complex> q(f.coeffs().begin() + static_cast<std::ptrdiff_t>(zeros), f.coeffs().end());
    q.push_back(1.0);

    std::vector<Complex> z = initial_guesses(q);
    if (!aberth(q, z)) {
        auto eig = companion_eigenvalues(q);
        if (!eig.empty()) {
            z = std::move(eig);
            aberth(q, z);
        }
    }
    // Aberth freezes each member of a multiple root independently, so the
    // cluster may not reproduce the coefficients; the companion eigenvalues
    // are backward stable as a set and serve as a fallback.
    if (set_error(q, z) > kReconstructionTolerance) {
        auto eig = companion_eigenvalues(q);
        if (!eig.empty() && set_error(q, eig) < set_error(q, z))
            z = std::move(eig);
    }

    for (const auto& root : z) {
        const double be = newton_step(q, root).backward_error;
        out.roots.push_back(root);
        out.residuals.push_back(be);
        out.converged.push_back(std::isfinite(be) && be <= kResidualTolerance);
    }

    // Sort by modulus, then argument, carrying residual data along.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double ma = std::abs(out.roots[a]), mb = std::abs(out.roots[b]);
        if (ma != mb)
            return ma < mb;
        return std::arg(out.roots[a]) < std::arg(out.roots[b]);
    });
    RootSet sorted;
    for (auto i : order) {
        sorted.roots.push_back(out.roots[i]);
        sorted.residuals.push_back(out.residuals[i]);
        sorted.converged.push_back(out.converged[i]);
    }

    const auto rebuilt = expand_from_roots(sorted.roots);
    double err = 0.0;
    for (std::size_t k = 0; k < n; ++k)
        err = std::max(err, std::abs(rebuilt[k] - f.coeff(k)));
    sorted.reconstruction_error = err / (1.0 + f.max_coeff_modulus());

    const bool all_converged = std::all_of(sorted.converged.begin(), sorted.converged.end(), [](bool b) { return b; });
    if (!all_converged && !(sorted.reconstruction_error <= kReconstructionTolerance))
        throw Unconverged("root finder did not converge (reconstruction error " +
                              std::to_string(sorted.reconstruction_error) + ")",
                          std::move(sorted));
    return sorted;
}

StabilityVerdict is_schur_stable(const MonicPolynomial& f)
{
    return classify(find_roots(f).max_modulus());
}

BranchSetVerdict branch_set_stable(const BranchSet& b)
{
    BranchSetVerdict out{classify(0.0), 0};
    bool any_unstable = false, all_stable = true;
    double worst = -1.0;
    for (std::size_t i = 0; i < b.members.size(); ++i) {
        StabilityVerdict v;
        try {
            v = is_schur_stable(b.members[i]);
        } catch (const Unconverged& e) {
            throw Unconverged("branch member " + std::to_string(i) + ": " + e.what(), e.partial);
        }
        any_unstable = any_unstable || v.status == Stability::Unstable;
        all_stable = all_stable && v.status == Stability::Stable;
        if (v.max_modulus > worst) {
            worst = v.max_modulus;
            out.worst_member = i;
        }
    }
    out.verdict = classify(worst);
    out.verdict.status = all_stable ? Stability::Stable : any_unstable ? Stability::Unstable : Stability::Marginal;
    return out;
}

double fujiwara_bound(const MonicPolynomial& f, const SimplexWeights& w)
{
    const auto support = f.support();
    if (support != w.support())
        throw InvalidInput("weight support does not match the polynomial support");
    const auto n = static_cast<double>(f.degree());
    double bound = 0.0;
    for (std::size_t j = 0; j < support.size(); ++j) {
        const auto k = static_cast<double>(support[j]);
        bound = std::max(bound, std::pow(std::abs(f.coeff(support[j])) / w.weights()[j], 1.0 / (n - k)));
    }
    return bound;
}

} // namespace hadamard
