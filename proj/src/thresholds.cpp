#include "hadamard/thresholds.hpp"

#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include <Eigen/LU>

#include "hadamard/algebra.hpp"
#include "hadamard/roots.hpp"

namespace hadamard {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kScanCells = 64;
constexpr int kGuardianScanCells = 256;
// Below this bracket width a transversal crossing is expected to leave
// midpoints inside the boundary band, so marginal verdicts no longer count.
constexpr double kMarginalWidth = 1e-6;

// Moduli on N_f after checking the sufficient-threshold hypothesis for the mode.
std::vector<double> sufficient_moduli(const MonicPolynomial& f, Mode mode)
{
    std::vector<double> moduli;
    for (auto k : f.support()) {
        const double m = std::abs(f.coeff(k));
        const bool ok = mode == Mode::Max ? m < 1.0 : m > 1.0;
        if (!ok)
            throw NotApplicable("|a_" + std::to_string(k) + "| = " + std::to_string(m) +
                                (mode == Mode::Max ? " is not < 1" : " is not > 1") +
                                "; no sufficient threshold exists");
        moduli.push_back(m);
    }
    return moduli;
}

ThresholdKind sufficient_kind(Mode mode)
{
    return mode == Mode::Max ? ThresholdKind::SufficientMax : ThresholdKind::SufficientMin;
}

double vacuous_value(Mode mode)
{
    return mode == Mode::Max ? -kInf : kInf;
}

bool is_stable(double max_modulus)
{
    return classify(max_modulus).status == Stability::Stable;
}

bool is_marginal(double max_modulus)
{
    return classify(max_modulus).status == Stability::Marginal;
}

} // namespace

const char* to_string(ThresholdKind k) noexcept
{
    switch (k) {
    case ThresholdKind::SufficientMax:
        return "sufficient_max";
    case ThresholdKind::SufficientMin:
        return "sufficient_min";
    case ThresholdKind::InstabilityMax:
        return "instability_max";
    case ThresholdKind::InstabilityMin:
        return "instability_min";
    case ThresholdKind::ExactOnset:
        return "exact_onset";
    }
    return "?";
}

const char* to_string(ThresholdMethod m) noexcept
{
    switch (m) {
    case ThresholdMethod::GridSearch:
        return "grid";
    case ThresholdMethod::EquationSolve:
        return "exact";
    case ThresholdMethod::Bisection:
        return "bisection";
    case ThresholdMethod::GuardianMap:
        return "guardian_map";
    case ThresholdMethod::Formula:
        return "formula";
    }
    return "?";
}

const char* to_string(HalfLine h) noexcept
{
    switch (h) {
    case HalfLine::NonPositive:
        return "p<=0";
    case HalfLine::NonNegative:
        return "p>=0";
    case HalfLine::Both:
        return "both";
    }
    return "?";
}

ThresholdResult pstar_grid(const MonicPolynomial& f, Mode mode, std::size_t grid_n)
{
    ThresholdResult out{sufficient_kind(mode), vacuous_value(mode), ThresholdMethod::GridSearch, std::nullopt, grid_n};
    const auto moduli = sufficient_moduli(f, mode);
    if (moduli.empty())
        return out;
    const std::size_t d = moduli.size();
    if (grid_n < d)
        throw InvalidInput("grid resolution " + std::to_string(grid_n) + " is below the support size " +
                           std::to_string(d));

    const double R = static_cast<double>(grid_n);
    std::vector<std::size_t> units(d, 1);
    auto ratio = [&](std::size_t i) {
        return std::log(static_cast<double>(units[i]) / R) / std::log(moduli[i]);
    };

    // Max mode: ratios decrease in their own c_k, so feed the largest.
    // Min mode: ratios increase in c_k, so feed the smallest.
    const double sign = mode == Mode::Max ? 1.0 : -1.0;
    using Entry = std::pair<double, std::size_t>;
    auto cmp = [](const Entry& a, const Entry& b) {
        return a.first != b.first ? a.first < b.first : a.second > b.second;
    };
    std::priority_queue<Entry, std::vector<Entry>, decltype(cmp)> heap(cmp);
    for (std::size_t i = 0; i < d; ++i)
        heap.emplace(sign * ratio(i), i);
    for (std::size_t step = d; step < grid_n; ++step) {
        const auto i = heap.top().second;
        heap.pop();
        ++units[i];
        heap.emplace(sign * ratio(i), i);
    }
    out.value = sign * heap.top().first;
    return out;
}

ThresholdResult pstar_exact(const MonicPolynomial& f, Mode mode, double tol)
{
    if (!(tol > 0.0))
        throw InvalidInput("tolerance must be positive");
    ThresholdResult out{sufficient_kind(mode), vacuous_value(mode), ThresholdMethod::EquationSolve, std::nullopt,
                        std::nullopt};
    const auto moduli = sufficient_moduli(f, mode);
    if (moduli.empty())
        return out;
    if (moduli.size() == 1) {
        out.value = 0.0;
        out.bracket = {0.0, 0.0};
        return out;
    }

    std::vector<double> logs;
    for (double m : moduli)
        logs.push_back(std::log(m));
    auto excess = [&](double p) {
        double s = 0.0;
        for (double l : logs)
            s += std::exp(p * l);
        return s - 1.0;
    };

    // excess > 0 on the "not yet" side: below p0 for Max, above p0 for Min.
    double inner = 0.0;
    double outer = mode == Mode::Max ? 64.0 : -64.0;
    while (excess(outer) > 0.0) {
        inner = outer;
        outer *= 2.0;
        if (std::abs(outer) > 1e12)
            throw NumericalFailure("could not bracket the threshold equation");
    }
    for (int it = 0; it < kMaxBisections; ++it) {
        const double mid = 0.5 * (inner + outer);
        if (mid == inner || mid == outer)
            break;
        (excess(mid) > 0.0 ? inner : outer) = mid;
    }
    const double lo = std::min(inner, outer), hi = std::max(inner, outer);
    if (hi - lo > tol)
        throw NumericalFailure("bisection did not reach the requested tolerance");
    out.value = std::abs(excess(inner)) < std::abs(excess(outer)) ? inner : outer;
    out.bracket = {lo, hi};
    return out;
}

ThresholdResult beta_star(const MonicPolynomial& f, Mode mode)
{
    const auto n = f.degree();
    bool found = false;
    double best = mode == Mode::Max ? kInf : -kInf;
    for (auto k : f.support()) {
        const double m = std::abs(f.coeff(k));
        if (mode == Mode::Max ? !(m > 1.0) : !(m < 1.0))
            continue;
        const double v = std::log(binomial(n, k)) / std::log(m);
        best = mode == Mode::Max ? std::min(best, v) : std::max(best, v);
        found = true;
    }
    if (!found)
        throw NotApplicable(mode == Mode::Max ? "no coefficient with |a_k| > 1" : "no nonzero coefficient with |a_k| < 1");
    return {mode == Mode::Max ? ThresholdKind::InstabilityMax : ThresholdKind::InstabilityMin, best,
            ThresholdMethod::Formula, std::nullopt, std::nullopt};
}

KStarResult kstar_test(const MonicPolynomial& f)
{
    const auto support = f.support();
    if (support.empty())
        throw NotApplicable("empty support: f^[p] is stable for every p");
    const auto k = support.front();
    const double m = std::abs(f.coeff(k));
    const HalfLine h = m == 1.0 ? HalfLine::Both : m < 1.0 ? HalfLine::NonPositive : HalfLine::NonNegative;
    return {k, h};
}

namespace detail {

ThresholdResult bisect_onset(const std::function<double(double)>& max_modulus, Direction direction, double lo,
                             double hi, double tol)
{
    if (!(tol > 0.0) || !(lo < hi))
        throw InvalidInput("onset search needs lo < hi and tol > 0");

    const bool increasing = direction == Direction::Increasing;
    // Scan from the stable end toward the unstable end.
    const double stable_end = increasing ? hi : lo;
    const double unstable_end = increasing ? lo : hi;

    const double m_stable = max_modulus(stable_end);
    const double m_unstable = max_modulus(unstable_end);
    if (!is_stable(m_stable) || is_stable(m_unstable))
        throw BracketError(std::string("bracket [") + std::to_string(lo) + ", " + std::to_string(hi) +
                           "] does not show an unstable-to-stable change in the " +
                           (increasing ? "increasing" : "decreasing") + " direction");

    const double step = (unstable_end - stable_end) / kScanCells;
    auto scan_point = [&](int i) { return i >= kScanCells ? unstable_end : stable_end + step * i; };
    double good = stable_end, bad = unstable_end;
    for (int i = 1; i <= kScanCells; ++i) {
        const double x = scan_point(i);
        const double m = i == kScanCells ? m_unstable : max_modulus(x);
        if (is_stable(m)) {
            good = x;
            continue;
        }
        // Marginal over a whole scan cell means no isolated crossing.
        if (is_marginal(m) && i < kScanCells && is_marginal(max_modulus(scan_point(i + 1))))
            throw MarginalZone("maximum root modulus stays within the boundary band near p = " + std::to_string(x));
        bad = x;
        break;
    }

    int marginal_run = 0;
    for (int it = 0; it < kMaxBisections && std::abs(bad - good) > tol; ++it) {
        const double mid = 0.5 * (good + bad);
        if (mid == good || mid == bad)
            break;
        const double m = max_modulus(mid);
        if (is_stable(m)) {
            good = mid;
            marginal_run = 0;
        } else {
            bad = mid;
            marginal_run = is_marginal(m) && std::abs(bad - good) > kMarginalWidth ? marginal_run + 1 : 0;
            if (marginal_run >= 2)
                throw MarginalZone("maximum root modulus stays within the boundary band near p = " +
                                   std::to_string(mid));
        }
    }

    ThresholdResult out{ThresholdKind::ExactOnset, 0.5 * (good + bad), ThresholdMethod::Bisection,
                        std::pair{std::min(good, bad), std::max(good, bad)}, std::nullopt};
    return out;
}

} // namespace detail

ThresholdResult exact_onset(const MonicPolynomial& f, Direction direction, double lo, double hi, double tol)
{
    return detail::bisect_onset([&](double p) { return find_roots(principal_power(f, p)).max_modulus(); },
                                direction, lo, hi, tol);
}

double guardian_map(const MonicPolynomial& f, double p)
{
    if (f.degree() > 12)
        throw UnsupportedInput("guardian map supports degree <= 12, got " + std::to_string(f.degree()));

    const auto fp = principal_power(f, p);
    const auto r = fp.has_real_coeffs() ? fp : real_form(fp);
    const auto n = static_cast<Eigen::Index>(r.degree());

    Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 1; i < n; ++i)
        K(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i)
        K(i, n - 1) = -r.coeff(static_cast<std::size_t>(i)).real();

    // Second compound: rows and columns indexed by pairs i < j.
    const Eigen::Index dim = n * (n - 1) / 2;
    double det = 1.0;
    if (dim > 0) {
        std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = i + 1; j < n; ++j)
                pairs.emplace_back(i, j);
        Eigen::MatrixXd C(dim, dim);
        for (Eigen::Index a = 0; a < dim; ++a) {
            const auto [i, j] = pairs[static_cast<std::size_t>(a)];
            for (Eigen::Index b = 0; b < dim; ++b) {
                const auto [k, l] = pairs[static_cast<std::size_t>(b)];
                C(a, b) = K(i, k) * K(j, l) - K(i, l) * K(j, k);
            }
        }
        C -= Eigen::MatrixXd::Identity(dim, dim);
        det = C.partialPivLu().determinant();
    }
    return r(1.0).real() * r(-1.0).real() * det;
}

ThresholdResult guardian_onset(const MonicPolynomial& f, Direction direction, double lo, double hi, double tol)
{
    if (!(tol > 0.0) || !(lo < hi))
        throw InvalidInput("guardian search needs lo < hi and tol > 0");
    const bool increasing = direction == Direction::Increasing;
    const double start = increasing ? hi : lo;
    const double step = ((increasing ? lo : hi) - start) / kGuardianScanCells;

    auto sign = [](double v) { return (v > 0.0) - (v < 0.0); };
    double a = start;
    int sa = sign(guardian_map(f, a));
    for (int i = 1; i <= kGuardianScanCells; ++i) {
        double b = start + step * i;
        const int sb = sign(guardian_map(f, b));
        if (sb == 0)
            return {ThresholdKind::ExactOnset, b, ThresholdMethod::GuardianMap, std::pair{b, b}, std::nullopt};
        if (sb != sa) {
            for (int it = 0; it < kMaxBisections && std::abs(b - a) > tol; ++it) {
                const double mid = 0.5 * (a + b);
                const int sm = sign(guardian_map(f, mid));
                if (sm == 0)
                    return {ThresholdKind::ExactOnset, mid, ThresholdMethod::GuardianMap, std::pair{mid, mid},
                            std::nullopt};
                if (sm == sa)
                    a = mid;
                else
                    b = mid;
            }
            return {ThresholdKind::ExactOnset, 0.5 * (a + b), ThresholdMethod::GuardianMap,
                    std::pair{std::min(a, b), std::max(a, b)}, std::nullopt};
        }
        a = b;
        sa = sb;
    }
    throw BracketError("guardian map has no sign change in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

} // namespace hadamard
