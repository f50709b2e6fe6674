#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>

#include "hadamard/polynomial.hpp"

namespace hadamard {

enum class ThresholdKind { SufficientMax, SufficientMin, InstabilityMax, InstabilityMin, ExactOnset };
enum class ThresholdMethod { GridSearch, EquationSolve, Bisection, GuardianMap, Formula };
enum class Mode { Max, Min };
enum class Direction { Increasing, Decreasing };

const char* to_string(ThresholdKind k) noexcept;
const char* to_string(ThresholdMethod m) noexcept;

/// A power threshold. `value` is -inf / +inf when the threshold is vacuous
/// (empty support: stable for every p).
struct ThresholdResult {
    ThresholdKind kind;
    double value;
    ThresholdMethod method;
    std::optional<std::pair<double, double>> bracket;
    std::optional<std::size_t> grid_resolution;
};

struct BracketError : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

struct MarginalZone : NumericalFailure {
    using NumericalFailure::NumericalFailure;
};

inline constexpr double kDefaultTolerance = 1e-6;
inline constexpr int kMaxBisections = 200;

/// Sufficient threshold approximated on the weight grid of resolution R:
/// lambda = (c_1/R, ..., c_d/R) over positive integer compositions of R.
///
/// mode Max needs 0 < |a_k| < 1 on N_f and minimizes max_k ln lambda_k / ln|a_k|;
/// mode Min needs |a_k| > 1 on N_f and maximizes the min. Each ratio is
/// monotone in its own c_k, so the grid optimum is reached by greedy unit
/// allocation to the currently binding index; this equals exhaustive
/// enumeration of the compositions.
ThresholdResult pstar_grid(const MonicPolynomial& f, Mode mode, std::size_t grid_n);

/// Sufficient threshold as the unique root p0 of sum_{k in N_f} |a_k|^p = 1.
///
/// For mode Max the condition |a_k|^p < lambda_k for some lambda in Lambda_f
/// holds iff sum |a_k|^p < 1, and the sum decreases strictly in p, so every
/// p > p0 qualifies and none below does; the infimum over the simplex is the
/// limit lambda_k -> |a_k|^{p0}. Mode Min mirrors this with an increasing sum.
/// Bisection runs to the limit of double precision; the bracket width is at
/// most tol.
ThresholdResult pstar_exact(const MonicPolynomial& f, Mode mode, double tol = kDefaultTolerance);

/// Instability bounds ln C(n,k) / ln|a_k|.
ThresholdResult beta_star(const MonicPolynomial& f, Mode mode);

enum class HalfLine { NonPositive, NonNegative, Both };

const char* to_string(HalfLine h) noexcept;

struct KStarResult {
    std::size_t kstar;
    HalfLine unstable_for;
};

/// Lowest-index sign test: the lowest support index decides a half-line of instability.
KStarResult kstar_test(const MonicPolynomial& f);

/// Largest power (Increasing) or smallest power (Decreasing) at which the
/// principal-branch power f^[p] changes from not Schur stable to Stable.
///
/// The bracket [lo, hi] must show a verdict change in the requested direction.
/// A coarse scan of the bracket locates the crossing nearest the stable end,
/// then the crossing is bisected to width tol.
ThresholdResult exact_onset(const MonicPolynomial& f, Direction direction, double lo, double hi,
                            double tol = kDefaultTolerance);

/// Guardian map value at power p. r is f^[p] (principal branch) when f is
/// real, else its real form conj(f^[p]) f^[p]; the value is
/// r(1) r(-1) det(C2(K) - I) with K the companion matrix of r and C2 its
/// second compound, whose eigenvalues are z_i z_j for i < j. Degree of f is
/// limited to 12.
double guardian_map(const MonicPolynomial& f, double p);

/// Onset located as the extreme sign change of guardian_map in [lo, hi]
/// (largest for Increasing, smallest for Decreasing), bisected to tol.
ThresholdResult guardian_onset(const MonicPolynomial& f, Direction direction, double lo, double hi,
                               double tol = kDefaultTolerance);

namespace detail {

/// Onset search on an arbitrary max-modulus function; exposed for testing.
ThresholdResult bisect_onset(const std::function<double(double)>& max_modulus, Direction direction, double lo,
                             double hi, double tol);

} // namespace detail

} // namespace hadamard
