#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hadamard/algebra.hpp"
#include "hadamard/polynomial.hpp"
#include "hadamard/weights.hpp"

namespace hadamard {

inline constexpr double kResidualTolerance = 1e-10;
inline constexpr double kReconstructionTolerance = 1e-8;
inline constexpr double kBoundaryBand = 1e-9;
inline constexpr int kMaxSweeps = 200;

/// All n roots of a monic polynomial, nondecreasing in modulus.
///
/// residuals[i] is the relative backward error |f(z)| / sum_k |a_k||z|^k of
/// roots[i] (a_n = 1). A root whose residual exceeds kResidualTolerance is
/// flagged in `converged`; such a set is still returned when the polynomial
/// rebuilt from the roots matches the input (clustered or multiple roots).
struct RootSet {
    std::vector<Complex> roots;
    std::vector<double> residuals;
    std::vector<bool> converged;
    double reconstruction_error = 0.0;

    double max_modulus() const noexcept;
};

struct Unconverged : NumericalFailure {
    Unconverged(const std::string& what, RootSet partial_roots)
        : NumericalFailure(what), partial(std::move(partial_roots))
    {
    }
    RootSet partial;
};

enum class Stability { Stable, Unstable, Marginal };

const char* to_string(Stability s) noexcept;

struct StabilityVerdict {
    Stability status;
    double max_modulus;
    double margin; // max_modulus - 1
};

/// Verdict for a given maximum root modulus, using the kBoundaryBand.
StabilityVerdict classify(double max_modulus) noexcept;

/// Aberth-Ehrlich iteration seeded from the Newton polygon of the
/// coefficient moduli, with a companion-matrix eigenvalue fallback.
RootSet find_roots(const MonicPolynomial& f);

StabilityVerdict is_schur_stable(const MonicPolynomial& f);

struct BranchSetVerdict {
    StabilityVerdict verdict;
    std::size_t worst_member; // index of the member with the largest max modulus
};

/// Stable iff every member is; Unstable if any member is.
BranchSetVerdict branch_set_stable(const BranchSet& b);

/// Monic coefficients a_0..a_{n-1} of prod (s - z_i).
std::vector<Complex> expand_from_roots(const std::vector<Complex>& roots);

/// max over k in N_f of (|a_k| / lambda_k)^{1/(n-k)}; bounds every root modulus.
/// The weight support must equal N_f.
double fujiwara_bound(const MonicPolynomial& f, const SimplexWeights& w);

} // namespace hadamard
