#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "hadamard/polynomial.hpp"
#include "hadamard/weights.hpp"

namespace hadamard {

enum class Criterion { Fujiwara, Necessary, Thm3a, Thm3b, Thm3c };

const char* to_string(Criterion c) noexcept;

struct CriterionOutcome {
    Criterion criterion;
    bool satisfied = false;
    std::optional<SimplexWeights> witness;
    // First index violating the criterion, where one exists (Necessary only).
    std::optional<std::size_t> violated_at;
};

/// Existence of lambda in Lambda_f with |a_k| < lambda_k on N_f.
///
/// This holds iff sum_{k in N_f} |a_k| < 1: given the strict sum, the weights
/// lambda_k = |a_k| + (1 - sum)/|N_f| are positive, each at most 1, sum to 1
/// and dominate |a_k| strictly. Satisfied implies Schur stability.
CriterionOutcome satisfies_stability_condition(const MonicPolynomial& f);

/// s^n - sum lambda_k s^k for n positive weights summing to 1 + eps
/// (eps >= 0); always has a real root >= 1.
MonicPolynomial sharpness_witness(std::size_t n, std::span<const double> weights, double eps);

/// |a_k| < C(n, k) for every k; a violation proves instability.
CriterionOutcome necessary_condition(const MonicPolynomial& f);

enum class Thm3Variant { A, B, C };

/// Product criteria for f o g and the Szego product f o g o h.
///  A: f satisfies the stability condition and |b_k| <= 1 on N_f cap N_g.
///  B: f satisfies the stability condition and |b_k| <= C(n,k) on N_f cap N_g.
///  C: max(|a_k|, |b_k|)^2 summed over N_f cap N_g is < 1.
/// A satisfied outcome carries a witness for the product(s) the variant
/// guarantees; the guarantee is re-checked before returning.
CriterionOutcome theorem3_check(const MonicPolynomial& f, const MonicPolynomial& g, Thm3Variant variant);

/// g with b_k = lambda / (2 (1 + |a_k|)) on N_f, lambda = 1 / (2 |N_f|).
/// g, f o g and the Szego product of f and g all satisfy the stability condition.
MonicPolynomial stabilizing_partner(const MonicPolynomial& f);

} // namespace hadamard
