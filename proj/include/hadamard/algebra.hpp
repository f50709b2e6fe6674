#pragma once

#include <cstddef>
#include <vector>

#include "hadamard/polynomial.hpp"

namespace hadamard {

/// The set of branch polynomials making up f^[k/m].
///
/// Only nonzero coefficients branch (0^p = 0), so the set has m^{|N_f|}
/// members. branch_index[i][j] is the root-of-unity index l chosen for the
/// j-th support index of member i.
struct BranchSet {
    MonicPolynomial base;
    RationalExponent exponent;
    std::vector<MonicPolynomial> members;
    std::vector<std::vector<int>> branch_index;
};

/// Coefficient-wise product; throws InvalidInput on degree mismatch.
MonicPolynomial hadamard_product(const MonicPolynomial& f, const MonicPolynomial& g);

/// h(s) with coefficients 1/C(n,k); the leading 1/C(n,n) = 1 keeps it monic.
MonicPolynomial szego_weight(std::size_t n);

/// f o g o h
MonicPolynomial szego_product(const MonicPolynomial& f, const MonicPolynomial& g);

/// All branches of f^[p]. Branch l of a nonzero a = |a|e^{i alpha} is
/// |a|^p (cos(p alpha + 2 pi l/m) + i sin(p alpha + 2 pi l/m)) with alpha the
/// principal argument in (-pi, pi].
BranchSet hadamard_power(const MonicPolynomial& f, const RationalExponent& p);

/// The l = 0 branch of f^[p] for any real p.
MonicPolynomial principal_power(const MonicPolynomial& f, double p);

MonicPolynomial conjugate(const MonicPolynomial& f);

/// conj(f) * f as an ordinary product: degree 2n, imaginary parts zeroed.
MonicPolynomial real_form(const MonicPolynomial& f);

struct FractionalTerm {
    Rational power;
    Complex coeff;
};

/// s^{sigma_n} + sum_k a_k s^{sigma_k} with exact rational powers.
///
/// `terms` lists the non-leading terms in strictly decreasing power order,
/// each power below `leading_power` and nonnegative; only a constant term
/// may have power 0.
struct FractionalPolynomial {
    Rational leading_power;
    std::vector<FractionalTerm> terms;

    void validate() const;
};

struct IntegerOrderForm {
    Rational alpha;
    MonicPolynomial poly;
};

/// Substitutes w = s^alpha with alpha the largest common rational divisor of
/// all powers. Throws UnsupportedInput when the resulting degree exceeds
/// max_degree.
IntegerOrderForm to_integer_order(const FractionalPolynomial& f, std::size_t max_degree = 4096);

} // namespace hadamard
