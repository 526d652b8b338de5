#pragma once

#include <string>
#include <vector>

#include "fracsplit/fde.hpp"
#include "fracsplit/mlf.hpp"
#include "fracsplit/rational.hpp"

namespace fracsplit::sdomain {

struct STerm {
    Rational coeff;
    Rational exponent;

    bool operator==(const STerm&) const = default;
};

// Fractional-exponent polynomial sum c_i s^{e_i}, exponents distinct and
// descending, no zero coefficients. Exponents may be negative.
struct SPoly {
    std::vector<STerm> terms;

    bool is_zero() const { return terms.empty(); }
    static SPoly monomial(Rational coeff, Rational exponent);

    bool operator==(const SPoly&) const = default;
};

SPoly normalize(SPoly p);
SPoly operator+(const SPoly& a, const SPoly& b);
SPoly operator-(const SPoly& a, const SPoly& b);
SPoly operator*(const SPoly& a, const SPoly& b);
SPoly operator-(const SPoly& a);
SPoly operator*(const Rational& c, const SPoly& p);
std::string to_string(const SPoly& p);

// Quotient of fractional polynomials. Canonical form: denominator leading
// coefficient 1 and minimal denominator exponent 0 (both sides shifted by a
// common power of s); numerator exponents may stay negative.
struct SRational {
    SPoly num;
    SPoly den;

    bool operator==(const SRational&) const = default;
};

SRational canonicalize(SRational x);
SRational operator+(const SRational& a, const SRational& b);
std::string to_string(const SRational& x);

// Laplace transform X(s) of the multi-term equation under its initial data:
//   [ sum_i C_i ( sum_{j : ceil(alpha_j) > i} a_j s^{alpha_j - i - 1} ) ]
//   / [ a_0 + sum_j a_j s^{alpha_j} ].
SRational fde_laplace(const MultiTermFDE& fde);

// Y_0(s) of a chain system by forward substitution of
// Y_{j+1} = s^{b_j} Y_j - sum_k s^{b_j - k - 1} y_j^{(k)}(0) down the chain
// and solving the transformed last equation for Y_0.
SRational split_laplace(const SplitSystem& sys);

// Exact equality of A and B as rational functions (cross-multiplied).
bool srational_equal(const SRational& A, const SRational& B);

// Canonical cross-multiplied difference A.num * B.den - B.num * A.den of the
// canonicalized inputs; empty exactly when srational_equal holds.
SPoly residual(const SRational& A, const SRational& B);

// One time-domain term scale * t^{power} * E_{(...),b}(...), power == b - 1.
struct MLTerm {
    Rational scale;
    Rational power;
    mlf::MLSpec spec;

    bool operator==(const MLTerm&) const = default;
};

struct MLTermSum {
    std::vector<MLTerm> terms;

    bool operator==(const MLTermSum&) const = default;
};

// Laplace transform of one multinomial Mittag-Leffler term whose argument
// powers mirror its inner orders: scale * s^{A_n - b} over
// s^{A_n} - scales[0] s^{A_n - A_0} - ... - scales[n-1].
// Throws ShapeError when the spec is outside this family or b < 1.
SRational ml_laplace(const MLTerm& term);

// Termwise decomposition of X(s) into Mittag-Leffler terms; every numerator
// monomial c s^{mu} must satisfy b = top - mu >= 1.
MLTermSum inverse_laplace_to_ml(const SRational& X);

double eval(const MLTermSum& sum, double t, const mlf::EvalControl& ctrl = {});

}  // namespace fracsplit::sdomain
