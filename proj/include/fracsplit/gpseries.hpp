#pragma once

#include <optional>
#include <vector>

#include "fracsplit/rational.hpp"

namespace fracsplit::gpseries {

struct Term {
    double coeff;
    Rational exponent;
};

// Finite generalized power series sum_k c_k t^{e_k} with exact rational
// exponents, ascending and distinct, no zero coefficients stored.
// Exponents are nonnegative for series built as functions; images under the
// termwise Caputo derivative may carry negative exponents (they are formal
// series valid away from t = 0, and evaluation at 0 rejects them).
//
// truncation_order is the exponent bound up to which the series is trusted;
// nullopt means the series is exact. Termwise operators shift it so that
// later comparisons never look past the shorter trusted range.
struct GPSeries {
    std::vector<Term> terms;
    std::optional<Rational> truncation_order;

    bool is_zero() const { return terms.empty(); }
    // 0.0 when the exponent is absent.
    double coeff_of(const Rational& exponent) const;
};

// Coefficients below this are treated as gamma-ratio cancellation dust.
inline constexpr double kCoeffPrune = 1e-30;

// Sort, merge duplicate exponents, prune dust.
GPSeries normalize(GPSeries f);

// Truncated expansion of E_alpha(lambda t^alpha):
// sum_{k=0..K} lambda^k t^{alpha k} / Gamma(alpha k + 1),
// trusted up to exponent alpha (K+1).
GPSeries ml_to_series(const Rational& alpha, double lambda, int K);

// Termwise Caputo derivative of order alpha with n - 1 < alpha <= n:
//   t^e -> 0                                         e in {0, .., n-1}
//   t^e -> Gamma(e+1)/Gamma(e-alpha+1) t^{e-alpha}   e > n-1
// Anything else throws UnsupportedExponent.
GPSeries caputo_deriv(const GPSeries& f, const Rational& alpha);

// Termwise Riemann-Liouville integral of order alpha:
//   t^e -> Gamma(e+1)/Gamma(e+alpha+1) t^{e+alpha}.
GPSeries rl_integral(const GPSeries& f, const Rational& alpha);

double eval(const GPSeries& f, double t);

struct ComposeReport {
    GPSeries lhs_series;  // D^{a1} D^{a2} f
    GPSeries rhs_series;  // D^{a1+a2} f
    bool equal_termwise = false;
    double max_numeric_gap = 0.0;
    std::vector<double> sample_points;
    // Smallest exponent at which any of the three compared series disagree.
    std::optional<Rational> first_mismatch_exponent;
};

// Compares D^{a1}D^{a2}f, D^{a2}D^{a1}f and D^{a1+a2}f termwise up to the
// common trusted exponent range, and numerically at the sample points.
ComposeReport compose_check(const GPSeries& f, const Rational& a1, const Rational& a2,
                            std::vector<double> sample_points, double tol);

// Largest k >= 0 such that every exponent is a nonnegative integer or > k;
// nullopt when every exponent is a nonnegative integer (C-infinity within
// truncation). A negative result flags exponents below zero.
std::optional<long long> regularity_class(const GPSeries& f);

// Value of D^alpha f at t = 0: nullopt marks a divergent limit (some image
// exponent is negative), otherwise the t^0 coefficient of the image (0 when
// absent).
std::optional<double> caputo_value_at_zero(const GPSeries& f, const Rational& alpha);

}  // namespace fracsplit::gpseries
