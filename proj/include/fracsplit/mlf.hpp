#pragma once

#include <vector>

#include "fracsplit/rational.hpp"

namespace fracsplit::mlf {

// Truncation control for all Mittag-Leffler series summation. Summation
// stops once three consecutive terms are below rtol relative to the partial
// sum; series terms are not monotone for negative arguments, so a single
// small term is not trusted.
struct EvalControl {
    double rtol = 1e-12;
    int k_max = 10000;
};

// Parameters of one multinomial Mittag-Leffler term
//   E_{(a_1..a_n),b}(z_1..z_n)  with  z_i = scales[i] * t^power_exponents[i].
// gamma is the Prabhakar weight, 1 when absent. Scales are kept exact so
// the Laplace-domain round trip stays exact; evaluation casts to double.
struct MLSpec {
    std::vector<Rational> a;
    Rational b = 1;
    Rational gamma = 1;
    std::vector<Rational> scales;
    std::vector<Rational> power_exponents;

    std::size_t n() const { return a.size(); }
    void validate() const;  // throws DomainError

    bool operator==(const MLSpec&) const = default;
};

// One-parameter function: sum z^k / Gamma(alpha k + 1).
double ml1(const Rational& alpha, double z, const EvalControl& ctrl = {});

// Two-parameter function: sum z^k / Gamma(alpha k + beta).
double ml2(const Rational& alpha, const Rational& beta, double z, const EvalControl& ctrl = {});

// Multinomial function evaluated at z_i = scales[i] * t^power_exponents[i],
// full multi-index enumeration of l_1+...+l_n = k per outer index. n <= 4 is
// the intended range; larger n works but the composition count grows fast.
double ml_multi(const MLSpec& spec, double t, const EvalControl& ctrl = {});

// Prabhakar function: sum (gamma)_k z^k / (Gamma(alpha k + beta) k!), the
// Pochhammer-over-factorial weight advanced incrementally.
double ml_prabhakar(const Rational& alpha, const Rational& beta, const Rational& gamma, double z,
                    const EvalControl& ctrl = {});

}  // namespace fracsplit::mlf
