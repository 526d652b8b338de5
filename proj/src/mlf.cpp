#include "fracsplit/mlf.hpp"

#include <cmath>
#include <cstdlib>

#include "fracsplit/errors.hpp"
#include "fracsplit/special.hpp"

namespace fracsplit::mlf {

namespace {

// All experiments live at desk scale; naive summation past this loses too
// much precision and asymptotic expansions are not implemented.
constexpr double kArgGuard = 50.0;

void check_argument(double z) {
    if (!std::isfinite(z)) throw DomainError("non-finite Mittag-Leffler argument");
    if (std::abs(z) > kArgGuard) throw DomainError("Mittag-Leffler argument exceeds |z| <= 50 guard");
}

// sum_k w_k z^k / Gamma(alpha k + beta) with w_k = (gamma)_k / k!.
// gamma = 1 keeps w_k == 1 exactly, covering ml1/ml2.
double weighted_series(double alpha, double beta, double gamma, double z, const EvalControl& ctrl) {
    if (ctrl.rtol <= 0 || ctrl.k_max < 1) throw DomainError("bad EvalControl");
    check_argument(z);

    const double ln_abs_z = z == 0.0 ? 0.0 : std::log(std::abs(z));
    NeumaierSum acc;
    double weight = 1.0;
    int quiet = 0;
    for (int k = 0; k <= ctrl.k_max; ++k) {
        double term = 0.0;
        if (k == 0 || z != 0.0) {
            const double mag = std::exp(k * ln_abs_z - std::lgamma(alpha * k + beta));
            const double sign = (z < 0.0 && (k & 1)) ? -1.0 : 1.0;
            term = weight * sign * mag;
        }
        acc.add(term);
        const double total = acc.value();
        if (!std::isfinite(term) || !std::isfinite(total))
            throw NonConvergence("series value not representable in double precision");
        if (std::abs(term) <= ctrl.rtol * std::abs(total)) {
            if (++quiet >= 3) return total;
        } else {
            quiet = 0;
        }
        weight *= (gamma + k) / (k + 1.0);
    }
    throw NonConvergence("series did not settle before k_max");
}

}  // namespace

void MLSpec::validate() const {
    if (a.empty() || a.size() != scales.size() || a.size() != power_exponents.size())
        throw DomainError("MLSpec: a, scales, power_exponents must have equal nonzero length");
    for (const auto& ai : a)
        if (ai <= 0) throw DomainError("MLSpec: inner orders must be positive");
    for (const auto& p : power_exponents)
        if (p < 0) throw DomainError("MLSpec: power exponents must be nonnegative");
    if (b < 0) throw DomainError("MLSpec: b must be nonnegative");
    if (gamma <= 0) throw DomainError("MLSpec: gamma must be positive");
}

double ml1(const Rational& alpha, double z, const EvalControl& ctrl) {
    if (alpha <= 0) throw DomainError("ml1: alpha must be positive");
    return weighted_series(to_double(alpha), 1.0, 1.0, z, ctrl);
}

double ml2(const Rational& alpha, const Rational& beta, double z, const EvalControl& ctrl) {
    if (alpha <= 0) throw DomainError("ml2: alpha must be positive");
    if (beta <= 0) throw DomainError("ml2: beta must be positive");
    return weighted_series(to_double(alpha), to_double(beta), 1.0, z, ctrl);
}

double ml_prabhakar(const Rational& alpha, const Rational& beta, const Rational& gamma, double z,
                    const EvalControl& ctrl) {
    if (alpha <= 0 || beta <= 0 || gamma <= 0)
        throw DomainError("ml_prabhakar: parameters must be positive");
    return weighted_series(to_double(alpha), to_double(beta), to_double(gamma), z, ctrl);
}

double ml_multi(const MLSpec& spec, double t, const EvalControl& ctrl) {
    spec.validate();
    if (spec.b <= 0) throw DomainError("ml_multi: evaluation requires b > 0");
    if (spec.gamma != 1) throw DomainError("ml_multi: Prabhakar weight not part of the multinomial family");
    if (ctrl.rtol <= 0 || ctrl.k_max < 1) throw DomainError("bad EvalControl");
    if (!(t >= 0.0)) throw DomainError("ml_multi: t must be nonnegative");

    const std::size_t n = spec.n();
    std::vector<double> z(n), ln_abs_z(n);
    std::vector<bool> zero(n), neg(n);
    for (std::size_t i = 0; i < n; ++i) {
        z[i] = to_double(spec.scales[i]) * std::pow(t, to_double(spec.power_exponents[i]));
        check_argument(z[i]);
        zero[i] = z[i] == 0.0;
        neg[i] = z[i] < 0.0;
        ln_abs_z[i] = zero[i] ? 0.0 : std::log(std::abs(z[i]));
    }
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = to_double(spec.a[i]);
    const double b = to_double(spec.b);

    NeumaierSum acc;
    int quiet = 0;
    std::vector<long long> l(n);
    for (long long k = 0; k <= ctrl.k_max; ++k) {
        // Compositions of k into n parts, lexicographically from (k,0,..,0).
        std::fill(l.begin(), l.end(), 0);
        l[0] = k;
        double block = 0.0;
        for (;;) {
            bool vanishes = false;
            for (std::size_t i = 0; i < n && !vanishes; ++i) vanishes = zero[i] && l[i] > 0;
            if (!vanishes) {
                double lg = log_factorial(k);
                double gamma_arg = b;
                long long neg_count = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    lg -= log_factorial(l[i]);
                    lg += l[i] * ln_abs_z[i];
                    gamma_arg += a[i] * l[i];
                    if (neg[i]) neg_count += l[i];
                }
                const double term = std::exp(lg - std::lgamma(gamma_arg));
                block += (neg_count & 1) ? -term : term;
            }
            if (n == 1 || l[n - 1] == k) break;
            std::size_t j = n - 2;
            while (l[j] == 0) --j;
            --l[j];
            long long prefix = 0;
            for (std::size_t i = 0; i <= j; ++i) prefix += l[i];
            l[j + 1] = k - prefix;
            for (std::size_t i = j + 2; i < n; ++i) l[i] = 0;
        }
        acc.add(block);
        const double total = acc.value();
        if (!std::isfinite(block) || !std::isfinite(total))
            throw NonConvergence("series value not representable in double precision");
        if (std::abs(block) <= ctrl.rtol * std::abs(total)) {
            if (++quiet >= 3) return total;
        } else {
            quiet = 0;
        }
    }
    throw NonConvergence("multinomial series did not settle before k_max");
}

}  // namespace fracsplit::mlf
