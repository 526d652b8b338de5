#include "fracsplit/gpseries.hpp"

#include <algorithm>
#include <cmath>

#include "fracsplit/errors.hpp"
#include "fracsplit/special.hpp"

namespace fracsplit::gpseries {

double GPSeries::coeff_of(const Rational& exponent) const {
    for (const auto& t : terms)
        if (t.exponent == exponent) return t.coeff;
    return 0.0;
}

GPSeries normalize(GPSeries f) {
    std::sort(f.terms.begin(), f.terms.end(),
              [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
    std::vector<Term> merged;
    merged.reserve(f.terms.size());
    for (const auto& t : f.terms) {
        if (!merged.empty() && merged.back().exponent == t.exponent)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(t);
    }
    std::erase_if(merged, [](const Term& t) { return std::abs(t.coeff) < kCoeffPrune; });
    f.terms = std::move(merged);
    return f;
}

GPSeries ml_to_series(const Rational& alpha, double lambda, int K) {
    if (alpha <= 0) throw DomainError("ml_to_series: alpha must be positive");
    if (K < 1) throw DomainError("ml_to_series: K must be at least 1");
    GPSeries out;
    const double a = to_double(alpha);
    if (lambda == 0.0) {
        out.terms.push_back({1.0, Rational(0)});
    } else {
        const double ln_abs = std::log(std::abs(lambda));
        for (int k = 0; k <= K; ++k) {
            const double mag = std::exp(k * ln_abs - std::lgamma(a * k + 1.0));
            const double sign = (lambda < 0.0 && (k & 1)) ? -1.0 : 1.0;
            out.terms.push_back({sign * mag, alpha * k});
        }
    }
    out.truncation_order = alpha * (K + 1);
    return normalize(std::move(out));
}

GPSeries caputo_deriv(const GPSeries& f, const Rational& alpha) {
    if (alpha <= 0) throw DomainError("caputo_deriv: alpha must be positive");
    const long long n = ceil_ll(alpha);  // n - 1 < alpha <= n
    GPSeries out;
    for (const auto& t : f.terms) {
        const Rational& e = t.exponent;
        if (is_integer(e) && e >= 0 && e <= n - 1) continue;  // killed
        if (e > n - 1) {
            const double ratio = gamma_ratio(to_double(e + 1), to_double(e - alpha + 1));
            out.terms.push_back({t.coeff * ratio, e - alpha});
        } else {
            throw UnsupportedExponent("caputo_deriv: non-integer exponent " + to_pq_string(e) +
                                      " at or below n-1 for order " + to_pq_string(alpha));
        }
    }
    if (f.truncation_order) out.truncation_order = *f.truncation_order - alpha;
    return normalize(std::move(out));
}

GPSeries rl_integral(const GPSeries& f, const Rational& alpha) {
    if (alpha <= 0) throw DomainError("rl_integral: alpha must be positive");
    GPSeries out;
    for (const auto& t : f.terms) {
        const Rational& e = t.exponent;
        if (e <= -1) throw UnsupportedExponent("rl_integral: exponent at or below -1");
        const double ratio = gamma_ratio(to_double(e + 1), to_double(e + alpha + 1));
        out.terms.push_back({t.coeff * ratio, e + alpha});
    }
    if (f.truncation_order) out.truncation_order = *f.truncation_order + alpha;
    return normalize(std::move(out));
}

double eval(const GPSeries& f, double t) {
    if (!(t >= 0.0)) throw DomainError("eval: t must be nonnegative");
    if (t == 0.0 && !f.terms.empty() && f.terms.front().exponent < 0)
        throw DomainError("eval: series has negative exponents, undefined at t = 0");
    NeumaierSum acc;
    for (const auto& term : f.terms) acc.add(term.coeff * std::pow(t, to_double(term.exponent)));
    return acc.value();
}

namespace {

// Termwise comparison of two series restricted to exponents <= horizon.
// Reports the smallest disagreeing exponent, if any.
std::optional<Rational> first_termwise_mismatch(const GPSeries& a, const GPSeries& b,
                                                const std::optional<Rational>& horizon, double tol) {
    std::size_t i = 0, j = 0;
    auto within = [&](const Rational& e) { return !horizon || e <= *horizon; };
    while (i < a.terms.size() || j < b.terms.size()) {
        const bool take_a = j >= b.terms.size() ||
                            (i < a.terms.size() && a.terms[i].exponent < b.terms[j].exponent);
        const bool take_b = i >= a.terms.size() ||
                            (j < b.terms.size() && b.terms[j].exponent < a.terms[i].exponent);
        if (take_a) {
            if (within(a.terms[i].exponent)) return a.terms[i].exponent;
            ++i;
        } else if (take_b) {
            if (within(b.terms[j].exponent)) return b.terms[j].exponent;
            ++j;
        } else {
            const double ca = a.terms[i].coeff, cb = b.terms[j].coeff;
            if (within(a.terms[i].exponent) &&
                std::abs(ca - cb) > tol * std::max(std::abs(ca), std::abs(cb)))
                return a.terms[i].exponent;
            ++i;
            ++j;
        }
    }
    return std::nullopt;
}

std::optional<Rational> min_horizon(const GPSeries& a, const GPSeries& b, const GPSeries& c) {
    std::optional<Rational> h;
    for (const auto* s : {&a, &b, &c})
        if (s->truncation_order && (!h || *s->truncation_order < *h)) h = s->truncation_order;
    return h;
}

// Truncated series are only trusted where the last kept term is negligible;
// exact series have no tail to worry about.
void check_sample_point(const GPSeries& s, double t, double value) {
    if (!s.truncation_order || s.terms.empty()) return;
    const auto& last = s.terms.back();
    const double tail = std::abs(last.coeff) * std::pow(t, to_double(last.exponent));
    if (tail > 1e-6 * (1.0 + std::abs(value)))
        throw DomainError("compose_check: sample point beyond the trusted range of the series");
}

}  // namespace

ComposeReport compose_check(const GPSeries& f, const Rational& a1, const Rational& a2,
                            std::vector<double> sample_points, double tol) {
    if (tol <= 0) throw DomainError("compose_check: tol must be positive");
    GPSeries d12 = caputo_deriv(caputo_deriv(f, a2), a1);
    GPSeries d21 = caputo_deriv(caputo_deriv(f, a1), a2);
    GPSeries dsum = caputo_deriv(f, a1 + a2);

    const auto horizon = min_horizon(d12, d21, dsum);
    std::optional<Rational> mismatch;
    for (const auto* pair : {&dsum, &d21}) {
        auto m = first_termwise_mismatch(d12, *pair, horizon, tol);
        if (m && (!mismatch || *m < *mismatch)) mismatch = m;
    }
    if (auto m = first_termwise_mismatch(d21, dsum, horizon, tol); m && (!mismatch || *m < *mismatch))
        mismatch = m;

    ComposeReport report;
    report.equal_termwise = !mismatch.has_value();
    report.first_mismatch_exponent = mismatch;
    report.max_numeric_gap = 0.0;
    for (double t : sample_points) {
        if (!(t > 0.0)) throw DomainError("compose_check: sample points must be positive");
        const double v12 = eval(d12, t);
        const double v21 = eval(d21, t);
        const double vs = eval(dsum, t);
        check_sample_point(d12, t, v12);
        check_sample_point(dsum, t, vs);
        const double scale = std::max({std::abs(v12), std::abs(v21), std::abs(vs), 1e-30});
        const double gap = std::max(std::abs(v12 - vs), std::abs(v21 - vs)) / scale;
        report.max_numeric_gap = std::max(report.max_numeric_gap, gap);
    }
    report.sample_points = std::move(sample_points);
    report.lhs_series = std::move(d12);
    report.rhs_series = std::move(dsum);
    return report;
}

std::optional<long long> regularity_class(const GPSeries& f) {
    std::optional<Rational> worst;
    for (const auto& t : f.terms) {
        const bool smooth = is_integer(t.exponent) && t.exponent >= 0;
        if (!smooth && (!worst || t.exponent < *worst)) worst = t.exponent;
    }
    if (!worst) return std::nullopt;  // polynomial: C-infinity
    if (is_integer(*worst)) return floor_ll(*worst) - 1;
    return floor_ll(*worst);
}

std::optional<double> caputo_value_at_zero(const GPSeries& f, const Rational& alpha) {
    const GPSeries img = caputo_deriv(f, alpha);
    if (!img.terms.empty() && img.terms.front().exponent < 0) return std::nullopt;
    return img.coeff_of(Rational(0));
}

}  // namespace fracsplit::gpseries
