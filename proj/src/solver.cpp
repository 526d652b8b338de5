#include "fracsplit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <exception>

#include "fracsplit/errors.hpp"
#include "fracsplit/sdomain.hpp"
#include "fracsplit/special.hpp"

namespace fracsplit::solver {

namespace {

// Chain system rewritten so every equation order lies in (0, 1]. The first
// `n_visible` unknowns are the original ones, auxiliaries follow.
struct ReducedSystem {
    std::size_t n_visible = 0;
    std::vector<double> beta;  // per unknown, in (0, 1]
    std::vector<double> y0;
    std::vector<std::vector<std::pair<double, std::size_t>>> rhs;  // per unknown
};

ReducedSystem reduce(const SplitSystem& sys) {
    sys.validate();
    ReducedSystem red;
    red.n_visible = sys.unknowns.size();
    red.beta.resize(red.n_visible);
    red.y0.resize(red.n_visible);
    red.rhs.resize(red.n_visible);
    for (std::size_t j = 0; j < sys.equations.size(); ++j) {
        const auto& eq = sys.equations[j];
        if (eq.order <= 0) throw UnsupportedOrder("equation order must be positive");
        std::vector<std::pair<double, std::size_t>> tail_rhs;
        for (const auto& [c, u] : eq.rhs) tail_rhs.emplace_back(to_double(c), u);
        red.y0[j] = to_double(sys.init[j][0]);

        const long long q = ceil_ll(eq.order) - 1;
        if (q == 0) {
            red.beta[j] = to_double(eq.order);
            red.rhs[j] = std::move(tail_rhs);
            continue;
        }
        // D^{q+r} y = f  ->  y' = w_1, w_i' = w_{i+1}, D^r w_q = f with
        // w_i(0) = y^{(i)}(0); exact by the definition of the derivative.
        std::size_t prev = j;
        for (long long i = 1; i <= q; ++i) {
            const std::size_t fresh = red.beta.size();
            red.beta.push_back(1.0);
            red.y0.push_back(to_double(sys.init[j][static_cast<std::size_t>(i)]));
            red.rhs.emplace_back();
            red.beta[prev] = 1.0;
            red.rhs[prev] = {{1.0, fresh}};
            prev = fresh;
        }
        red.beta[prev] = to_double(eq.order) - static_cast<double>(q);
        red.rhs[prev] = std::move(tail_rhs);
    }
    return red;
}

void eval_rhs(const ReducedSystem& red, const std::vector<double>& state, std::vector<double>& out) {
    for (std::size_t u = 0; u < red.rhs.size(); ++u) {
        double acc = 0.0;
        for (const auto& [c, v] : red.rhs[u]) acc += c * state[v];
        out[u] = acc;
    }
}

constexpr long kConvBlock = 2048;

// sum_{i=0..n} w[n-i] * f[i], fixed left-to-right order.
double conv_serial(const double* f, const double* w, long n) {
    double acc = 0.0;
    for (long i = 0; i <= n; ++i) acc += w[n - i] * f[i];
    return acc;
}

// Same sum split into fixed-size blocks: block partials are computed in
// parallel, then combined in block order. The association never depends on
// the thread count, so the result is reproducible bit for bit.
double conv_blocked(const double* f, const double* w, long n) {
    const long len = n + 1;
    if (len < 2 * kConvBlock) return conv_serial(f, w, n);
    const long nb = (len + kConvBlock - 1) / kConvBlock;
    std::vector<double> partials(static_cast<std::size_t>(nb), 0.0);
#pragma omp parallel for schedule(static)
    for (long b = 0; b < nb; ++b) {
        const long lo = b * kConvBlock;
        const long hi = std::min(len, lo + kConvBlock);
        double acc = 0.0;
        for (long i = lo; i < hi; ++i) acc += w[n - i] * f[i];
        partials[static_cast<std::size_t>(b)] = acc;
    }
    double total = 0.0;
    for (long b = 0; b < nb; ++b) total += partials[static_cast<std::size_t>(b)];
    return total;
}

using ConvFn = double (*)(const double*, const double*, long);

Trajectory run_abm(const SplitSystem& sys, double t_end, int N, ConvFn conv, const char* tag) {
    if (N < 8) throw StepTooCoarse("need at least 8 steps");
    if (!(t_end > 0.0)) throw DomainError("t_end must be positive");
    const ReducedSystem red = reduce(sys);
    const std::size_t nu = red.beta.size();
    const double h = t_end / N;

    // Per unknown: h^b/Gamma(b+1), h^b/Gamma(b+2), predictor weights
    // bw[d] = (d+1)^b - d^b and interior corrector weights
    // gw[d] = (d+2)^{b+1} - 2 (d+1)^{b+1} + d^{b+1}.
    std::vector<double> hpred(nu), hcorr(nu);
    std::vector<std::vector<double>> bw(nu), gw(nu);
    for (std::size_t u = 0; u < nu; ++u) {
        const double b = red.beta[u];
        hpred[u] = std::pow(h, b) / std::tgamma(b + 1.0);
        hcorr[u] = std::pow(h, b) / std::tgamma(b + 2.0);
        bw[u].resize(static_cast<std::size_t>(N));
        gw[u].resize(static_cast<std::size_t>(N));
        for (long d = 0; d < N; ++d) {
            const double dd = static_cast<double>(d);
            bw[u][static_cast<std::size_t>(d)] = std::pow(dd + 1.0, b) - std::pow(dd, b);
            gw[u][static_cast<std::size_t>(d)] = std::pow(dd + 2.0, b + 1.0) -
                                                 2.0 * std::pow(dd + 1.0, b + 1.0) +
                                                 std::pow(dd, b + 1.0);
        }
    }

    std::vector<std::vector<double>> y(nu, std::vector<double>(static_cast<std::size_t>(N) + 1));
    std::vector<std::vector<double>> fh(nu, std::vector<double>(static_cast<std::size_t>(N) + 1));
    std::vector<double> state(nu), fval(nu), pred(nu);
    for (std::size_t u = 0; u < nu; ++u) {
        y[u][0] = red.y0[u];
        state[u] = red.y0[u];
    }
    eval_rhs(red, state, fval);
    for (std::size_t u = 0; u < nu; ++u) fh[u][0] = fval[u];

    for (long n = 0; n < N; ++n) {
        for (std::size_t u = 0; u < nu; ++u)
            pred[u] = red.y0[u] + hpred[u] * conv(fh[u].data(), bw[u].data(), n);
        eval_rhs(red, pred, fval);
        for (std::size_t u = 0; u < nu; ++u) {
            const double b = red.beta[u];
            const double nn = static_cast<double>(n);
            const double a0 = std::pow(nn, b + 1.0) - (nn - b) * std::pow(nn + 1.0, b);
            double memory = a0 * fh[u][0] + fval[u];
            if (n >= 1) memory += conv(fh[u].data() + 1, gw[u].data(), n - 1);
            y[u][static_cast<std::size_t>(n) + 1] = red.y0[u] + hcorr[u] * memory;
            state[u] = y[u][static_cast<std::size_t>(n) + 1];
        }
        eval_rhs(red, state, fval);
        for (std::size_t u = 0; u < nu; ++u) fh[u][static_cast<std::size_t>(n) + 1] = fval[u];
    }

    Trajectory traj;
    traj.h = h;
    traj.n_steps = N;
    traj.method = tag;
    traj.t.resize(static_cast<std::size_t>(N) + 1);
    for (long i = 0; i <= N; ++i) traj.t[static_cast<std::size_t>(i)] = h * static_cast<double>(i);
    traj.values.assign(static_cast<std::size_t>(N) + 1, std::vector<double>(red.n_visible));
    for (std::size_t i = 0; i <= static_cast<std::size_t>(N); ++i)
        for (std::size_t u = 0; u < red.n_visible; ++u) traj.values[i][u] = y[u][i];
    for (const auto& eq : sys.equations) traj.orders.push_back(eq.order);
    return traj;
}

}  // namespace

Trajectory abm_solve(const SplitSystem& sys, double t_end, int N) {
    return run_abm(sys, t_end, N, conv_blocked, "abm-pece");
}

Trajectory abm_solve_reference(const SplitSystem& sys, double t_end, int N) {
    return run_abm(sys, t_end, N, conv_serial, "abm-pece-reference");
}

std::vector<double> closed_form_solve(const MultiTermFDE& fde, const std::vector<double>& t_points,
                                      const mlf::EvalControl& ctrl) {
    const sdomain::MLTermSum sum = sdomain::inverse_laplace_to_ml(sdomain::fde_laplace(fde));
    std::vector<double> out(t_points.size());
    std::exception_ptr failure;
    const long count = static_cast<long>(t_points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = sdomain::eval(sum, t_points[static_cast<std::size_t>(i)], ctrl);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

EquivalenceReport verify_equivalence(const MultiTermFDE& fde, const SplitSystem& sys, double t_end,
                                     int N, double tol) {
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    EquivalenceReport report;
    report.t_end = t_end;
    report.n_steps = N;
    report.symbolic_equal =
        sdomain::srational_equal(sdomain::fde_laplace(fde), sdomain::split_laplace(sys));

    const Trajectory traj = abm_solve(sys, t_end, N);
    const std::vector<double> reference = closed_form_solve(fde, traj.t);
    double gap = 0.0;
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        const double ref = reference[i];
        gap = std::max(gap, std::abs(traj.values[i][0] - ref) / (1.0 + std::abs(ref)));
    }
    report.numeric_max_rel_gap = gap;
    if (report.symbolic_equal && gap <= tol)
        report.verdict = EquivalenceReport::Verdict::equivalent;
    else if (!report.symbolic_equal && gap > tol)
        report.verdict = EquivalenceReport::Verdict::not_equivalent;
    else
        report.verdict = EquivalenceReport::Verdict::inconclusive;
    return report;
}

const char* to_string(EquivalenceReport::Verdict v) {
    switch (v) {
        case EquivalenceReport::Verdict::equivalent: return "equivalent";
        case EquivalenceReport::Verdict::not_equivalent: return "not_equivalent";
        default: return "inconclusive";
    }
}

}  // namespace fracsplit::solver
