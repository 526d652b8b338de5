#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fracsplit/errors.hpp"
#include "fracsplit/gpseries.hpp"
#include "fracsplit/mlf.hpp"
#include "fracsplit/problem_spec.hpp"
#include "fracsplit/sdomain.hpp"
#include "fracsplit/solver.hpp"
#include "fracsplit/splitter.hpp"

namespace {

using namespace fracsplit;

// Exit contract: 0 success / equivalent, 1 not equivalent, 2 usage error,
// 3 non-convergence, 4 construction error, 5 inconclusive.
int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const NonConvergence*>(&e)) return 3;
    if (dynamic_cast<const StepTooCoarse*>(&e)) return 2;
    if (dynamic_cast<const OrderCellViolation*>(&e) || dynamic_cast<const DegenerateOrder*>(&e) ||
        dynamic_cast<const CellViolation*>(&e) || dynamic_cast<const MalformedFDE*>(&e) ||
        dynamic_cast<const NotAChain*>(&e) || dynamic_cast<const InvalidRefinement*>(&e) ||
        dynamic_cast<const ShapeError*>(&e) || dynamic_cast<const UnsupportedExponent*>(&e) ||
        dynamic_cast<const UnsupportedOrder*>(&e))
        return 4;
    return 2;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string series_head(const gpseries::GPSeries& f, std::size_t count = 4) {
    if (f.terms.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < f.terms.size() && i < count; ++i) {
        const auto& t = f.terms[i];
        if (i > 0) out << (t.coeff < 0 ? " - " : " + ");
        else if (t.coeff < 0) out << "-";
        out.precision(10);
        out << std::abs(t.coeff);
        if (t.exponent != 0) out << "*t^(" << to_pq_string(t.exponent) << ")";
    }
    if (f.terms.size() > count) out << " + ...";
    return out.str();
}

struct MlArgs {
    std::string family;
    std::string alpha = "1";
    std::string beta = "1";
    std::string gamma = "1";
    std::vector<double> z;
    std::vector<std::string> a, scales, powers;
    std::string b = "1";
    std::vector<double> t;
};

int run_ml(const MlArgs& args, const mlf::EvalControl& ctrl) {
    if (args.family == "multi") {
        mlf::MLSpec spec;
        for (const auto& s : args.a) spec.a.push_back(parse_rational(s));
        for (const auto& s : args.scales) spec.scales.push_back(parse_rational(s));
        for (const auto& s : args.powers) spec.power_exponents.push_back(parse_rational(s));
        spec.b = parse_rational(args.b);
        if (args.t.empty()) throw DomainError("ml --family multi needs at least one --t value");
        for (double t : args.t) std::printf("%s,%s\n", fmt(t).c_str(), fmt(ml_multi(spec, t, ctrl)).c_str());
        return 0;
    }
    if (args.z.empty()) throw DomainError("ml needs at least one --z value");
    const Rational alpha = parse_rational(args.alpha);
    const Rational beta = parse_rational(args.beta);
    const Rational gamma = parse_rational(args.gamma);
    for (double z : args.z) {
        double v = 0.0;
        if (args.family == "ml1")
            v = mlf::ml1(alpha, z, ctrl);
        else if (args.family == "ml2")
            v = mlf::ml2(alpha, beta, z, ctrl);
        else if (args.family == "prabhakar")
            v = mlf::ml_prabhakar(alpha, beta, gamma, z, ctrl);
        else
            throw DomainError("unknown family '" + args.family + "'");
        std::printf("%s,%s\n", fmt(z).c_str(), fmt(v).c_str());
    }
    return 0;
}

int run_split(const std::string& path, const std::string& kind_override) {
    ProblemSpec spec = load_problem_spec(path);
    if (!kind_override.empty()) {
        SplitChoice choice = spec.split.value_or(SplitChoice{});
        choice.kind = kind_override;
        spec.split = choice;
    }
    const SplitSystem sys = build_selected_split(spec);
    nlohmann::json out;
    out["problem"] = to_json(spec);
    out["split"] = to_json(sys);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& path, double t_end, int steps, double tol) {
    const ProblemSpec spec = load_problem_spec(path);
    const SplitSystem sys = build_selected_split(spec);
    const auto report = solver::verify_equivalence(spec.fde, sys, t_end, steps, tol);
    std::cout << to_json(report).dump(2) << "\n";
    switch (report.verdict) {
        case solver::EquivalenceReport::Verdict::equivalent: return 0;
        case solver::EquivalenceReport::Verdict::not_equivalent: return 1;
        default: return 5;
    }
}

int run_solve(const std::string& path, double t_end, int steps, const std::string& out_path,
              bool compare, const mlf::EvalControl& ctrl) {
    const ProblemSpec spec = load_problem_spec(path);
    const SplitSystem sys = build_selected_split(spec);
    const auto traj = solver::abm_solve(sys, t_end, steps);

    std::vector<double> closed;
    double max_gap = 0.0;
    if (compare) {
        closed = solver::closed_form_solve(spec.fde, traj.t, ctrl);
        for (std::size_t i = 0; i < traj.t.size(); ++i)
            max_gap = std::max(max_gap,
                               std::abs(traj.values[i][0] - closed[i]) / (1.0 + std::abs(closed[i])));
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw DomainError("cannot open output file '" + out_path + "'");
        os = &file;
    }
    *os << "t";
    for (const auto& name : sys.unknowns) *os << "," << name;
    if (compare) *os << ",x_closed";
    *os << "\n";
    for (std::size_t i = 0; i < traj.t.size(); ++i) {
        *os << fmt(traj.t[i]);
        for (double v : traj.values[i]) *os << "," << fmt(v);
        if (compare) *os << "," << fmt(closed[i]);
        *os << "\n";
    }
    if (compare) *os << "# max_rel_gap = " << fmt(max_gap) << "\n";
    return 0;
}

// Composition counterexamples: f = E_alpha(lambda t^alpha) as a truncated
// series, compared under D^{a1} D^{a2} versus D^{a1+a2}.
int composition_example(const Rational& alpha, const Rational& a1, const Rational& a2) {
    const double lambda = 1.0;
    const int K = 80;
    const gpseries::GPSeries f = gpseries::ml_to_series(alpha, lambda, K);
    const auto report = gpseries::compose_check(f, a1, a2, {0.25, 1.0}, 1e-9);

    std::printf("f(t) = E_%s(t^(%s)) truncated at K=%d\n", to_pq_string(alpha).c_str(),
                to_pq_string(alpha).c_str(), K);
    std::printf("sequential D^(%s) D^(%s) f = %s\n", to_pq_string(a1).c_str(),
                to_pq_string(a2).c_str(), series_head(report.lhs_series).c_str());
    std::printf("direct     D^(%s) f       = %s\n", to_pq_string(a1 + a2).c_str(),
                series_head(report.rhs_series).c_str());
    for (double t : report.sample_points)
        std::printf("t = %-4g : sequential = %-22s direct = %s\n", t,
                    fmt(gpseries::eval(report.lhs_series, t)).c_str(),
                    fmt(gpseries::eval(report.rhs_series, t)).c_str());
    // Closed forms of the two sides when a1 = a2 and a1 + a2 > alpha:
    // lambda^2 E_alpha(lambda t^alpha) versus
    // lambda t^{alpha-a1-a2} E_{alpha, alpha-a1-a2+1}(lambda t^alpha).
    if (a1 == alpha && a2 == alpha) {
        const Rational drop = alpha - a1 - a2;
        for (double t : report.sample_points) {
            const double z = lambda * std::pow(t, to_double(alpha));
            const double lhs = lambda * lambda * mlf::ml1(alpha, z);
            const double rhs =
                lambda * std::pow(t, to_double(drop)) * mlf::ml2(alpha, drop + 1, z);
            std::printf("t = %-4g : closed-form sequential = %-22s closed-form direct = %s\n", t,
                        fmt(lhs).c_str(), fmt(rhs).c_str());
        }
    }
    std::printf("max numeric gap: %.3e\n", report.max_numeric_gap);
    if (report.equal_termwise) {
        std::printf("verdict: EQUAL\n");
    } else {
        std::printf("verdict: NOT EQUAL (lowest mismatching exponent: %s)\n",
                    to_pq_string(*report.first_mismatch_exponent).c_str());
    }
    return 0;
}

int naive_pair_example(const char* label, const Rational& alpha, const Rational& beta) {
    MultiTermFDE fde;
    fde.coeffs = {1, 1, 1};
    fde.orders = {beta, alpha};
    fde.ics = {1, 1};
    std::printf("equation: D^(%s) x + D^(%s) x + x = 0, x(0)=1, x'(0)=1  [%s]\n",
                to_pq_string(alpha).c_str(), to_pq_string(beta).c_str(), label);
    const auto sys = splitter::build_naive_split(fde, splitter::NaiveVariant::two_term_pair);
    const auto X = sdomain::fde_laplace(fde);
    const auto Y = sdomain::split_laplace(sys);
    std::printf("X(s)  = %s\n", sdomain::to_string(X).c_str());
    std::printf("Y0(s) = %s\n", sdomain::to_string(Y).c_str());
    const auto res = sdomain::residual(X, Y);
    std::printf("residual = %s\n", sdomain::to_string(res).c_str());
    std::printf("verdict: %s\n", res.is_zero() ? "EQUAL" : "NOT EQUAL");
    return 0;
}

int cut_2m2_example() {
    MultiTermFDE fde;
    fde.coeffs = {1, 1, 1, 1};
    fde.orders = {Rational(1, 2), Rational(3, 2), Rational(5, 2)};
    fde.ics = {1, 1, 1};
    std::printf(
        "equation: x + D^(1/2) x + D^(3/2) x + D^(5/2) x = 0, ics (1, 1, 1); m = 3, 2m-2 = 4 links\n");
    const auto sys = splitter::build_naive_split(fde, splitter::NaiveVariant::cut_2m2);
    const auto X = sdomain::fde_laplace(fde);
    const auto Y = sdomain::split_laplace(sys);
    std::printf("X(s)  = %s\n", sdomain::to_string(X).c_str());
    std::printf("Y0(s) = %s\n", sdomain::to_string(Y).c_str());
    const auto res = sdomain::residual(X, Y);
    std::printf("residual = %s\n", sdomain::to_string(res).c_str());
    // The dropped initial value C_{m-1} leaves exactly C_{m-1} s^{alpha_m - m}
    // times the common denominator.
    const auto expected = sdomain::SPoly::monomial(fde.ics.back(), fde.orders.back() - 3) *
                          sdomain::canonicalize(X).den;
    std::printf("unmatched term: a_m*C_2 * s^(%s) * den(s)  -> residual match: %s\n",
                to_pq_string(fde.orders.back() - 3).c_str(), res == expected ? "yes" : "no");
    std::printf("verdict: %s\n", res.is_zero() ? "EQUAL" : "NOT EQUAL");
    return 0;
}

int run_counterexample(const std::string& name) {
    if (name == "ex4.1") return composition_example(Rational(1, 4), Rational(1, 4), Rational(1, 4));
    if (name == "ex4.2") return composition_example(Rational(1, 2), Rational(1, 2), Rational(1, 2));
    if (name == "ex4.3")
        return composition_example(Rational(3, 10), Rational(3, 10), Rational(3, 10));
    if (name == "case-i") return naive_pair_example("1 < alpha - beta < 2", Rational(9, 5), Rational(3, 10));
    if (name == "case-ii") return naive_pair_example("0 < alpha - beta < 1", Rational(6, 5), Rational(7, 10));
    if (name == "case-iii") return naive_pair_example("alpha - beta = 1", Rational(3, 2), Rational(1, 2));
    if (name == "thm-2m2") return cut_2m2_example();
    std::fprintf(stderr, "unknown counterexample '%s'; names: ex4.1 ex4.2 ex4.3 case-i case-ii case-iii thm-2m2\n",
                 name.c_str());
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Caputo fractional calculus: Mittag-Leffler evaluation, equation splitting, "
                 "Laplace-domain and numeric equivalence checks"};
    app.require_subcommand(1);

    mlf::EvalControl ctrl;
    if (const char* env = std::getenv("FRACSPLIT_RTOL")) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (end == env || *end != '\0' || !(v > 0)) {
            std::fprintf(stderr, "FRACSPLIT_RTOL must be a positive number\n");
            return 2;
        }
        ctrl.rtol = v;
    }

    MlArgs ml_args;
    auto* ml = app.add_subcommand("ml", "evaluate a Mittag-Leffler function on a grid");
    ml->add_option("--family", ml_args.family, "ml1 | ml2 | multi | prabhakar")->required();
    ml->add_option("--alpha", ml_args.alpha, "order alpha (rational)");
    ml->add_option("--beta", ml_args.beta, "parameter beta (rational)");
    ml->add_option("--gamma", ml_args.gamma, "Prabhakar parameter (rational)");
    ml->add_option("--z", ml_args.z, "argument values")->delimiter(',');
    ml->add_option("--a", ml_args.a, "multi: inner orders (rationals)")->delimiter(',');
    ml->add_option("--b", ml_args.b, "multi: outer parameter (rational)");
    ml->add_option("--scales", ml_args.scales, "multi: argument scales (rationals)")->delimiter(',');
    ml->add_option("--powers", ml_args.powers, "multi: argument powers of t (rationals)")->delimiter(',');
    ml->add_option("--t", ml_args.t, "multi: evaluation times")->delimiter(',');

    std::string spec_path, kind_override, out_path, ce_name;
    double t_end = 1.0, tol = 1e-3;
    int steps = 2000;
    bool compare = false;

    auto* split = app.add_subcommand("split", "construct a split system and print it as JSON");
    split->add_option("spec", spec_path, "problem spec JSON file")->required();
    split->add_option("--kind", kind_override, "2m1 | chain | naive_pair | naive_cut");

    auto* verify = app.add_subcommand("verify", "symbolic + numeric equivalence check");
    verify->add_option("spec", spec_path, "problem spec JSON file")->required();
    verify->add_option("--t-end", t_end, "integration horizon");
    verify->add_option("--steps", steps, "grid steps");
    verify->add_option("--tol", tol, "numeric gap tolerance");

    auto* solve = app.add_subcommand("solve", "integrate the split system, write CSV");
    solve->add_option("spec", spec_path, "problem spec JSON file")->required();
    solve->add_option("--t-end", t_end, "integration horizon");
    solve->add_option("--steps", steps, "grid steps");
    solve->add_option("--out", out_path, "CSV output path (stdout when omitted)");
    solve->add_flag("--compare", compare, "add the closed-form column and gap footer");

    auto* ce = app.add_subcommand("counterexample", "reproduce a worked example");
    ce->add_option("name", ce_name, "ex4.1 ex4.2 ex4.3 case-i case-ii case-iii thm-2m2")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ml->parsed()) return run_ml(ml_args, ctrl);
        if (split->parsed()) return run_split(spec_path, kind_override);
        if (verify->parsed()) return run_verify(spec_path, t_end, steps, tol);
        if (solve->parsed()) return run_solve(spec_path, t_end, steps, out_path, compare, ctrl);
        if (ce->parsed()) return run_counterexample(ce_name);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_code_for(e);
    }
    return 2;
}
