#include "fracsplit/sdomain.hpp"

#include <algorithm>
#include <cmath>

#include "fracsplit/errors.hpp"

namespace fracsplit::sdomain {

SPoly SPoly::monomial(Rational coeff, Rational exponent) {
    SPoly p;
    if (coeff != 0) p.terms.push_back({std::move(coeff), std::move(exponent)});
    return p;
}

SPoly normalize(SPoly p) {
    std::sort(p.terms.begin(), p.terms.end(),
              [](const STerm& a, const STerm& b) { return a.exponent > b.exponent; });
    std::vector<STerm> merged;
    merged.reserve(p.terms.size());
    for (auto& t : p.terms) {
        if (!merged.empty() && merged.back().exponent == t.exponent)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const STerm& t) { return t.coeff == 0; });
    p.terms = std::move(merged);
    return p;
}

SPoly operator+(const SPoly& a, const SPoly& b) {
    SPoly out = a;
    out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
    return normalize(std::move(out));
}

SPoly operator-(const SPoly& a) {
    SPoly out = a;
    for (auto& t : out.terms) t.coeff = -t.coeff;
    return out;
}

SPoly operator-(const SPoly& a, const SPoly& b) { return a + (-b); }

SPoly operator*(const SPoly& a, const SPoly& b) {
    SPoly out;
    out.terms.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            out.terms.push_back({ta.coeff * tb.coeff, ta.exponent + tb.exponent});
    return normalize(std::move(out));
}

SPoly operator*(const Rational& c, const SPoly& p) {
    if (c == 0) return {};
    SPoly out = p;
    for (auto& t : out.terms) t.coeff *= c;
    return out;
}

std::string to_string(const SPoly& p) {
    if (p.terms.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
        const auto& t = p.terms[i];
        const bool neg = t.coeff < 0;
        const Rational mag = neg ? Rational(-t.coeff) : t.coeff;
        if (i == 0)
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        const bool unit = mag == 1 && t.exponent != 0;
        if (!unit) s += to_pq_string(mag);
        if (t.exponent != 0) {
            if (!unit) s += "*";
            s += "s^(" + to_pq_string(t.exponent) + ")";
        }
    }
    return s;
}

SRational canonicalize(SRational x) {
    x.num = normalize(std::move(x.num));
    x.den = normalize(std::move(x.den));
    if (x.den.is_zero()) throw DomainError("SRational: zero denominator");
    const Rational shift = x.den.terms.back().exponent;  // minimal den exponent
    if (shift != 0) {
        for (auto& t : x.num.terms) t.exponent -= shift;
        for (auto& t : x.den.terms) t.exponent -= shift;
    }
    const Rational lead = x.den.terms.front().coeff;
    if (lead != 1) {
        for (auto& t : x.num.terms) t.coeff /= lead;
        for (auto& t : x.den.terms) t.coeff /= lead;
    }
    return x;
}

SRational operator+(const SRational& a, const SRational& b) {
    return canonicalize({a.num * b.den + b.num * a.den, a.den * b.den});
}

std::string to_string(const SRational& x) {
    return "(" + to_string(x.num) + ") / (" + to_string(x.den) + ")";
}

SRational fde_laplace(const MultiTermFDE& fde) {
    fde.validate();
    SPoly den = SPoly::monomial(fde.coeffs[0], Rational(0));
    SPoly num;
    for (std::size_t j = 0; j < fde.orders.size(); ++j) {
        const Rational& a = fde.coeffs[j + 1];
        if (a == 0) continue;
        const Rational& alpha = fde.orders[j];
        den = den + SPoly::monomial(a, alpha);
        const long long nj = ceil_ll(alpha);
        for (long long k = 0; k < nj; ++k)
            num = num + SPoly::monomial(a * fde.ics[static_cast<std::size_t>(k)], alpha - k - 1);
    }
    return canonicalize({std::move(num), std::move(den)});
}

SRational split_laplace(const SplitSystem& sys) {
    sys.validate();
    const std::size_t last = sys.equations.size() - 1;
    // Y_j = P_j * Y_0 + Q_j.
    std::vector<SPoly> P(sys.equations.size()), Q(sys.equations.size());
    P[0] = SPoly::monomial(1, Rational(0));
    auto ic_terms = [&](std::size_t j) {
        const auto& eq = sys.equations[j];
        SPoly out;
        for (std::size_t k = 0; k < sys.init[j].size(); ++k)
            out = out + SPoly::monomial(sys.init[j][k], eq.order - Rational(k) - 1);
        return out;
    };
    for (std::size_t j = 0; j < last; ++j) {
        const SPoly s_beta = SPoly::monomial(1, sys.equations[j].order);
        P[j + 1] = s_beta * P[j];
        Q[j + 1] = s_beta * Q[j] - ic_terms(j);
    }
    // Transformed last equation:
    //   s^b (P Y0 + Q) - ic = sum c (P_u Y0 + Q_u).
    const auto& eq = sys.equations[last];
    const SPoly s_beta = SPoly::monomial(1, eq.order);
    SPoly lhs = s_beta * P[last];
    SPoly rhs = ic_terms(last) - s_beta * Q[last];
    for (const auto& [c, u] : eq.rhs) {
        lhs = lhs - c * P[u];
        rhs = rhs + c * Q[u];
    }
    return canonicalize({std::move(rhs), std::move(lhs)});
}

bool srational_equal(const SRational& A, const SRational& B) {
    return (A.num * B.den - B.num * A.den).is_zero();
}

SPoly residual(const SRational& A, const SRational& B) {
    const SRational a = canonicalize(A);
    const SRational b = canonicalize(B);
    return a.num * b.den - b.num * a.den;
}

SRational ml_laplace(const MLTerm& term) {
    const auto& spec = term.spec;
    spec.validate();
    if (spec.gamma != 1) throw ShapeError("ml_laplace: Prabhakar weight outside the invertible family");
    if (spec.b < 1) throw ShapeError("ml_laplace: requires b >= 1");
    if (term.power != spec.b - 1) throw ShapeError("ml_laplace: power must equal b - 1");
    if (spec.power_exponents != spec.a)
        throw ShapeError("ml_laplace: argument powers must mirror the inner orders");
    for (std::size_t i = 1; i < spec.a.size(); ++i)
        if (!(spec.a[i - 1] < spec.a[i]))
            throw ShapeError("ml_laplace: inner orders must be strictly increasing");

    const Rational top = spec.a.back();
    SPoly den = SPoly::monomial(1, top);
    for (std::size_t i = 0; i < spec.a.size(); ++i)
        den = den + SPoly::monomial(-spec.scales[i], top - spec.a[i]);
    SPoly num = SPoly::monomial(term.scale, top - spec.b);
    return canonicalize({std::move(num), std::move(den)});
}

MLTermSum inverse_laplace_to_ml(const SRational& X) {
    const SRational x = canonicalize(X);
    const auto& den = x.den.terms;  // descending, lead coeff 1, min exponent 0
    if (den.size() < 2) throw ShapeError("inverse_laplace_to_ml: denominator needs at least two terms");
    const Rational top = den.front().exponent;
    if (top <= 0) throw ShapeError("inverse_laplace_to_ml: denominator has no positive top exponent");

    mlf::MLSpec spec;
    for (std::size_t i = 1; i < den.size(); ++i) {
        spec.a.push_back(top - den[i].exponent);  // ascending: den exponents descend
        spec.scales.push_back(-den[i].coeff);
    }
    spec.power_exponents = spec.a;

    MLTermSum out;
    for (const auto& t : x.num.terms) {
        const Rational b = top - t.exponent;
        if (b < 1)
            throw ShapeError("inverse_laplace_to_ml: numerator term s^(" + to_pq_string(t.exponent) +
                             ") implies b < 1");
        MLTerm term{t.coeff, b - 1, spec};
        term.spec.b = b;
        out.terms.push_back(std::move(term));
    }
    return out;
}

double eval(const MLTermSum& sum, double t, const mlf::EvalControl& ctrl) {
    double acc = 0.0;
    for (const auto& term : sum.terms) {
        const double power = std::pow(t, to_double(term.power));
        acc += to_double(term.scale) * power * mlf::ml_multi(term.spec, t, ctrl);
    }
    return acc;
}

}  // namespace fracsplit::sdomain
