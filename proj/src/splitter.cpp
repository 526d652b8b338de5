#include "fracsplit/splitter.hpp"

#include <string>

#include "fracsplit/errors.hpp"

namespace fracsplit::splitter {

namespace {

std::vector<std::string> unknown_names(std::size_t count) {
    std::vector<std::string> names;
    names.reserve(count);
    names.push_back("x");
    for (std::size_t i = 1; i < count; ++i) names.push_back("y" + std::to_string(i));
    return names;
}

// -(1/a_m) [ a_0 y_{refs[0]} + a_1 y_{refs[1]} + ... ]
std::vector<std::pair<Rational, std::size_t>> closing_rhs(const MultiTermFDE& fde,
                                                          const std::vector<std::size_t>& refs) {
    std::vector<std::pair<Rational, std::size_t>> rhs;
    const Rational& am = fde.coeffs.back();
    for (std::size_t k = 0; k < refs.size(); ++k) {
        if (fde.coeffs[k] == 0) continue;
        rhs.emplace_back(-fde.coeffs[k] / am, refs[k]);
    }
    return rhs;
}

}  // namespace

SplitSystem build_split_2m1(const MultiTermFDE& fde, std::optional<Rational> m1_interior) {
    fde.validate();
    const std::size_t m = fde.m();
    for (std::size_t k = 1; k <= m; ++k) {
        const Rational& a = fde.orders[k - 1];
        if (!(a > Rational(static_cast<long long>(k) - 1) && a <= Rational(static_cast<long long>(k))))
            throw OrderCellViolation("alpha_" + std::to_string(k) + " = " + to_pq_string(a) +
                                     " outside (" + std::to_string(k - 1) + ", " + std::to_string(k) +
                                     "]");
        if (k < m && a == Rational(static_cast<long long>(k)))
            throw DegenerateOrder("alpha_" + std::to_string(k) +
                                  " = " + std::to_string(k) +
                                  " gives a zero-order link; use the same-cell chain split");
    }

    SplitSystem sys;
    if (m == 1) {
        const Rational alpha = fde.orders[0];
        const Rational g = m1_interior.value_or(alpha / 2);
        if (!(g > 0 && g < alpha))
            throw DegenerateOrder("interior cut must satisfy 0 < gamma < alpha");
        sys.unknowns = unknown_names(2);
        sys.equations.push_back({g, 0, {{Rational(1), 1}}});
        sys.equations.push_back({alpha - g, 1, closing_rhs(fde, {0})});
        sys.init = {{fde.ics[0]}, {Rational(0)}};
        return sys;
    }

    const std::size_t count = 2 * m - 1;
    sys.unknowns = unknown_names(count);
    std::vector<Rational> beta(count);
    for (std::size_t j = 0; j < m; ++j) beta[2 * j] = fde.orders[j] - Rational(static_cast<long long>(j));
    for (std::size_t j = 0; j + 1 < m; ++j)
        beta[2 * j + 1] = Rational(static_cast<long long>(j) + 1) - fde.orders[j];
    for (std::size_t j = 0; j + 1 < count; ++j)
        sys.equations.push_back({beta[j], j, {{Rational(1), j + 1}}});
    // Odd-indexed unknowns carry the fractional derivative values D^{alpha_k} x.
    std::vector<std::size_t> refs{0};
    for (std::size_t k = 1; k < m; ++k) refs.push_back(2 * k - 1);
    sys.equations.push_back({beta[count - 1], count - 1, closing_rhs(fde, refs)});

    sys.init.assign(count, {Rational(0)});
    sys.init[0] = {fde.ics[0]};
    for (std::size_t i = 1; i < m; ++i) sys.init[2 * i] = {fde.ics[i]};
    return sys;
}

SplitSystem build_split_chain(const MultiTermFDE& fde) {
    fde.validate();
    const std::size_t m = fde.m();
    const long long p = ceil_ll(fde.orders.front()) - 1;
    if (p < 0 || !(fde.orders.back() <= Rational(p + 1)))
        throw CellViolation("orders do not fit a single cell (p, p+1]");

    std::vector<Rational> head_ics(fde.ics.begin(), fde.ics.begin() + (p + 1));
    SplitSystem sys;
    if (m == 1) {
        sys.unknowns = unknown_names(1);
        sys.equations.push_back({fde.orders[0], 0, closing_rhs(fde, {0})});
        sys.init = {std::move(head_ics)};
        return sys;
    }

    sys.unknowns = unknown_names(m);
    sys.equations.push_back({fde.orders[0], 0, {{Rational(1), 1}}});
    for (std::size_t j = 1; j + 1 < m; ++j)
        sys.equations.push_back({fde.orders[j] - fde.orders[j - 1], j, {{Rational(1), j + 1}}});
    std::vector<std::size_t> refs(m);
    for (std::size_t k = 0; k < m; ++k) refs[k] = k;
    sys.equations.push_back({fde.orders[m - 1] - fde.orders[m - 2], m - 1, closing_rhs(fde, refs)});

    sys.init.assign(m, {Rational(0)});
    sys.init[0] = std::move(head_ics);
    return sys;
}

SplitSystem build_naive_split(const MultiTermFDE& fde, NaiveVariant variant) {
    fde.validate();
    const std::size_t m = fde.m();
    SplitSystem sys;
    if (variant == NaiveVariant::two_term_pair) {
        if (m != 2) throw MalformedFDE("two-term pair split needs exactly two fractional orders");
        const Rational gap = fde.orders[1] - fde.orders[0];
        sys.unknowns = unknown_names(2);
        sys.equations.push_back({fde.orders[0], 0, {{Rational(1), 1}}});
        sys.equations.push_back({gap, 1, closing_rhs(fde, {0, 1})});
        sys.init = {{fde.ics[0]}, std::vector<Rational>(static_cast<std::size_t>(ceil_ll(gap)), 0)};
        return sys;
    }

    // cut_2m2: the 2m-1 construction with the final pair of links merged into
    // D^{alpha_m - alpha_{m-1}}, so the slot for C_{m-1} disappears.
    if (m < 2) throw MalformedFDE("cut split needs at least two fractional orders");
    const std::size_t count = 2 * m - 2;
    std::vector<Rational> beta(count);
    beta[0] = fde.orders[0];
    for (std::size_t i = 1; i + 1 < m; ++i) {
        beta[2 * i - 1] = Rational(static_cast<long long>(i)) - fde.orders[i - 1];
        beta[2 * i] = fde.orders[i] - Rational(static_cast<long long>(i));
    }
    beta[count - 1] = fde.orders[m - 1] - fde.orders[m - 2];
    for (const auto& b : beta)
        if (!(b > 0 && b <= 1))
            throw MalformedFDE("cut split link order " + to_pq_string(b) + " outside (0, 1]");

    sys.unknowns = unknown_names(count);
    for (std::size_t j = 0; j + 1 < count; ++j)
        sys.equations.push_back({beta[j], j, {{Rational(1), j + 1}}});
    std::vector<std::size_t> refs{0};
    for (std::size_t k = 1; k < m; ++k) refs.push_back(2 * k - 1);
    sys.equations.push_back({beta[count - 1], count - 1, closing_rhs(fde, refs)});

    sys.init.assign(count, {Rational(0)});
    sys.init[0] = {fde.ics[0]};
    for (std::size_t i = 1; i + 1 < m; ++i) sys.init[2 * i] = {fde.ics[i]};
    return sys;
}

SplitSystem refine_split(const SplitSystem& sys, std::size_t equation_index, const Rational& gamma) {
    sys.validate();
    if (equation_index >= sys.equations.size())
        throw InvalidRefinement("no equation " + std::to_string(equation_index));
    const SplitEquation eq = sys.equations[equation_index];
    if (eq.order > 1)
        throw InvalidRefinement("only links of order <= 1 can be cut");
    if (!(gamma > 0 && gamma < eq.order))
        throw InvalidRefinement("cut order must satisfy 0 < gamma < link order");

    SplitSystem out = sys;
    const std::size_t fresh = eq.lhs + 1;  // insert right after the cut unknown
    auto bump = [fresh](std::size_t u) { return u >= fresh ? u + 1 : u; };
    for (auto& e : out.equations) {
        e.lhs = bump(e.lhs);
        for (auto& [c, u] : e.rhs) {
            (void)c;
            u = bump(u);
        }
    }
    out.equations[equation_index] = {gamma, eq.lhs, {{Rational(1), fresh}}};
    SplitEquation tail{eq.order - gamma, fresh, {}};
    for (const auto& [c, u] : eq.rhs) tail.rhs.emplace_back(c, bump(u));
    out.equations.insert(out.equations.begin() + static_cast<std::ptrdiff_t>(equation_index) + 1,
                         std::move(tail));
    out.init.insert(out.init.begin() + static_cast<std::ptrdiff_t>(fresh), {Rational(0)});
    out.unknowns = unknown_names(out.unknowns.size() + 1);
    out.validate();
    return out;
}

}  // namespace fracsplit::splitter
