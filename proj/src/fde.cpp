#include "fracsplit/fde.hpp"

#include "fracsplit/errors.hpp"

namespace fracsplit {

void MultiTermFDE::validate() const {
    if (orders.empty()) throw MalformedFDE("no fractional orders");
    if (coeffs.size() != orders.size() + 1)
        throw MalformedFDE("need one coefficient per order plus the constant term");
    if (coeffs.back() == 0) throw MalformedFDE("leading coefficient a_m must be nonzero");
    Rational prev = 0;
    for (const auto& a : orders) {
        if (a <= prev) throw MalformedFDE("orders must be positive and strictly increasing");
        prev = a;
    }
    const auto need = static_cast<std::size_t>(ceil_ll(orders.back()));
    if (ics.size() != need)
        throw MalformedFDE("expected " + std::to_string(need) + " initial values");
}

void SplitSystem::validate() const {
    if (equations.empty()) throw NotAChain("empty system");
    if (unknowns.size() != equations.size() || init.size() != unknowns.size())
        throw NotAChain("each unknown needs one defining equation and one initial list");
    for (std::size_t j = 0; j < equations.size(); ++j) {
        const auto& eq = equations[j];
        if (eq.lhs != j) throw NotAChain("equation order must follow unknown order");
        if (eq.order <= 0) throw MalformedFDE("equation orders must be positive");
        const auto need = static_cast<std::size_t>(ceil_ll(eq.order));
        if (init[j].size() != need)
            throw MalformedFDE("unknown " + unknowns[j] + " needs " + std::to_string(need) +
                               " initial values");
        for (const auto& [c, u] : eq.rhs) {
            (void)c;
            if (u >= unknowns.size()) throw NotAChain("rhs references an unknown that does not exist");
        }
        if (j + 1 < equations.size()) {
            if (eq.rhs.size() != 1 || eq.rhs[0].first != 1 || eq.rhs[0].second != j + 1)
                throw NotAChain("interior equations must forward to the next unknown");
        }
    }
}

}  // namespace fracsplit
