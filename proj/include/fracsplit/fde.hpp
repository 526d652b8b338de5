#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "fracsplit/rational.hpp"

namespace fracsplit {

// Homogeneous linear multi-term equation
//   a_0 x + a_1 D^{alpha_1} x + ... + a_m D^{alpha_m} x = 0
// with initial data x^{(i)}(0) = ics[i] for i = 0 .. ceil(alpha_m) - 1.
struct MultiTermFDE {
    std::vector<Rational> coeffs;  // a_0 .. a_m, coeffs.back() != 0
    std::vector<Rational> orders;  // alpha_1 .. alpha_m, positive, strictly increasing
    std::vector<Rational> ics;     // C_0 .. C_{ceil(alpha_m)-1}

    std::size_t m() const { return orders.size(); }
    void validate() const;  // throws MalformedFDE
};

// One equation D^{order} y_{lhs} = sum coeff * y_{ref}.
struct SplitEquation {
    Rational order;
    std::size_t lhs;
    std::vector<std::pair<Rational, std::size_t>> rhs;
};

// Chain system of fractional equations. unknowns[0] is x; equation j defines
// unknowns[j]; every equation except the last forwards to the next unknown.
// init[j] lists y_j(0), y_j'(0), ... - ceil(order) entries for the defining
// equation (only a head equation of order > 1 carries more than one).
struct SplitSystem {
    std::vector<std::string> unknowns;
    std::vector<SplitEquation> equations;
    std::vector<std::vector<Rational>> init;

    void validate() const;  // throws NotAChain / MalformedFDE
};

}  // namespace fracsplit
