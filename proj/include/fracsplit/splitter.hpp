#pragma once

#include <optional>

#include "fracsplit/fde.hpp"

namespace fracsplit::splitter {

// Splits an m-term equation with orders alpha_k in (k-1, k] into the chain
// of 2m-1 equations with link orders
//   b_{2j}   = alpha_{j+1} - j,
//   b_{2j+1} = (j+1) - alpha_{j+1},
// intermediate unknowns y_{2i-1}(0) = 0 and y_{2i}(0) = C_i. Rejects
// alpha_k = k for k < m (a zero-order link collapses the chain).
//
// For m = 1 the construction needs an interior cut point 0 < g < alpha_1
// (default alpha_1 / 2) and yields the two-equation chain
//   D^g x = y,  D^{alpha_1 - g} y = -(a_0/a_1) x,  y(0) = 0.
SplitSystem build_split_2m1(const MultiTermFDE& fde,
                            std::optional<Rational> m1_interior = std::nullopt);

// Splits an equation whose orders all lie in one cell p < alpha_1 < ... <=
// p+1 into the m-link chain with consecutive-difference orders; the head
// equation D^{alpha_1} x = y_1 keeps order alpha_1 (possibly > 1) and carries
// the original initial data, every intermediate starts at zero.
SplitSystem build_split_chain(const MultiTermFDE& fde);

enum class NaiveVariant {
    two_term_pair,  // m = 2: D^{alpha_1} x = y, D^{alpha_2 - alpha_1} y = rhs
    cut_2m2,        // 2m-2 links: the last two links of the 2m-1 chain merged
};

// Deliberately defective splits used for negative testing; intermediate
// initial values are set to zero, which drops the information carried by
// C_{m-1} in the proper construction.
SplitSystem build_naive_split(const MultiTermFDE& fde, NaiveVariant variant);

// Replaces chain link equation_index of order b by two links gamma and
// b - gamma with a fresh intermediate unknown starting at zero. Only links
// with order <= 1 can be cut (the zero initial value is only justified
// inside one unit cell).
SplitSystem refine_split(const SplitSystem& sys, std::size_t equation_index, const Rational& gamma);

}  // namespace fracsplit::splitter
