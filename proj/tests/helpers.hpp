#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "fracsplit/fde.hpp"
#include "fracsplit/rational.hpp"

namespace testutil {

using fracsplit::MultiTermFDE;
using fracsplit::Rational;

inline Rational Q(const char* text) { return fracsplit::parse_rational(text); }

inline double rel_gap(double value, double reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// Uniform rational num/den with num in [lo, hi] (scaled by den) and
// den in [1, max_den].
inline Rational rand_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
    std::uniform_int_distribution<long> den_dist(1, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(lo * den, hi * den);
    return Rational(num_dist(rng), den);
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
    for (;;) {
        Rational q = rand_rational(rng, lo, hi, max_den);
        if (q != 0) return q;
    }
}

// Fractional part in (0, 1), denominator up to max_den.
inline Rational rand_fraction(std::mt19937_64& rng, long max_den = 12) {
    std::uniform_int_distribution<long> den_dist(2, max_den);
    const long den = den_dist(rng);
    std::uniform_int_distribution<long> num_dist(1, den - 1);
    return Rational(num_dist(rng), den);
}

// Random equation with orders alpha_k in (k-1, k), coefficients in [-3, 3]
// (leading nonzero), initial data in [-2, 2]. cell_interior keeps every
// order strictly inside its cell, which the 2m-1 construction needs.
inline MultiTermFDE rand_fde_2m1(std::mt19937_64& rng, std::size_t m) {
    MultiTermFDE fde;
    for (std::size_t k = 1; k <= m; ++k)
        fde.orders.push_back(Rational(static_cast<long>(k) - 1) + rand_fraction(rng));
    for (std::size_t i = 0; i <= m; ++i) fde.coeffs.push_back(rand_rational(rng, -3, 3, 6));
    fde.coeffs.back() = rand_nonzero_rational(rng, -3, 3, 6);
    const auto n_ics = static_cast<std::size_t>(fracsplit::ceil_ll(fde.orders.back()));
    for (std::size_t i = 0; i < n_ics; ++i) fde.ics.push_back(rand_rational(rng, -2, 2, 6));
    return fde;
}

// Like rand_fde_2m1 but with non-increasing fractional parts, so every
// consecutive order gap stays at most 1 and the merged-tail 2m-2 cut keeps
// all links in (0, 1].
inline MultiTermFDE rand_fde_cut(std::mt19937_64& rng, std::size_t m) {
    MultiTermFDE fde = rand_fde_2m1(rng, m);
    Rational frac = rand_fraction(rng);
    for (std::size_t k = 0; k < m; ++k) {
        fde.orders[k] = Rational(static_cast<long>(k)) + frac;
        frac = frac * rand_fraction(rng);
    }
    // keep C_{m-1} nonzero so the dropped slot matters
    fde.ics.back() = rand_nonzero_rational(rng, -2, 2, 6);
    return fde;
}

// Orders with fractional parts in [1/4, 3/4] and a well-scaled leading
// coefficient; keeps the time stepper in its comfortable regime.
inline MultiTermFDE rand_fde_banded(std::mt19937_64& rng, std::size_t m) {
    MultiTermFDE fde;
    std::uniform_int_distribution<long> num(2, 6);
    for (std::size_t k = 1; k <= m; ++k)
        fde.orders.push_back(Rational(static_cast<long>(k) - 1) + Rational(num(rng), 8));
    for (std::size_t i = 0; i <= m; ++i) fde.coeffs.push_back(rand_rational(rng, -2, 2, 4));
    std::uniform_int_distribution<int> sign(0, 1);
    fde.coeffs.back() = Rational(sign(rng) ? 1 : -1) * (Rational(1, 2) + rand_fraction(rng, 4));
    const auto n_ics = static_cast<std::size_t>(fracsplit::ceil_ll(fde.orders.back()));
    for (std::size_t i = 0; i < n_ics; ++i) fde.ics.push_back(rand_rational(rng, -1, 1, 4));
    return fde;
}

// Orders all inside one cell (p, p+1], m of them, strictly increasing.
inline MultiTermFDE rand_fde_same_cell(std::mt19937_64& rng, std::size_t m, long p) {
    MultiTermFDE fde;
    std::vector<Rational> fracs;
    while (fracs.size() < m) {
        Rational f = rand_fraction(rng, 16);
        bool dup = false;
        for (const auto& g : fracs) dup = dup || g == f;
        if (!dup) fracs.push_back(f);
    }
    std::sort(fracs.begin(), fracs.end());
    for (const auto& f : fracs) fde.orders.push_back(Rational(p) + f);
    for (std::size_t i = 0; i <= m; ++i) fde.coeffs.push_back(rand_rational(rng, -3, 3, 6));
    fde.coeffs.back() = rand_nonzero_rational(rng, -3, 3, 6);
    for (long i = 0; i <= p; ++i) fde.ics.push_back(rand_rational(rng, -2, 2, 6));
    return fde;
}

}  // namespace testutil
