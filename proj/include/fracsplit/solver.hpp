#pragma once

#include <string>
#include <vector>

#include "fracsplit/fde.hpp"
#include "fracsplit/mlf.hpp"

namespace fracsplit::solver {

struct Trajectory {
    std::vector<double> t;                    // uniform grid, t[0] = 0
    std::vector<std::vector<double>> values;  // time x unknown, row 0 = initial data
    std::vector<Rational> orders;             // equation orders of the solved system
    double h = 0.0;
    int n_steps = 0;
    std::string method;
};

// Fractional Adams-Bashforth-Moulton predictor-corrector (one corrector
// sweep per step, full-memory weights) for chain systems. Equations of
// order q + r with q >= 1 are first rewritten as q classical first-order
// links plus one fractional link of order r, with the extra unknowns taking
// the higher initial derivatives; the rewrite is exact for the Caputo
// derivative. History convolutions run on the block-parallel kernel with a
// fixed reduction order, so results are bit-identical for identical inputs
// regardless of thread count.
Trajectory abm_solve(const SplitSystem& sys, double t_end, int N);

// Plain serial loop-nest implementation of the same scheme, kept as the
// reference the parallel kernel is tested and benchmarked against.
Trajectory abm_solve_reference(const SplitSystem& sys, double t_end, int N);

// Solution values of the multi-term equation itself: Laplace transform,
// termwise Mittag-Leffler decomposition, series evaluation per point.
std::vector<double> closed_form_solve(const MultiTermFDE& fde, const std::vector<double>& t_points,
                                      const mlf::EvalControl& ctrl = {});

struct EquivalenceReport {
    enum class Verdict { equivalent, not_equivalent, inconclusive };

    bool symbolic_equal = false;
    double numeric_max_rel_gap = 0.0;
    double t_end = 0.0;
    int n_steps = 0;
    Verdict verdict = Verdict::inconclusive;
};

// Symbolic check (exact, Laplace domain) plus numeric shadow: the split
// system integrated by abm_solve against the closed form of the equation,
// gap measured as max |x_abm - x_cf| / (1 + |x_cf|) over the grid.
EquivalenceReport verify_equivalence(const MultiTermFDE& fde, const SplitSystem& sys, double t_end,
                                     int N, double tol = 1e-3);

const char* to_string(EquivalenceReport::Verdict v);

}  // namespace fracsplit::solver
