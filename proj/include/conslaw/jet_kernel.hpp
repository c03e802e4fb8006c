#pragma once

// Total derivatives, formal jet partials, and solution-space restriction.

#include "conslaw/diffpoly.hpp"
#include "conslaw/pdesystem.hpp"

namespace conslaw {

// Derivative direction: t or one of the spatial variables.
struct Direction {
    bool is_t = true;
    int x = 0;
    static Direction t() { return Direction{true, 0}; }
    static Direction x_dir(int i) { return Direction{false, i}; }
};

// Formal partial derivative treating each distinct jet coordinate (and t,
// x^i, parameters) as an independent variable.
DiffPoly partial_wrt(const DiffPoly& e, const Sym& v);
DiffPoly partial_wrt(const DiffPoly& e, const JetVar& v);

// Total derivative: chain rule through every jet coordinate.  D_t raises
// t_order, D_i extends the spatial multiset; all directions commute.
DiffPoly total_derivative(const DiffPoly& e, const Direction& dir);
// Repeated spatial derivatives along a multiset of directions.
DiffPoly total_derivative_multi(const DiffPoly& e, const IndexSet& dirs);

// Rewrites every jet whose t-order reaches the leading order using the
// system (u^sigma_t -> -g^sigma, or d^N_t u -> -g) and its differential
// consequences.  Innermost (lowest excess order) first; the result obeys
// the form's t-order bound.  Jets of dependents beyond the system's own
// components are left untouched.
DiffPoly restrict_to_solutions(const DiffPoly& e, const PDESystem& sys);

// Solution-space t-derivative: restrict(D_t e).
DiffPoly sol_dt(const DiffPoly& e, const PDESystem& sys);
DiffPoly sol_dt(const DiffPoly& e, const PDESystem& sys, int times);

}  // namespace conslaw
