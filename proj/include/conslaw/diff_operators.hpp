#pragma once

// The linearization (Frechet derivative) operator, its formal adjoint, full
// and restricted Euler operators, and the trilinear flux expressions S^i
// whose spatial divergence reproduces W.(L_F V) - V.(L*_F W).

#include <map>
#include <vector>

#include "conslaw/diffpoly.hpp"
#include "conslaw/jet_kernel.hpp"
#include "conslaw/pdesystem.hpp"

namespace conslaw {

// A family of fresh dependent variables acting as arbitrary functions.
struct TestFunction {
    int base_dep = 0;
    int count = 1;

    Sym component(int j, int t_order = 0, IndexSet ix = {}) const {
        return Sym::jet(base_dep + j, t_order, std::move(ix));
    }
    DiffPoly component_poly(int j) const { return DiffPoly(component(j)); }
};

// Jet-coefficient table of an expression family F_a: for every jet
// coordinate v of a dependent variable below dep_limit appearing in F_a,
// entries[a][v] = dF_a/dv.  This is the operator matrix behind L_F, L*_F
// and the S^i construction.
struct OperatorMatrix {
    std::vector<std::map<JetVar, DiffPoly>> entries;

    int rows() const { return static_cast<int>(entries.size()); }
    // Applies a substitution to every coefficient (used to evaluate the
    // operator along the homotopy family).
    OperatorMatrix substituted(const std::map<Sym, DiffPoly>& repl) const;
};

OperatorMatrix jet_coefficients(const std::vector<DiffPoly>& F, int dep_limit);

// (L_F V)_a = sum over jets v of F_a of  dF_a/dv . D_t^q D_I V^{v.dep}.
std::vector<DiffPoly> apply_linearization(const OperatorMatrix& coeffs,
                                          const TestFunction& V);
// (L*_F W)_b = sum over a and jets v of F_a with v.dep == b of
//   (-1)^{q+|I|} D_t^q D_I ( dF_a/dv . W_a ).
std::vector<DiffPoly> apply_adjoint(const OperatorMatrix& coeffs,
                                    const TestFunction& W);
// Same operators applied to concrete expression families instead of test
// functions (components indexed like the system's dependent variables).
std::vector<DiffPoly> apply_linearization(const OperatorMatrix& coeffs,
                                          const std::vector<DiffPoly>& V);
std::vector<DiffPoly> apply_adjoint(const OperatorMatrix& coeffs,
                                    const std::vector<DiffPoly>& W);

// Linearization of the system right-hand sides acting on V; also returns
// the coefficient table via out_matrix when non-null.  For scalar form the
// table is stratified over the t-orders of g's jets.
std::vector<DiffPoly> linearize(const PDESystem& sys, const TestFunction& V,
                                OperatorMatrix* out_matrix = nullptr);
std::vector<DiffPoly> adjointize(const PDESystem& sys, const TestFunction& W);

// Full Euler operator with respect to dependent variable `dep`: includes
// t-derivative strata with sign (-1)^{q+|I|}.
DiffPoly euler(const DiffPoly& e, int dep);

// Restricted Euler operator: spatial total derivatives only, applied to the
// t-stratum the form singles out (0 for first-order systems, N-1 for an
// Nth-order scalar form).  Throws NotNormalForm if e breaks the bound.
DiffPoly restricted_euler(const DiffPoly& e, const PDESystem& sys, int dep);

// Trilinear flux S^i[V, W; F] for spatial direction i, built by telescoping
// integration by parts with directions peeled in ascending order:
// every jet v of the table with spatial directions d_1 <= ... <= d_r
// contributes, for each position s with d_{s+1} = i,
//   (-1)^s  D_{d_1..d_s}( dF_a/dv . W_a ) . D_{d_{s+2}..d_r} D_t^q V_{v.dep}.
// The same telescoping covers the scalar form, where the t-stratum q of the
// jet shifts V to D_t^q V.
DiffPoly trilinear_S(const std::vector<DiffPoly>& V, const std::vector<DiffPoly>& W,
                     const OperatorMatrix& coeffs, int i);

// Defect of the defining identity
//   sum_a W_a (L_F V)_a - sum_b V_b (L*_F W)_b - sum_i D_i S^i[V,W;F];
// identically zero for t-stratum-free tables (first-order form).
DiffPoly trilinear_defect(const std::vector<DiffPoly>& V,
                          const std::vector<DiffPoly>& W,
                          const OperatorMatrix& coeffs, int n);

// True iff euler(e, dep) vanishes for every dependent variable of e.
bool is_divergence(const DiffPoly& e);

}  // namespace conslaw
