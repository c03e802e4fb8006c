#pragma once

#include <string>
#include <vector>

#include "conslaw/diffpoly.hpp"

namespace conslaw {

enum class CKForm { FirstOrder, Scalar };

// Names used when rendering expressions back to the input language.  The
// leading variable always prints under ck_name; spatial directions print
// under x_names in declared order.
struct PrintNames {
    std::string ck_name = "t";
    std::vector<std::string> x_names;
    std::vector<std::string> dep_names;
};

// A PDE system in Cauchy-Kovalevskaya form with respect to t:
//   FirstOrder: d/dt u^sigma + g^sigma = 0 with t-free g^sigma, sigma=1..N
//   Scalar:     d^N/dt^N u + g = 0 with one unknown and t-orders < N in g.
struct PDESystem {
    int n = 1;        // spatial variable count
    CKForm form = CKForm::FirstOrder;
    int t_order = 1;  // leading derivative order (1 for FirstOrder)
    std::vector<DiffPoly> g;
    std::vector<std::string> params;
    PrintNames names;

    int components() const { return static_cast<int>(g.size()); }
    // Highest spatial derivative order appearing across g.
    int max_order() const {
        int m = 0;
        for (const auto& e : g) m = std::max(m, max_spatial_order(e));
        return m;
    }
    // First dependent-variable id free for test functions.
    int first_free_dep() const { return components(); }
};

// An expression family plays the multiplier role: N components for a
// first-order system, one component for a scalar equation.  `order` is the
// highest spatial jet order (scalar form: highest total order among jets
// with t_order < N).
struct MultiplierSet {
    std::vector<DiffPoly> components;
    int order = 0;

    static MultiplierSet of(std::vector<DiffPoly> comps);
};

// Checks the t-order bound the form imposes on multiplier/density
// expressions; throws NotNormalForm when violated.
void require_normal_form(const DiffPoly& e, const PDESystem& sys,
                         const std::string& what);

}  // namespace conslaw
