#include "conslaw/jet_kernel.hpp"

#include <algorithm>

namespace conslaw {

DiffPoly partial_wrt(const DiffPoly& e, const Sym& v) {
    DiffPoly out;
    for (const auto& [m, c] : e.terms()) {
        int exp = m.exponent_of(v);
        if (exp == 0) continue;
        out.add_term(m.without_one(v), c * exp);
    }
    return out;
}

DiffPoly partial_wrt(const DiffPoly& e, const JetVar& v) {
    return partial_wrt(e, Sym::jet(v));
}

// Derivative of a single symbol: 0, 1, or a jet.
static DiffPoly sym_derivative(const Sym& s, const Direction& dir) {
    switch (s.kind()) {
        case Sym::Kind::Param:
            return DiffPoly::zero();
        case Sym::Kind::T:
            return dir.is_t ? DiffPoly(1) : DiffPoly::zero();
        case Sym::Kind::X:
            return (!dir.is_t && s.x_dir() == dir.x) ? DiffPoly(1) : DiffPoly::zero();
        case Sym::Kind::Jet: {
            JetVar v = s.jet_var();
            if (dir.is_t) {
                v.t_order += 1;
            } else {
                v.x_index.push_back(dir.x);
                v.x_index = sorted(std::move(v.x_index));
            }
            return DiffPoly(Sym::jet(v));
        }
    }
    return DiffPoly::zero();
}

DiffPoly total_derivative(const DiffPoly& e, const Direction& dir) {
    DiffPoly out;
    for (const auto& [m, c] : e.terms()) {
        for (const auto& [s, exp] : m.factors()) {
            DiffPoly ds = sym_derivative(s, dir);
            if (ds.is_zero()) continue;
            DiffPoly rest_poly;
            rest_poly.add_term(m.without_one(s), c * exp);
            out += rest_poly * ds;
        }
    }
    return out;
}

DiffPoly total_derivative_multi(const DiffPoly& e, const IndexSet& dirs) {
    DiffPoly out = e;
    for (int d : dirs) out = total_derivative(out, Direction::x_dir(d));
    return out;
}

namespace {

// Rewriting engine shared by restrict_to_solutions and sol_dt.  Values of
// eliminated jets are memoized per call tree.
struct Restrictor {
    const PDESystem& sys;
    std::map<Sym, DiffPoly> memo;

    int lead_order() const { return sys.form == CKForm::FirstOrder ? 1 : sys.t_order; }

    bool offending(const JetVar& v) const {
        return v.dep < sys.components() && v.t_order >= lead_order();
    }

    DiffPoly value_of(const JetVar& v) {
        Sym key = Sym::jet(v);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        DiffPoly val;
        int lead = lead_order();
        if (v.t_order == lead) {
            val = total_derivative_multi(-sys.g[v.dep], v.x_index);
        } else {
            JetVar lower = v;
            lower.t_order -= 1;
            val = rewrite(total_derivative(value_of(lower), Direction::t()));
        }
        memo[key] = val;
        return val;
    }

    DiffPoly rewrite(const DiffPoly& e) {
        std::map<Sym, DiffPoly> repl;
        for (const auto& v : jets_of(e)) {
            if (!offending(v)) continue;
            repl[Sym::jet(v)] = value_of(v);
        }
        if (repl.empty()) return e;
        return substitute(e, repl);
    }
};

}  // namespace

DiffPoly restrict_to_solutions(const DiffPoly& e, const PDESystem& sys) {
    Restrictor r{sys, {}};
    return r.rewrite(e);
}

DiffPoly sol_dt(const DiffPoly& e, const PDESystem& sys) {
    return restrict_to_solutions(total_derivative(e, Direction::t()), sys);
}

DiffPoly sol_dt(const DiffPoly& e, const PDESystem& sys, int times) {
    DiffPoly out = e;
    for (int i = 0; i < times; ++i) out = sol_dt(out, sys);
    return out;
}

MultiplierSet MultiplierSet::of(std::vector<DiffPoly> comps) {
    MultiplierSet m;
    m.components = std::move(comps);
    for (const auto& e : m.components)
        m.order = std::max(m.order, max_total_order(e));
    return m;
}

void require_normal_form(const DiffPoly& e, const PDESystem& sys,
                         const std::string& what) {
    int bound = sys.form == CKForm::FirstOrder ? 0 : sys.t_order - 1;
    for (const auto& v : jets_of(e)) {
        if (v.dep < sys.components() && v.t_order > bound) {
            throw NotNormalForm(what + " contains forbidden leading-derivative jet " +
                                Sym::jet(v).debug());
        }
    }
}

}  // namespace conslaw
