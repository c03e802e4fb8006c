#include "conslaw/diff_operators.hpp"

#include <set>

namespace conslaw {

OperatorMatrix OperatorMatrix::substituted(const std::map<Sym, DiffPoly>& repl) const {
    OperatorMatrix out;
    out.entries.resize(entries.size());
    for (std::size_t a = 0; a < entries.size(); ++a)
        for (const auto& [v, coeff] : entries[a])
            out.entries[a][v] = substitute(coeff, repl);
    return out;
}

OperatorMatrix jet_coefficients(const std::vector<DiffPoly>& F, int dep_limit) {
    OperatorMatrix m;
    m.entries.resize(F.size());
    for (std::size_t a = 0; a < F.size(); ++a) {
        for (const auto& v : jets_of(F[a])) {
            if (v.dep >= dep_limit) continue;
            DiffPoly d = partial_wrt(F[a], v);
            if (!d.is_zero()) m.entries[a][v] = d;
        }
    }
    return m;
}

static DiffPoly dt_multi(const DiffPoly& e, int q) {
    DiffPoly out = e;
    for (int i = 0; i < q; ++i) out = total_derivative(out, Direction::t());
    return out;
}

std::vector<DiffPoly> apply_linearization(const OperatorMatrix& coeffs,
                                          const std::vector<DiffPoly>& V) {
    std::vector<DiffPoly> out(coeffs.rows());
    for (int a = 0; a < coeffs.rows(); ++a) {
        for (const auto& [v, coeff] : coeffs.entries[a]) {
            DiffPoly dv = dt_multi(total_derivative_multi(V[v.dep], v.x_index), v.t_order);
            out[a] += coeff * dv;
        }
    }
    return out;
}

std::vector<DiffPoly> apply_adjoint(const OperatorMatrix& coeffs,
                                    const std::vector<DiffPoly>& W) {
    int ncomp = 0;
    for (int a = 0; a < coeffs.rows(); ++a)
        for (const auto& [v, coeff] : coeffs.entries[a])
            ncomp = std::max(ncomp, v.dep + 1);
    std::vector<DiffPoly> out(ncomp);
    for (int a = 0; a < coeffs.rows(); ++a) {
        for (const auto& [v, coeff] : coeffs.entries[a]) {
            DiffPoly inner = coeff * W[a];
            DiffPoly d = dt_multi(total_derivative_multi(inner, v.x_index), v.t_order);
            if ((v.total_order()) % 2 != 0) d = -d;
            out[v.dep] += d;
        }
    }
    return out;
}

static std::vector<DiffPoly> components_of(const TestFunction& f) {
    std::vector<DiffPoly> out;
    out.reserve(f.count);
    for (int j = 0; j < f.count; ++j) out.push_back(f.component_poly(j));
    return out;
}

std::vector<DiffPoly> apply_linearization(const OperatorMatrix& coeffs,
                                          const TestFunction& V) {
    return apply_linearization(coeffs, components_of(V));
}

std::vector<DiffPoly> apply_adjoint(const OperatorMatrix& coeffs,
                                    const TestFunction& W) {
    return apply_adjoint(coeffs, components_of(W));
}

std::vector<DiffPoly> linearize(const PDESystem& sys, const TestFunction& V,
                                OperatorMatrix* out_matrix) {
    OperatorMatrix m = jet_coefficients(sys.g, sys.components());
    if (out_matrix) *out_matrix = m;
    return apply_linearization(m, V);
}

std::vector<DiffPoly> adjointize(const PDESystem& sys, const TestFunction& W) {
    OperatorMatrix m = jet_coefficients(sys.g, sys.components());
    std::vector<DiffPoly> out = apply_adjoint(m, W);
    out.resize(sys.components());
    return out;
}

DiffPoly euler(const DiffPoly& e, int dep) {
    DiffPoly out;
    for (const auto& v : jets_of_dep(e, dep)) {
        DiffPoly d = partial_wrt(e, v);
        d = dt_multi(total_derivative_multi(d, v.x_index), v.t_order);
        if (v.total_order() % 2 != 0) d = -d;
        out += d;
    }
    return out;
}

DiffPoly restricted_euler(const DiffPoly& e, const PDESystem& sys, int dep) {
    require_normal_form(e, sys, "restricted Euler argument");
    int stratum = sys.form == CKForm::FirstOrder ? 0 : sys.t_order - 1;
    DiffPoly out;
    for (const auto& v : jets_of_dep(e, dep)) {
        if (v.t_order != stratum) continue;
        DiffPoly d = total_derivative_multi(partial_wrt(e, v), v.x_index);
        if (v.spatial_order() % 2 != 0) d = -d;
        out += d;
    }
    return out;
}

DiffPoly trilinear_S(const std::vector<DiffPoly>& V, const std::vector<DiffPoly>& W,
                     const OperatorMatrix& coeffs, int i) {
    DiffPoly out;
    for (int a = 0; a < coeffs.rows(); ++a) {
        for (const auto& [v, coeff] : coeffs.entries[a]) {
            const IndexSet& dirs = v.x_index;
            int r = static_cast<int>(dirs.size());
            if (r == 0) continue;
            DiffPoly C = coeff * W[a];
            DiffPoly Vq = dt_multi(V[v.dep], v.t_order);
            for (int s = 0; s < r; ++s) {
                if (dirs[s] != i) continue;
                DiffPoly left = C;
                for (int k = 0; k < s; ++k)
                    left = total_derivative(left, Direction::x_dir(dirs[k]));
                DiffPoly right = Vq;
                for (int k = s + 1; k < r; ++k)
                    right = total_derivative(right, Direction::x_dir(dirs[k]));
                DiffPoly term = left * right;
                if (s % 2 != 0) term = -term;
                out += term;
            }
        }
    }
    return out;
}

DiffPoly trilinear_defect(const std::vector<DiffPoly>& V,
                          const std::vector<DiffPoly>& W,
                          const OperatorMatrix& coeffs, int n) {
    std::vector<DiffPoly> LV = apply_linearization(coeffs, V);
    std::vector<DiffPoly> LsW = apply_adjoint(coeffs, W);
    DiffPoly out;
    for (std::size_t a = 0; a < LV.size(); ++a) out += W[a] * LV[a];
    for (std::size_t b = 0; b < LsW.size(); ++b) out -= V[b] * LsW[b];
    for (int i = 0; i < n; ++i)
        out -= total_derivative(trilinear_S(V, W, coeffs, i), Direction::x_dir(i));
    return out;
}

bool is_divergence(const DiffPoly& e) {
    std::set<int> deps;
    for (const auto& v : jets_of(e)) deps.insert(v.dep);
    for (int dep : deps)
        if (!euler(e, dep).is_zero()) return false;
    return true;
}

}  // namespace conslaw
