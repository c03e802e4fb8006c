#include "conslaw/parallel.hpp"

namespace conslaw {

std::vector<Rational> eval_batch_serial(const DiffPoly& e,
                                        const std::vector<Point>& pts) {
    std::vector<Rational> out(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) out[i] = eval_at(e, pts[i]);
    return out;
}

std::vector<Rational> eval_batch(const DiffPoly& e, const std::vector<Point>& pts) {
    std::vector<Rational> out(pts.size());
    const long count = static_cast<long>(pts.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[i] = eval_at(e, pts[i]);
    return out;
}

std::vector<DiffPoly> restrict_batch_serial(const std::vector<DiffPoly>& exprs,
                                            const PDESystem& sys) {
    std::vector<DiffPoly> out(exprs.size());
    for (std::size_t i = 0; i < exprs.size(); ++i)
        out[i] = restrict_to_solutions(exprs[i], sys);
    return out;
}

std::vector<DiffPoly> restrict_batch(const std::vector<DiffPoly>& exprs,
                                     const PDESystem& sys) {
    std::vector<DiffPoly> out(exprs.size());
    const long count = static_cast<long>(exprs.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[i] = restrict_to_solutions(exprs[i], sys);
    return out;
}

bool equal_at_random_points(const DiffPoly& a, const DiffPoly& b, int count,
                            std::uint64_t seed, long bound) {
    DiffPoly diff = a - b;
    if (diff.is_zero()) return true;
    std::vector<Point> pts;
    pts.reserve(count);
    for (int k = 0; k < count; ++k)
        pts.push_back(random_point(diff, seed + static_cast<std::uint64_t>(k), bound));
    std::vector<Rational> vals = eval_batch(diff, pts);
    for (const auto& v : vals)
        if (v != 0) return false;
    return true;
}

}  // namespace conslaw
