#pragma once

// Data-parallel kernels with serial reference implementations.
//
// The symbolic engine itself is sequential; the hot loops are the batched
// exact evaluations behind probabilistic identity tests and the independent
// per-equation residual restrictions.  Both kernels come in an OpenMP
// flavor and a serial reference used by the tests and the benchmark.

#include <cstdint>
#include <vector>

#include "conslaw/diffpoly.hpp"
#include "conslaw/jet_kernel.hpp"
#include "conslaw/pdesystem.hpp"

namespace conslaw {

std::vector<Rational> eval_batch_serial(const DiffPoly& e,
                                        const std::vector<Point>& pts);
std::vector<Rational> eval_batch(const DiffPoly& e, const std::vector<Point>& pts);

std::vector<DiffPoly> restrict_batch_serial(const std::vector<DiffPoly>& exprs,
                                            const PDESystem& sys);
std::vector<DiffPoly> restrict_batch(const std::vector<DiffPoly>& exprs,
                                     const PDESystem& sys);

// Exact probabilistic identity test: a == b at `count` seed-derived random
// rational points.  Point k uses seed+k, so reports are reproducible.
bool equal_at_random_points(const DiffPoly& a, const DiffPoly& b, int count,
                            std::uint64_t seed, long bound);

}  // namespace conslaw
