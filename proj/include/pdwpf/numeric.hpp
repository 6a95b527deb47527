#pragma once

#include <boost/multiprecision/cpp_complex.hpp>
#include <cstdint>
#include <vector>

#include "pdwpf/rat.hpp"
#include "pdwpf/ring.hpp"
#include "pdwpf/weights.hpp"

namespace pdwpf {

// 100-decimal-digit complex floats.  Every numeric tolerance in the checks
// (1e-12 residuals, 1e-9 relative comparisons) is then limited by the
// mathematics, never by the arithmetic.
using CFloat = boost::multiprecision::cpp_complex_100;
using RFloat = CFloat::value_type;

RFloat to_rfloat(const Rat& r);
CFloat to_cfloat(const Rat& r);
RFloat magnitude(const CFloat& z);

template <>
struct ring_ops<CFloat> {
    static bool exact_zero(const CFloat& a) { return a == 0; }
    static bool unit(const CFloat& a) { return a != 0; }
    static CFloat zero(const CFloat&) { return CFloat(0); }
    static CFloat one(const CFloat&) { return CFloat(1); }
    static CFloat from_rat(const CFloat&, const Rat& v) { return to_cfloat(v); }
    static CFloat inv(const CFloat& a) { return CFloat(1) / a; }
};

// Residuals (lhs - rhs) of the root-system equations at float candidates.
// Multiplicative coordinates for the TRIGONOMETRIC scheme, matching the
// exact checker.
std::vector<CFloat> bethe_residuals_numeric(const std::vector<CFloat>& bs,
                                            const std::vector<Rat>& ys,
                                            const WeightScheme& scheme);

// Multi-start damped Newton on the cleared polynomial form of the root
// system.  Returns n pairwise-distinct roots sorted by (Re, Im) with every
// residual of the original equations below 1e-12 in magnitude; deterministic
// for a fixed seed.  Throws NoConvergence when the restart budget runs out.
std::vector<CFloat> bethe_solve_numeric(int n, const std::vector<Rat>& ys,
                                        const WeightScheme& scheme, std::uint64_t seed);

// Kostov determinant over complex floats; used for the vanishing test with
// root rapidities in the x slots.
CFloat pdwpf_kostov_numeric(const std::vector<CFloat>& xs, const std::vector<Rat>& ys);

// Slavnov determinant with float roots, rational parametrization.  Enforces
// the residual tolerance 1e-12 on bs (NotBetheRoots otherwise).
CFloat slavnov_numeric(const std::vector<Rat>& xs, const std::vector<CFloat>& bs,
                       const std::vector<Rat>& ys);

// Brute-force scalar-product lattice sum with float rapidities on the upper
// rows; same arrow conventions as the exact oracle.
CFloat oracle_scalar_product_numeric(const std::vector<Rat>& xs, const std::vector<CFloat>& bs,
                                     const std::vector<Rat>& ys);

} // namespace pdwpf
