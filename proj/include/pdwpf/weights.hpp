#pragma once

#include <string>

#include "pdwpf/errors.hpp"
#include "pdwpf/rat.hpp"

namespace pdwpf {

enum class VertexType { a_plus, a_minus, b_plus, b_minus, c_plus, c_minus };

enum class SchemeKind { RATIONAL, POLYNOMIAL, TRIGONOMETRIC };

// Weight scheme for the six admissible vertices.  The trigonometric scheme
// works in multiplicative coordinates: rapidities enter as X=e^x, Y=e^y and
// the anisotropy as G=e^gamma, all exact rationals, so sinh(u-v) becomes the
// rational expression (U/V - V/U)/2 and every identity stays exact.
struct WeightScheme {
    SchemeKind kind = SchemeKind::RATIONAL;
    Rat anisotropy_g = Rat(1); // e^gamma, TRIGONOMETRIC only; must be nonzero

    static WeightScheme rational() { return {SchemeKind::RATIONAL, Rat(1)}; }
    static WeightScheme polynomial() { return {SchemeKind::POLYNOMIAL, Rat(1)}; }
    static WeightScheme trigonometric(const Rat& eg) {
        if (eg.is_zero()) throw std::invalid_argument("WeightScheme: e^gamma must be nonzero");
        return {SchemeKind::TRIGONOMETRIC, eg};
    }
};

// [u] = sinh(u) in multiplicative form: U = e^u, sinh(u) = (U - 1/U)/2.
Rat sinh_m(const Rat& U);

// [a-b] with A = e^a, B = e^b.
Rat sinh_diff(const Rat& A, const Rat& B);

// Weight of one vertex.  In RATIONAL/POLYNOMIAL schemes x,y are additive
// rapidities; in TRIGONOMETRIC they are the multiplicative X=e^x, Y=e^y.
Rat vertex_weight(VertexType t, const Rat& x, const Rat& y, const WeightScheme& scheme);

const char* vertex_type_name(VertexType t);

} // namespace pdwpf
