#include "pdwpf/weights.hpp"

namespace pdwpf {

Rat sinh_m(const Rat& U) {
    if (U.is_zero()) throw SingularWeight("sinh_m: multiplicative coordinate is zero");
    return (U - U.inv()) / Rat(2);
}

Rat sinh_diff(const Rat& A, const Rat& B) {
    if (B.is_zero()) throw SingularWeight("sinh_diff: multiplicative coordinate is zero");
    return sinh_m(A / B);
}

const char* vertex_type_name(VertexType t) {
    switch (t) {
    case VertexType::a_plus: return "a+";
    case VertexType::a_minus: return "a-";
    case VertexType::b_plus: return "b+";
    case VertexType::b_minus: return "b-";
    case VertexType::c_plus: return "c+";
    case VertexType::c_minus: return "c-";
    }
    return "?";
}

namespace {

bool is_a(VertexType t) { return t == VertexType::a_plus || t == VertexType::a_minus; }
bool is_b(VertexType t) { return t == VertexType::b_plus || t == VertexType::b_minus; }

} // namespace

Rat vertex_weight(VertexType t, const Rat& x, const Rat& y, const WeightScheme& scheme) {
    switch (scheme.kind) {
    case SchemeKind::RATIONAL: {
        if (is_a(t)) return Rat(1);
        const Rat den = x - y + Rat(1);
        if (den.is_zero())
            throw SingularWeight("vertex_weight: x-y+1 = 0 at x=" + x.str() + ", y=" + y.str());
        if (is_b(t)) return (x - y) / den;
        return den.inv();
    }
    case SchemeKind::POLYNOMIAL: {
        if (is_a(t)) return x - y + Rat(1);
        if (is_b(t)) return x - y;
        return Rat(1);
    }
    case SchemeKind::TRIGONOMETRIC: {
        if (is_a(t)) return Rat(1);
        const Rat& G = scheme.anisotropy_g;
        if (x.is_zero() || y.is_zero() || G.is_zero())
            throw SingularWeight("vertex_weight: trig coordinates must be nonzero");
        const Rat den = sinh_m(x * G / y); // [x-y+gamma]
        if (den.is_zero())
            throw SingularWeight("vertex_weight: [x-y+gamma] = 0 at e^x=" + x.str() +
                                 ", e^y=" + y.str());
        if (t == VertexType::b_plus) return G * sinh_m(x / y) / den;
        if (t == VertexType::b_minus) return sinh_m(x / y) / (G * den);
        if (t == VertexType::c_plus) return (x / y) * sinh_m(G) / den;
        return (y / x) * sinh_m(G) / den;
    }
    }
    throw std::logic_error("vertex_weight: unknown scheme");
}

} // namespace pdwpf
