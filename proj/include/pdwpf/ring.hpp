#pragma once

#include "pdwpf/jet2.hpp"
#include "pdwpf/rat.hpp"

namespace pdwpf {

template <class C>
class LaurentJet;

// Uniform hooks the generic determinant / formula code needs from a ring
// element type. "proto" arguments carry shape context (variable count,
// Laurent window) that plain constructors cannot know.
template <class R>
struct ring_ops;

template <>
struct ring_ops<Rat> {
    static bool exact_zero(const Rat& a) { return a.is_zero(); }
    static bool unit(const Rat& a) { return !a.is_zero(); }
    static Rat zero(const Rat&) { return Rat(0); }
    static Rat one(const Rat&) { return Rat(1); }
    static Rat from_rat(const Rat&, const Rat& v) { return v; }
    static Rat inv(const Rat& a) { return a.inv(); }
};

template <>
struct ring_ops<Jet2> {
    static bool exact_zero(const Jet2& a) { return a.is_zero(); }
    static bool unit(const Jet2& a) { return a.is_unit(); }
    static Jet2 zero(const Jet2& proto) { return proto.make_zero(); }
    static Jet2 one(const Jet2& proto) { return proto.make_one(); }
    static Jet2 from_rat(const Jet2& proto, const Rat& v) { return proto.make_const(v); }
    static Jet2 inv(const Jet2& a) { return a.inv(); }
};

template <class C>
struct ring_ops<LaurentJet<C>> {
    static bool exact_zero(const LaurentJet<C>& a) { return a.is_exact_zero(); }
    static bool unit(const LaurentJet<C>& a) { return a.is_unit(); }
    static LaurentJet<C> zero(const LaurentJet<C>& proto) { return proto.make_zero(); }
    static LaurentJet<C> one(const LaurentJet<C>& proto) { return proto.make_one(); }
    static LaurentJet<C> from_rat(const LaurentJet<C>& proto, const Rat& v) {
        return proto.make_const_rat(v);
    }
    static LaurentJet<C> inv(const LaurentJet<C>& a) { return a.inv(); }
};

} // namespace pdwpf
