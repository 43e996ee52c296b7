#pragma once

// Shared adapters so the search engines run on plain rationals when lambda is
// rational and on QuadNum when it is a real quadratic irrational.

#include "relnum/numeric.hpp"

namespace relnum::detail {

template <class Num>
struct Ops;

template <>
struct Ops<Rational> {
    static Rational from(const QuadNum& x) { return x.a; }
    static QuadNum quad(const Rational& x) { return QuadNum(x); }
    static Int floor(const Rational& x) { return floor_int(x); }
    static Int ceil(const Rational& x) { return ceil_int(x); }
    static bool is_int(const Rational& x) { return is_integer(x); }
    static Int to_int(const Rational& x) { return Int(x.get_num()); }
    static int sign(const Rational& x) { return sgn(x); }
    static Rational abs_val(const Rational& x) { return abs(x); }
    static bool less(const Rational& x, const Rational& y) { return x < y; }
    static Int round_away(const Rational& x) {
        int s = sgn(x);
        if (s == 0) return Int(0);
        Int f = floor_int(abs(x) + Rational(1, 2));
        return s > 0 ? f : Int(-f);
    }
};

template <>
struct Ops<QuadNum> {
    static QuadNum from(const QuadNum& x) { return x; }
    static QuadNum quad(const QuadNum& x) { return x; }
    static Int floor(const QuadNum& x) { return floor_real(x); }
    static Int ceil(const QuadNum& x) { return ceil_real(x); }
    static bool is_int(const QuadNum& x) { return x.is_int(); }
    static Int to_int(const QuadNum& x) { return Int(x.a.get_num()); }
    static int sign(const QuadNum& x) { return sign_real(x); }
    static QuadNum abs_val(const QuadNum& x) { return abs_real(x); }
    static bool less(const QuadNum& x, const QuadNum& y) { return cmp_real(x, y) == Cmp::LT; }
    static Int round_away(const QuadNum& x) { return relnum::round_away(x); }
};

/// Visits the nonzero integers of [lo, hi] ordered by distance from c (ties
/// toward the floor side); stops early when f returns true.
template <class Num, class F>
bool visit_near_center(const Num& c, Int lo, Int hi, F&& f) {
    Int down = Ops<Num>::floor(c);
    Int up = down + 1;
    if (down > hi) down = hi;
    if (up < lo) up = lo;
    while (down >= lo || up <= hi) {
        bool pick_down;
        if (down < lo) pick_down = false;
        else if (up > hi) pick_down = true;
        else pick_down = !Ops<Num>::less(Num(up) - c, c - Num(down));
        Int x = pick_down ? down : up;
        if (pick_down) --down; else ++up;
        if (x == 0) continue;
        if (f(x)) return true;
    }
    return false;
}

} // namespace relnum::detail
