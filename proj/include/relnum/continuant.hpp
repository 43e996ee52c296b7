#pragma once

#include <span>
#include <vector>

#include "relnum/errors.hpp"

namespace relnum {

enum class ContKind { K, Kplus };      // off-diagonal signs -1 / +1 in the recursion
enum class MobiusKind { M, Mplus };    // factor [[c,-1],[1,0]] / [[c,1],[1,0]]

/// K_n / K^+_n by the linear recursion K_n = c_n K_{n-1} -/+ K_{n-2}, K_0 = 1, K_{-1} = 0.
/// The determinant definition is only used as a test oracle.
template <class R>
R continuant(std::span<const R> c, ContKind kind = ContKind::K) {
    R prev(0);  // K_{-1}
    R cur(1);   // K_0
    for (const R& ci : c) {
        R next = kind == ContKind::K ? R(ci * cur - prev) : R(ci * cur + prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

template <class R>
R continuant(const std::vector<R>& c, ContKind kind = ContKind::K) {
    return continuant(std::span<const R>(c), kind);
}

template <class R>
struct Mat2 {
    R m11{0}, m12{0}, m21{0}, m22{0};

    static Mat2 identity() { return {R(1), R(0), R(0), R(1)}; }
    R det() const { return R(m11 * m22 - m12 * m21); }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {R(x.m11 * y.m11 + x.m12 * y.m21), R(x.m11 * y.m12 + x.m12 * y.m22),
                R(x.m21 * y.m11 + x.m22 * y.m21), R(x.m21 * y.m12 + x.m22 * y.m22)};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.m11 == y.m11 && x.m12 == y.m12 && x.m21 == y.m21 && x.m22 == y.m22;
    }
};

/// Product of the 2x2 factors of Prop. KN; entries are the four sub-continuants.
template <class R>
Mat2<R> mobius_product(std::span<const R> c, MobiusKind kind = MobiusKind::M) {
    Mat2<R> acc = Mat2<R>::identity();
    R off = kind == MobiusKind::M ? R(-1) : R(1);
    for (const R& ci : c) {
        Mat2<R> f{ci, off, R(1), R(0)};
        acc = acc * f;
    }
    return acc;
}

/// Degree-1 polynomial c1 * x + c0 over the coefficient ring.
template <class R>
struct LinPoly {
    R c1{0};
    R c0{0};
    R eval(const R& x) const { return R(c1 * x + c0); }
    friend bool operator==(const LinPoly&, const LinPoly&) = default;
};

template <class R>
struct QpwPolys {
    LinPoly<R> q;  // x K_n(c) - 2 K_{n-1}(c_1..c_{n-1})
    LinPoly<R> p;  // x K_n(c) - K_{n-1}(c_1..c_{n-1}) - K_{n-1}(c_2..c_n)
    LinPoly<R> w;  // x K_n(c) - K_{n-1}(c_1..c_{n-1}) + K_{n-1}(c_2..c_n)
};

template <class R>
QpwPolys<R> qpw_polys(std::span<const R> c) {
    R kn = continuant(c);
    R k_prefix = c.empty() ? R(0) : continuant(c.first(c.size() - 1));
    R k_suffix = c.empty() ? R(0) : continuant(c.subspan(1));
    QpwPolys<R> out;
    out.q = {kn, R(R(-2) * k_prefix)};
    out.p = {kn, R(R(0) - k_prefix - k_suffix)};
    out.w = {kn, R(R(0) - k_prefix + k_suffix)};
    return out;
}

} // namespace relnum
