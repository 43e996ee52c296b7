#include "relnum/chebyshev.hpp"

#include <cassert>

namespace relnum {

IntPoly s_poly(std::span<const Int> n) { return s_poly_pair(n).first; }

std::pair<IntPoly, IntPoly> s_poly_pair(std::span<const Int> n) {
    IntPoly prev;        // s_0 = 0
    IntPoly cur(1);      // s_1 = 1
    for (const Int& ni : n) {
        IntPoly next = mul_nt(cur, ni) - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {cur, prev};
}

VTPolys vTtt_polys(std::span<const Int> n) {
    if (n.empty()) throw Error("vTtt_polys: empty sequence");
    auto [sk1, sk] = s_poly_pair(n);               // s_{k+1}, s_k
    auto [sgk, sgk1] = s_poly_pair(n.subspan(1));  // s^sigma_k, s^sigma_{k-1}
    IntPoly sk_1 = s_poly_pair(n.first(n.size() - 1)).second;  // s_{k-1}
    (void)sk;
    VTPolys out;
    out.v = sk1 - sgk;
    out.T = sk1 - sk_1;
    out.Ttilde = sk1 - sgk1;
    out.That = sk1 + sgk1;
    return out;
}

AlgElem alg_add(const AlgElem& x, const AlgElem& y) { return {x.a + y.a, x.b + y.b}; }
AlgElem alg_sub(const AlgElem& x, const AlgElem& y) { return {x.a - y.a, x.b - y.b}; }
AlgElem alg_neg(const AlgElem& x) { return {-x.a, -x.b}; }

AlgElem alg_mul(const AlgElem& x, const AlgElem& y, const QuadNum& lambda) {
    // (a1 + b1 u)(a2 + b2 u) = a1 a2 - lambda b1 b2 + (a1 b2 + a2 b1) u
    return {x.a * y.a - lambda * x.b * y.b, x.a * y.b + y.a * x.b};
}

AlgElem alg_mul_u(const AlgElem& x, const QuadNum& lambda) { return {-(lambda * x.b), x.a}; }

AlgElem alg_scale(const QuadNum& k, const AlgElem& x) { return {k * x.a, k * x.b}; }

std::pair<AlgElem, AlgElem> eval_s_pair_at_u(std::span<const Int> n, const QuadNum& lambda) {
    AlgElem prev{QuadNum(0), QuadNum(0)};  // s_0
    AlgElem cur{QuadNum(1), QuadNum(0)};   // s_1
    for (const Int& ni : n) {
        AlgElem tg = alg_mul_u(cur, lambda);
        AlgElem next = alg_sub(alg_scale(QuadNum(Rational(ni)), tg), prev);
        prev = std::move(cur);
        cur = std::move(next);
        assert(!(cur.is_zero() && prev.is_zero()) && "adjacent s-values cannot both vanish");
    }
    return {cur, prev};
}

AlgElem eval_s_at_u(std::span<const Int> n, const QuadNum& lambda) {
    return eval_s_pair_at_u(n, lambda).first;
}

AlgElem eval_poly_at_u(const IntPoly& p, const QuadNum& lambda) {
    AlgElem acc{QuadNum(0), QuadNum(0)};
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = alg_mul_u(acc, lambda);
        acc.a = acc.a + QuadNum(Rational(p.c[i]));
    }
    return acc;
}

std::string to_string(const AlgElem& x) {
    return "(" + to_string(x.a) + ") + (" + to_string(x.b) + ")*u";
}

IntPoly i_transform(const IntPoly& p, int parity) {
    IntPoly q = p;
    for (size_t j = 0; j < q.c.size(); ++j) {
        if (q.c[j] == 0) continue;
        if (static_cast<int>(j % 2) != parity) throw Error("i_transform: parity mismatch");
        // i^j = i^parity * (-1)^((j - parity)/2)
        if (((j - parity) / 2) % 2 == 1) q.c[j] = -q.c[j];
    }
    return q;
}

bool ts_identity_check(std::span<const Int> n) {
    if (n.empty()) throw Error("ts_identity_check: empty sequence");
    IntSeq doubled(n.begin(), n.end());
    doubled.back() *= 2;
    IntPoly T = vTtt_polys(doubled).T;
    IntPoly lhs = Int(2) * s_poly(n);
    return lhs == T;
}

namespace {

IntSeq alternating(int len) {
    IntSeq n(len);
    for (int i = 0; i < len; ++i) n[i] = (i % 2 == 0) ? 1 : -1;
    return n;
}

IntSeq ones(int len) { return IntSeq(len, Int(1)); }

// e(-t^2) for an x-form polynomial e.
IntPoly expand_at_neg_tsq(const IntPoly& e) {
    IntPoly r;
    r.c.assign(e.c.empty() ? 0 : 2 * e.c.size() - 1, Int(0));
    for (size_t j = 0; j < e.c.size(); ++j) r.c[2 * j] = (j % 2 ? -e.c[j] : e.c[j]);
    r.trim();
    return r;
}

} // namespace

ClassicalFactorReport classical_factor_check(int k) {
    if (k < 1) throw Error("classical_factor_check: k >= 1 required");
    ClassicalFactorReport rep;
    rep.k = k;

    IntSeq alt_even = alternating(2 * k - 1);   // defines s_{2k}
    IntSeq alt_odd = alternating(2 * k);        // defines s_{2k+1}
    IntSeq one_even = ones(2 * k - 1);
    IntSeq one_odd = ones(2 * k);

    IntPoly s_alt_even = s_poly(alt_even);
    IntPoly s_alt_odd = s_poly(alt_odd);
    IntPoly s_one_even = s_poly(one_even);
    IntPoly s_one_odd = s_poly(one_odd);

    // Lemma n-cheby-1 (iii) with n = all-ones, l = (1,-1,...): s^l_{2k}(t) = -i s^n_{2k}(i t).
    rep.s_even_transform_ok = (s_alt_even == -i_transform(s_one_even, 1));
    // (iv): s^l_{2k+1}(t) = s^n_{2k+1}(i t).
    rep.s_odd_transform_ok = (s_alt_odd == i_transform(s_one_odd, 0));

    // Product forms in x = -t^2, built from the all-ones factorizations.
    IntPoly P = even_part_in_x(div_t(s_one_even));           // prod (x - 4cos^2(i pi / 2k))
    rep.s_even_product_ok = (s_alt_even == IntPoly::t() * expand_at_neg_tsq(P));
    IntPoly Q = even_part_in_x(s_one_odd);                   // prod (x - 4cos^2(i pi / (2k+1)))
    rep.s_odd_product_ok = (s_alt_odd == expand_at_neg_tsq(Q));

    // Jang-Kim: p_k(-t^2) = T^alt_{2k+1}(t)/t with p_k the x-form of T^ones_{2k+1}/t.
    IntPoly T_alt = vTtt_polys(alternating(2 * k + 1)).T;
    IntPoly T_one = vTtt_polys(ones(2 * k + 1)).T;
    IntPoly pk = even_part_in_x(div_t(T_one));
    rep.jang_kim_ok = (div_t(T_alt) == expand_at_neg_tsq(pk));

    return rep;
}

} // namespace relnum
