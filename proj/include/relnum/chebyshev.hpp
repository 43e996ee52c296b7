#pragma once

#include <span>

#include "relnum/intpoly.hpp"
#include "relnum/intseq.hpp"

namespace relnum {

// n-Chebyshev polynomials: g_{j+1}(t) = n_j t g_j(t) - g_{j-1}(t), with the
// s-family fixed by s_0 = 0, s_1 = 1 (and s_{-1} = -1).

/// s^n_{k+1}(t) for k = n.size().
IntPoly s_poly(std::span<const Int> n);

/// (s^n_{k+1}, s^n_k) from one pass of the recursion.
std::pair<IntPoly, IntPoly> s_poly_pair(std::span<const Int> n);

struct VTPolys {
    IntPoly v;       // s_{k+1} - s^{sigma}_k        (third kind)
    IntPoly T;       // s_{k+1} - s_{k-1}            (first kind)
    IntPoly Ttilde;  // s_{k+1} - s^{sigma}_{k-1}
    IntPoly That;    // s_{k+1} + s^{sigma}_{k-1}
};

/// Requires n nonempty.
VTPolys vTtt_polys(std::span<const Int> n);

/// Element a + b*u of the ring Base[u]/(u^2 + lambda).
struct AlgElem {
    QuadNum a;
    QuadNum b;

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    friend bool operator==(const AlgElem& x, const AlgElem& y) { return x.a == y.a && x.b == y.b; }
};

AlgElem alg_add(const AlgElem& x, const AlgElem& y);
AlgElem alg_sub(const AlgElem& x, const AlgElem& y);
AlgElem alg_neg(const AlgElem& x);
AlgElem alg_mul(const AlgElem& x, const AlgElem& y, const QuadNum& lambda);
/// (a + b u) * u = -lambda b + a u
AlgElem alg_mul_u(const AlgElem& x, const QuadNum& lambda);
AlgElem alg_scale(const QuadNum& k, const AlgElem& x);

/// Exact s^n_{k+1}(u) in Base[u]/(u^2 + lambda).
AlgElem eval_s_at_u(std::span<const Int> n, const QuadNum& lambda);
/// (s^n_{k+1}(u), s^n_k(u)); the pair is never (0, 0).
std::pair<AlgElem, AlgElem> eval_s_pair_at_u(std::span<const Int> n, const QuadNum& lambda);

/// p(u) by Horner in Base[u]/(u^2 + lambda).
AlgElem eval_poly_at_u(const IntPoly& p, const QuadNum& lambda);

std::string to_string(const AlgElem& x);

/// For a parity-pure integer polynomial p, the integer polynomial q with
/// p(i t) = i^parity q(t); throws on parity mismatch.
IntPoly i_transform(const IntPoly& p, int parity);

/// 2 s^n_{k+1}(t) = T^{(n_1..n_{k-1}, 2 n_k)}_k(t).
bool ts_identity_check(std::span<const Int> n);

/// Closed forms for the alternating sequence (1,-1,1,-1,...) against the
/// all-ones classical family, plus the Jang-Kim polynomial bridge.
struct ClassicalFactorReport {
    int k = 0;
    bool s_even_transform_ok = false;   // s^alt_{2k} vs i-transform of all-ones s_{2k}
    bool s_odd_transform_ok = false;    // s^alt_{2k+1} vs all-ones s_{2k+1}(it)
    bool s_even_product_ok = false;     // s^alt_{2k}(t) = t * P(-t^2), P from all-ones
    bool s_odd_product_ok = false;      // s^alt_{2k+1}(t) = Q(-t^2), Q from all-ones
    bool jang_kim_ok = false;           // p_k(-t^2) = T^alt_{2k+1}(t)/t
    bool all_ok() const {
        return s_even_transform_ok && s_odd_transform_ok && s_even_product_ok &&
               s_odd_product_ok && jang_kim_ok;
    }
};

ClassicalFactorReport classical_factor_check(int k);

} // namespace relnum
