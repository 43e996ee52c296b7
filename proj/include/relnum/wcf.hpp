#pragma once

#include <span>

#include "relnum/chebyshev.hpp"
#include "relnum/intseq.hpp"

namespace relnum {

/// Fixed weight 1/lambda for a run of continued-fraction evaluations.
struct WcfContext {
    QuadNum lambda;
    QuadNum inv_lambda;

    explicit WcfContext(QuadNum l) : lambda(std::move(l)) {
        if (lambda.is_zero()) throw ZeroLambda();
        inv_lambda = QuadNum(1) / lambda;
    }
};

/// [n_1, ..., n_k]: right-to-left fold of (1/lambda)/(n_i + .), [] = 0.
/// Entries may be infinity; [n_L, inf, n_R] = [n_L].  Throws NotWellDefined only
/// when an infinity entry meets an Infinity accumulator.
ProjValue wcf_eval(std::span<const ExtInt> n, const WcfContext& ctx);
ProjValue wcf_eval(std::span<const Int> n, const WcfContext& ctx);

/// Prop. wcf Cheby (i): [n] = -s^{sigma(n)}_k(u) / (u s^n_{k+1}(u)) and the
/// reversed form [n_k..n_1] = -s^n_k(u) / (u s^n_{k+1}(u)), both as projective
/// values (cross-multiplied, no ring division).
bool wcf_ratio_check(std::span<const Int> n, const WcfContext& ctx);

/// x_inf = -([reverse(nL)] + [nR]).  Throws InfiniteComponent if either side is Infinity.
QuadNum singular_point(std::span<const Int> nL, std::span<const ExtInt> nR, const WcfContext& ctx);

/// D = [n_{i-1},...,n_1] - [n_{i-1},...,n_2] for nL = (n_1..n_{i-1}); Infinity when nL is empty.
ProjValue d_value(std::span<const Int> nL, const WcfContext& ctx);

/// Lemma root of Cheby and nseq at split index i (1-based): s^n_{k+1}(u) = 0 iff
/// n_i = -([n_{i-1}..n_1] + [n_{i+1}..n_k]) or both components are Infinity.
bool root_condition_check(std::span<const Int> n, size_t i, const WcfContext& ctx);

} // namespace relnum
