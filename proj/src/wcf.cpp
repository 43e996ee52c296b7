#include "relnum/wcf.hpp"

namespace relnum {

ProjValue wcf_eval(std::span<const ExtInt> n, const WcfContext& ctx) {
    ProjValue acc = ProjValue::finite(QuadNum(0));
    for (size_t i = n.size(); i-- > 0;) acc = proj_inv_add(ctx.inv_lambda, n[i], acc);
    return acc;
}

ProjValue wcf_eval(std::span<const Int> n, const WcfContext& ctx) {
    ProjValue acc = ProjValue::finite(QuadNum(0));
    for (size_t i = n.size(); i-- > 0;) acc = proj_inv_add(ctx.inv_lambda, ExtInt(n[i]), acc);
    return acc;
}

namespace {

// value == num/den projectively, with den possibly a zero divisor: compare cross-multiplied.
bool matches_ratio(const ProjValue& value, const AlgElem& num, const AlgElem& den) {
    if (den.is_zero()) return value.inf;
    if (value.inf) return false;
    // value is in the base field: check value * den - num = 0 in Base[u]/(u^2+lambda)
    AlgElem lhs = alg_scale(value.v, den);
    return alg_sub(lhs, num).is_zero();
}

} // namespace

bool wcf_ratio_check(std::span<const Int> n, const WcfContext& ctx) {
    if (!all_nonzero(n)) throw Error("wcf_ratio_check: zero entry");
    auto [sk1, sk] = eval_s_pair_at_u(n, ctx.lambda);
    AlgElem sg_k = eval_s_at_u(n.subspan(1), ctx.lambda);
    AlgElem u_sk1 = alg_mul_u(sk1, ctx.lambda);

    ProjValue forward = wcf_eval(n, ctx);
    if (!matches_ratio(forward, alg_neg(sg_k), u_sk1)) return false;

    IntSeq rev = reversed(n);
    ProjValue backward = wcf_eval(std::span<const Int>(rev), ctx);
    return matches_ratio(backward, alg_neg(sk), u_sk1);
}

QuadNum singular_point(std::span<const Int> nL, std::span<const ExtInt> nR, const WcfContext& ctx) {
    IntSeq left_rev = reversed(nL);
    ProjValue a = wcf_eval(std::span<const Int>(left_rev), ctx);
    ProjValue b = wcf_eval(nR, ctx);
    if (a.inf || b.inf) throw InfiniteComponent();
    return -(a.v + b.v);
}

ProjValue d_value(std::span<const Int> nL, const WcfContext& ctx) {
    if (nL.empty()) return ProjValue::infinity();
    IntSeq rev = reversed(nL);  // (n_{i-1}, ..., n_1)
    ProjValue full = wcf_eval(std::span<const Int>(rev), ctx);
    ProjValue drop = wcf_eval(std::span<const Int>(rev).first(rev.size() - 1), ctx);
    if (full.inf || drop.inf) throw InfiniteComponent();
    return ProjValue::finite(full.v - drop.v);
}

bool root_condition_check(std::span<const Int> n, size_t i, const WcfContext& ctx) {
    if (i < 1 || i > n.size()) throw Error("root_condition_check: index out of range");
    IntSeq left_rev = reversed(n.first(i - 1));     // (n_{i-1}, ..., n_1)
    std::span<const Int> right = n.subspan(i);      // (n_{i+1}, ..., n_k)
    ProjValue a = wcf_eval(std::span<const Int>(left_rev), ctx);
    ProjValue b = wcf_eval(right, ctx);
    if (a.inf && b.inf) return true;
    if (a.inf || b.inf) return false;
    QuadNum target = -(a.v + b.v);
    return QuadNum(Rational(n[i - 1])) == target;
}

} // namespace relnum
