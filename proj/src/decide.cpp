#include "relnum/decide.hpp"

#include <cassert>

#include "num_ops.hpp"

namespace relnum {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::relation_number: return "relation_number";
        case Verdict::free_by_region: return "free_by_region";
        case Verdict::unknown: return "unknown";
    }
    return "?";
}

namespace {

// sign of r + q * sqrt(|d| of lambda's field), used by the complex-region tests
int sign_with_root(const Rational& r, const Rational& q, long absd) {
    return sign_plus_root(r, q, Int(absd));
}

bool free_complex(const QuadNum& l) {
    const Rational& x = l.a;
    const Rational& b = l.b;  // Im(lambda) = b sqrt(|d|)
    long ad = -l.d;
    Rational bb_d = b * b * Rational(ad);
    Rational a2 = abs_sq(l);  // x^2 + b^2 |d|

    // Brenner: |lambda| >= 4
    if (a2 >= 16) return true;

    // Chang-Jennings-Ree: outside the three open discs of radius 2 at 0, +-2
    Rational left = (x + 2) * (x + 2) + bb_d;
    Rational right = (x - 2) * (x - 2) + bb_d;
    if (a2 >= 4 && left >= 4 && right >= 4) return true;

    // Lyndon-Ullman hull: outside the closed convex hull of {|z|=2} and +-4.
    // Hull = disc u two caps; a cap is the triangle (+-1, +-sqrt 3), (+-4, 0).
    if (a2 >= 4) {
        Rational ab = abs(b);
        bool in_right_cap = x >= 1 && sign_with_root(x - 4, ab, 3 * ad) <= 0;
        bool in_left_cap = x <= -1 && sign_with_root(-x - 4, ab, 3 * ad) <= 0;
        if (!in_right_cap && !in_left_cap) return true;
    }

    // Lyndon-Ullman: |lambda +- i| >= 1 and |lambda +- 2| >= 2
    {
        Rational s = a2;  // x^2 + Im^2
        bool plus_i = sign_with_root(s, 2 * b, ad) >= 0;   // |l + i|^2 - 1 = s + 2 Im
        bool minus_i = sign_with_root(s, -2 * b, ad) >= 0;
        if (plus_i && minus_i && left >= 4 && right >= 4) return true;
    }

    // Ignatov, symmetrized in the sign of Re(lambda):
    //   |lambda - 2 sgn(Re)| > 1 and 2 <= |Re| < 5/2
    if (x != 0) {
        Rational ax = abs(x);
        Rational centered = (ax - 2) * (ax - 2) + bb_d;  // |lambda - 2 sgn(Re)|^2
        if (centered > 1 && ax >= 2 && ax < Rational(5, 2)) return true;
    }
    //   |lambda| > 2 and |Im| > 1
    if (a2 > 4 && bb_d > 1) return true;

    return false;
}

} // namespace

FreeStatus free_region_precheck(const QuadNum& lambda) {
    if (lambda.is_zero()) return FreeStatus::undetermined;
    if (lambda.d >= 0) {
        // real line: the certified region is |lambda| >= 4
        QuadNum mag = abs_real(lambda);
        return cmp_real(mag, QuadNum(4)) != Cmp::LT ? FreeStatus::free : FreeStatus::undetermined;
    }
    return free_complex(lambda) ? FreeStatus::free : FreeStatus::undetermined;
}

int mindeg_lower_bound(const QuadNum& lambda, int cap) {
    if (lambda.is_zero()) throw ZeroLambda();
    if (lambda.d < 0) throw NotRealField();
    QuadNum al = abs_real(lambda);
    QuadNum inv = QuadNum(1) / al;
    QuadNum f = inv;  // F_1 = [1]
    for (int j = 1; j < cap; ++j) {
        if (sign_real(f - QuadNum(1)) > 0) return j;   // F_j > 1
        if (f == QuadNum(1)) return j + 1;             // F_{j+1} = infinity
        f = inv / (QuadNum(1) - f);
    }
    return cap;
}

GreedyParams GreedyParams::defaults_for(const QuadNum& lambda) {
    GreedyParams p;
    if (lambda.is_rational()) p.W = Rational(lambda.a.get_den());
    return p;
}

namespace {

struct SearchStopped {};

template <class Num>
class GreedySearch {
  public:
    GreedySearch(const Num& lambda, const GreedyParams& params, const SearchLimits& lim)
        : inv_(Num(1) / lambda), n_(params.N), w_(detail::Ops<Num>::abs_val(Num(params.W))),
          k_max_(params.k_max), stop_(lim) {}

    std::optional<IntSeq> run() {
        try {
            if (descend(1, Num(0))) return path_;
        } catch (const SearchStopped&) {
        }
        return std::nullopt;
    }

  private:
    using O = detail::Ops<Num>;

    bool descend(int depth, const Num& r) {
        if (stop_.stop_requested()) throw SearchStopped{};
        if (depth > k_max_) return false;
        Num center = Num(0) - r;
        if (O::is_int(center) && O::sign(center) != 0) {  // exact Infinity hit
            path_.push_back(O::to_int(center));
            return true;
        }
        if (depth <= n_) {
            Int lo = O::ceil(center - w_);
            Int hi = O::floor(center + w_);
            return detail::visit_near_center(center, lo, hi, [&](const Int& x) {
                path_.push_back(x);
                if (descend(depth + 1, step(x, r))) return true;
                path_.pop_back();
                return false;
            });
        }
        Int x = O::round_away(center);
        if (x == 0) x = 1;
        path_.push_back(x);
        if (descend(depth + 1, step(x, r))) return true;
        path_.pop_back();
        return false;
    }

    Num step(const Int& x, const Num& r) const { return inv_ / (Num(x) + r); }

    Num inv_;
    int n_;
    Num w_;
    int k_max_;
    Stopper stop_;
    IntSeq path_;
};

} // namespace

std::optional<IntSeq> greedy_find(const QuadNum& lambda, const GreedyParams& params,
                                  const SearchLimits& lim) {
    if (lambda.is_zero()) throw ZeroLambda();
    if (lambda.d < 0) throw NotRealField();
    if (params.N < 1 || params.W <= 0 || params.k_max < params.N)
        throw Error("greedy_find: need N >= 1, W > 0, k_max >= N");
    std::optional<IntSeq> found;
    if (lambda.is_rational()) {
        found = GreedySearch<Rational>(lambda.a, params, lim).run();
    } else {
        found = GreedySearch<QuadNum>(lambda, params, lim).run();
    }
    if (found) assert(eval_s_at_u(*found, lambda).is_zero());
    return found;
}

VerifyReport verify_witness(const QuadNum& lambda, std::span<const Int> n) {
    if (lambda.is_zero()) throw ZeroLambda();
    VerifyReport rep;
    ReducedSeq red = reduce_zero_entries(n);
    if (red.zero_poly || red.seq.empty()) return rep;
    const IntSeq& m = red.seq;

    rep.s_zero = eval_s_at_u(m, lambda).is_zero();
    WcfContext ctx(lambda);
    rep.wcf_infinite = wcf_eval(std::span<const Int>(m), ctx).inf;
    rep.root_conditions = true;
    for (size_t i = 1; i <= m.size() && rep.root_conditions; ++i)
        rep.root_conditions = root_condition_check(m, i, ctx);
    try {
        rep.word_identity = relation_word(m, lambda).identity_ok;
    } catch (const NotAWitness&) {
        rep.word_identity = false;
    }
    return rep;
}

DecisionReport decide(const QuadNum& lambda, const SearchLimits& lim) {
    if (lambda.is_zero()) throw ZeroLambda();
    auto t0 = std::chrono::steady_clock::now();
    if (free_region_precheck(lambda) == FreeStatus::free) {
        DecisionReport rep;
        rep.lambda = lambda;
        rep.verdict = Verdict::free_by_region;
        rep.mindeg_lo = -1;  // minimal u-degree is infinite
        rep.mindeg_hi = -1;
        rep.k_max_used = lim.k_max;
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0).count();
        return rep;
    }
    if (lambda.d < 0) return exhaustive_decide_complex(lambda, lim);
    return exhaustive_decide_real(lambda, lim);
}

} // namespace relnum
