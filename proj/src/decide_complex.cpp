#include <algorithm>
#include <cassert>

#include "num_ops.hpp"
#include "relnum/decide.hpp"

// Exhaustive search for complex lambda = a + b sqrt(d), d < 0.  Per level k a
// DFS fixes the prefix n_L and bounds the singular point x_inf inside the disk
// |x_inf + [reverse(n_L)]| <= M_{k-i}; the candidate window for n_i follows the
// geometry of the unique |[n_L, x, n_R]| maximum over the real x-line, shifted
// by [0, Delta]/(2 Re D) when Re D != 0.  Square roots enter only through
// outward-rounded rational enclosures, so membership tests stay exact;
// coarsening eps can only widen the window.

namespace relnum {

namespace {

struct SearchStopped {};
struct WitnessHit {
    IntSeq seq;
};

struct Interval {
    Rational lo, hi;
};

class ComplexEngine {
  public:
    ComplexEngine(const QuadNum& lambda, const SearchLimits& lim)
        : lambda_(lambda), inv_(QuadNum(1) / lambda), absd_(-lambda.d), lim_(lim), stop_(lim) {
        Int denom = Int(1) << lim.eps_bits;
        eps_ = make_rational(1, denom);
        auto enc = rational_sqrt_enclosure(Rational(absd_), eps_);
        sqrtd_lo_ = enc.first;
        sqrtd_hi_ = enc.second;
        M_sq_.push_back(Rational(0));
        U_.push_back(Rational(0));
    }

    DecisionReport run() {
        auto t0 = std::chrono::steady_clock::now();
        DecisionReport rep;
        rep.lambda = lambda_;
        rep.k_max_used = lim_.k_max;
        for (int k = 1; k <= lim_.k_max; ++k) {
            best_sq_ = Rational(-1);
            best_att_.clear();
            path_.clear();
            try {
                State root;
                root.R = QuadNum(0);
                root.Rp = QuadNum(0);
                root.b = QuadNum(0);
                root.d = QuadNum(1);
                root.bp = QuadNum(1);
                root.dp = QuadNum(0);
                descend(1, k, root);
            } catch (WitnessHit& hit) {
                rep.verdict = Verdict::relation_number;
                rep.mindeg_lo = rep.mindeg_hi = static_cast<int>(hit.seq.size());
                rep.verification = verify_witness(lambda_, hit.seq);
                if (!rep.verification.all_ok())
                    throw Error("internal: complex witness fails verification");
                rep.witness = std::move(hit.seq);
                rep.ladder.hit_infinity = true;
                rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0).count();
                return rep;
            } catch (const SearchStopped&) {
                rep.verdict = Verdict::unknown;
                rep.mindeg_lo = k;  // levels below k are certified finite
                rep.mindeg_hi = -1;
                rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                                     std::chrono::steady_clock::now() - t0).count();
                return rep;
            }
            if (best_sq_ < M_sq_.back())
                throw Error("internal: complex ladder decreased");
            M_sq_.push_back(best_sq_);
            U_.push_back(upper_bound_sqrt(best_sq_));
            MkLevel lv;
            lv.k = k;
            lv.abs_sq = best_sq_;
            lv.upper = U_.back();
            lv.attained = best_att_;
            rep.ladder.levels.push_back(std::move(lv));
        }
        rep.verdict = Verdict::unknown;
        rep.mindeg_lo = lim_.k_max + 1;
        rep.mindeg_hi = -1;
        rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0).count();
        return rep;
    }

  private:
    struct State {
        QuadNum R;               // [n_{i-1}, ..., n_1]
        QuadNum Rp;              // [n_{i-1}, ..., n_2]
        QuadNum b, d, bp, dp;    // forward-value convergents
    };

    void check_stop() {
        if (stop_.stop_requested()) throw SearchStopped{};
    }

    // Interval containing x * sqrt(|d|)
    Interval times_sqrtd(const Rational& x) const {
        if (sgn(x) >= 0) return {x * sqrtd_lo_, x * sqrtd_hi_};
        return {x * sqrtd_hi_, x * sqrtd_lo_};
    }

    static void square_interval(const Interval& w, Rational& lo, Rational& hi) {
        Rational l2 = w.lo * w.lo, h2 = w.hi * w.hi;
        if (sgn(w.lo) >= 0) { lo = l2; hi = h2; }
        else if (sgn(w.hi) <= 0) { lo = h2; hi = l2; }
        else { lo = 0; hi = std::max(l2, h2); }
    }

    /// Upper bound for delta(t) = |D||D + t i| - <D, D + t i> at rational t.
    Rational delta_upper(const QuadNum& D, const Rational& t) const {
        if (t == 0) return Rational(0);
        Rational A = abs_sq(D);
        Rational absD_hi = rational_sqrt_enclosure(A, eps_).second;
        Interval imD = times_sqrtd(D.b);
        Interval w{imD.lo + t, imD.hi + t};
        Rational wsq_lo, wsq_hi;
        square_interval(w, wsq_lo, wsq_hi);
        Rational B_hi = D.a * D.a + wsq_hi;
        Rational absDt_hi = rational_sqrt_enclosure(B_hi, eps_).second;
        Rational inner_lo = A + std::min(t * imD.lo, t * imD.hi);
        Rational up = absD_hi * absDt_hi - inner_lo;
        return up < 0 ? Rational(0) : up;
    }

    Rational upper_bound_sqrt(const Rational& sq) const {
        Int denom = Int(1) << 20;
        return rational_sqrt_enclosure(sq, make_rational(1, denom)).second;
    }

    void update_best(const Rational& sq, ExtSeq att) {
        if (sq > best_sq_) {
            best_sq_ = sq;
            best_att_ = std::move(att);
        }
    }

    void descend(int i, int k, const State& st) {
        check_stop();
        // n_i = infinity: [n_L, inf, anything] = [n_L]; one update covers the branch.
        if (i >= 2) {
            QuadNum v = st.b / st.d;
            ExtSeq att = to_ext(path_);
            while (att.size() < static_cast<size_t>(k)) att.push_back(ext_inf());
            update_best(abs_sq(v), std::move(att));
        }

        QuadNum c = -st.R;          // center of the x_inf disk
        const Rational& r = U_[k - i];

        bool d_is_inf = (i == 1);
        QuadNum D;
        if (!d_is_inf) {
            D = st.R - st.Rp;
            // D = 0: [n_L, x, n_R] = [n_L] for every x and tail; the infinity
            // branch above already accounts for the whole subtree.
            if (D.is_zero()) return;
        }

        Interval window;
        if (d_is_inf || D.a == 0) {
            window = {c.a - r - 2, c.a + r + 2};
        } else {
            Interval imc = times_sqrtd(c.b);
            Rational tlo = 2 * imc.lo - 2 * r;
            Rational thi = 2 * imc.hi + 2 * r;
            Rational delta = std::max(delta_upper(D, tlo), delta_upper(D, thi));
            Rational q = delta / (2 * D.a);
            Rational shift_lo(0), shift_hi(0);
            if (sgn(D.a) > 0) shift_lo = -q;
            else shift_hi = -q;
            window = {c.a - r + shift_lo - 2, c.a + r + shift_hi + 2};
        }

        Int lo = ceil_int(window.lo), hi = floor_int(window.hi);
        detail::visit_near_center<Rational>(c.a, lo, hi, [&](const Int& x) {
            QuadNum qx{Rational(x)};
            QuadNum s = qx + st.R;
            if (s.is_zero()) {  // [x, n_{i-1}, ..., n_1] = infinity: witness
                IntSeq w = path_;
                w.push_back(x);
                throw WitnessHit{std::move(w)};
            }
            State nx;
            nx.R = inv_ / s;
            if (i == 1) {
                nx.Rp = QuadNum(0);
            } else {
                QuadNum sp = qx + st.Rp;
                if (sp.is_zero())
                    throw Error("internal: shorter witness surfaced through D-prefix");
                nx.Rp = inv_ / sp;
            }
            nx.b = qx * st.b + inv_ * st.bp;
            nx.d = qx * st.d + inv_ * st.dp;
            nx.bp = st.b;
            nx.dp = st.d;
            if (i == k) {
                ExtSeq att = to_ext(path_);
                att.emplace_back(x);
                update_best(abs_sq(nx.b / nx.d), std::move(att));
            } else {
                path_.push_back(x);
                descend(i + 1, k, nx);
                path_.pop_back();
            }
            return false;
        });
    }

    QuadNum lambda_;
    QuadNum inv_;
    long absd_;
    SearchLimits lim_;
    Stopper stop_;
    Rational eps_;
    Rational sqrtd_lo_, sqrtd_hi_;
    std::vector<Rational> M_sq_;  // exact M_j^2
    std::vector<Rational> U_;     // rational upper bounds U_j >= M_j
    Rational best_sq_;
    ExtSeq best_att_;
    IntSeq path_;
};

} // namespace

DecisionReport exhaustive_decide_complex(const QuadNum& lambda, const SearchLimits& lim) {
    if (lambda.is_zero()) throw ZeroLambda();
    if (lambda.d >= 0 || lambda.b == 0) throw NotComplexField();
    return ComplexEngine(lambda, lim).run();
}

} // namespace relnum
