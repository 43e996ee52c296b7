#include <cassert>
#include <mutex>
#include <thread>

#include "num_ops.hpp"
#include "relnum/decide.hpp"

// Exhaustive decision for real lambda: an alternating-prefix phase while
// M_k <= 1, then one depth-first search per level k with entry n_i confined to
// the open window of radius M_{k-i} + 2 around -[n_{i-1},...,n_1].  At depth k
// an integer singular point is a witness; otherwise its two flanking integers
// update M_k.

namespace relnum {

namespace {

struct SearchStopped {};
struct WitnessHit {
    IntSeq seq;
};

IntSeq alternating_seq(int len) {
    IntSeq n(len);
    for (int i = 0; i < len; ++i) n[i] = (i % 2 == 0) ? 1 : -1;
    return n;
}

template <class Num>
struct LevelBest {
    Num max_abs{0};
    IntSeq attained;
};

template <class Num>
class LevelSearch {
  public:
    using O = detail::Ops<Num>;

    LevelSearch(int k, const std::vector<Num>& M, const Num& inv_lambda, const SearchLimits& lim,
                const std::atomic<bool>* level_cancel)
        : k_(k), M_(M), inv_(inv_lambda), level_cancel_(level_cancel), stop_(lim) {
        assert(k_ >= 2);
    }

    void run_first(const Int& n1) {
        path_.assign(1, n1);
        State st;
        st.R = inv_ / Num(n1);
        st.b = inv_;      // b_1 = n_1 b_0 + (1/lambda) b_{-1}, with (b_0, b_{-1}) = (0, 1)
        st.d = Num(n1);   // d_1 = n_1 d_0 + (1/lambda) d_{-1}, with (d_0, d_{-1}) = (1, 0)
        st.bp = Num(0);
        st.dp = Num(1);
        descend(2, st);
    }

    LevelBest<Num>& best() { return best_; }

  private:
    struct State {
        Num R;          // [n_{i-1}, ..., n_1]
        Num b, d;       // [n_1, ..., n_{i-1}] = b/d
        Num bp, dp;     // convergents one step back
    };

    void check_stop() {
        if (level_cancel_ && level_cancel_->load(std::memory_order_relaxed))
            throw WitnessHit{{}};  // sibling thread already has a witness
        if (stop_.stop_requested()) throw SearchStopped{};
    }

    void descend(int i, const State& st) {
        check_stop();
        Num c = Num(0) - st.R;
        if (i == k_) {
            if (O::is_int(c) && O::sign(c) != 0) {
                IntSeq w = path_;
                w.push_back(O::to_int(c));
                throw WitnessHit{std::move(w)};
            }
            Int l = O::floor(c), r = l + 1;
            if (l == 0 || r == 0) { l = -1; r = 1; }
            leaf_value(l, st);
            leaf_value(r, st);
            return;
        }
        Num rho = M_[k_ - i] + Num(2);
        Int lo = O::floor(c - rho) + 1;
        Int hi = O::ceil(c + rho) - 1;
        detail::visit_near_center(c, lo, hi, [&](const Int& x) {
            Num s = Num(x) + st.R;
            if (O::sign(s) == 0) {
                // an integer singular point above the last level would be a
                // shorter witness, impossible once levels < k are certified
                IntSeq w = path_;
                w.push_back(x);
                throw WitnessHit{std::move(w)};
            }
            State nx;
            nx.R = inv_ / s;
            nx.b = Num(Num(x) * st.b + inv_ * st.bp);
            nx.d = Num(Num(x) * st.d + inv_ * st.dp);
            nx.bp = st.b;
            nx.dp = st.d;
            path_.push_back(x);
            descend(i + 1, nx);
            path_.pop_back();
            return false;
        });
    }

    void leaf_value(const Int& x, const State& st) {
        Num num = Num(Num(x) * st.b + inv_ * st.bp);
        Num den = Num(Num(x) * st.d + inv_ * st.dp);
        Num a = O::abs_val(num / den);  // den = 0 only at the singular point, excluded
        if (O::less(best_.max_abs, a)) {
            best_.max_abs = a;
            best_.attained = path_;
            best_.attained.push_back(x);
        }
    }

    int k_;
    const std::vector<Num>& M_;
    Num inv_;
    const std::atomic<bool>* level_cancel_;
    Stopper stop_;
    IntSeq path_;
    LevelBest<Num> best_;
};

template <class Num>
struct LevelOutcome {
    LevelBest<Num> best;
    std::optional<IntSeq> witness;
    bool stopped = false;
};

template <class Num>
LevelOutcome<Num> run_level(int k, const std::vector<Num>& M, const Num& inv,
                            const SearchLimits& lim) {
    using O = detail::Ops<Num>;
    Num rho = M[k - 1] + Num(2);
    std::vector<Int> firsts;
    detail::visit_near_center(Num(0), O::floor(Num(0) - rho) + 1, O::ceil(rho) - 1,
                              [&](const Int& x) {
                                  firsts.push_back(x);
                                  return false;
                              });

    LevelOutcome<Num> out;
    int threads = std::max(1, lim.threads);
    if (threads <= 1 || firsts.size() < 2) {
        LevelSearch<Num> search(k, M, inv, lim, nullptr);
        try {
            for (const Int& n1 : firsts) search.run_first(n1);
            out.best = std::move(search.best());
        } catch (WitnessHit& hit) {
            out.witness = std::move(hit.seq);
        } catch (const SearchStopped&) {
            out.stopped = true;
        }
        return out;
    }

    // Top-level branches in parallel; M_k merges monotonically, first witness wins.
    std::atomic<size_t> next{0};
    std::atomic<bool> level_cancel{false};
    std::atomic<bool> stopped{false};
    std::mutex merge_mu;
    std::vector<std::thread> pool;
    size_t nworkers = std::min<size_t>(threads, firsts.size());
    for (size_t w = 0; w < nworkers; ++w) {
        pool.emplace_back([&]() {
            LevelSearch<Num> search(k, M, inv, lim, &level_cancel);
            try {
                for (;;) {
                    size_t idx = next.fetch_add(1, std::memory_order_relaxed);
                    if (idx >= firsts.size()) break;
                    search.run_first(firsts[idx]);
                }
                std::lock_guard<std::mutex> g(merge_mu);
                LevelBest<Num>& local = search.best();
                if (O::less(out.best.max_abs, local.max_abs)) out.best = std::move(local);
            } catch (WitnessHit& hit) {
                if (!hit.seq.empty()) {
                    std::lock_guard<std::mutex> g(merge_mu);
                    if (!out.witness) out.witness = std::move(hit.seq);
                    level_cancel.store(true, std::memory_order_relaxed);
                }
            } catch (const SearchStopped&) {
                stopped.store(true, std::memory_order_relaxed);
                level_cancel.store(true, std::memory_order_relaxed);
            }
        });
    }
    for (auto& t : pool) t.join();
    out.stopped = stopped.load() && !out.witness;
    return out;
}

void fill_level_numeric(MkLevel& lv, const Rational& v) {
    lv.value = QuadNum(v);
    lv.abs_sq = v * v;
    lv.upper = v;
}

void fill_level_numeric(MkLevel& lv, const QuadNum& v) { lv.value = v; }

template <class Num>
struct EngineOutcome {
    MkLadder ladder;
    std::optional<IntSeq> witness;  // length = ladder.levels.size() + 1
    bool stopped = false;
};

/// Ladder levels 1..limit for lambda_pos > 0, stopping at a witness.
template <class Num>
EngineOutcome<Num> run_ladder(const Num& lambda_pos, int limit, const SearchLimits& lim) {
    using O = detail::Ops<Num>;
    EngineOutcome<Num> out;
    std::vector<Num> M;
    M.push_back(Num(0));
    Stopper stop(lim);

    auto record = [&](int k, const Num& value, IntSeq attained) {
        assert(O::sign(value) > 0);
        M.push_back(value);
        MkLevel lv;
        lv.k = k;
        fill_level_numeric(lv, value);
        lv.attained = to_ext(attained);
        out.ladder.levels.push_back(std::move(lv));
    };

    // Phase 1: while M_k <= 1 the single alternating value is the next maximum.
    Num inv = Num(1) / lambda_pos;
    Num f = inv;  // F_1 = [1]
    int k = 1;
    for (;;) {
        if (stop.stop_requested()) {
            out.stopped = true;
            return out;
        }
        record(k, f, alternating_seq(k));
        if (k == limit) return out;
        if (O::less(Num(1), f)) break;  // M_k > 1: exhaustive levels from here on
        if (f == Num(1)) {              // next alternating value is infinite
            out.witness = alternating_seq(k + 1);
            out.ladder.hit_infinity = true;
            return out;
        }
        f = inv / (Num(1) - f);
        ++k;
    }

    // Phase 2
    for (int kk = k + 1; kk <= limit; ++kk) {
        LevelOutcome<Num> lo = run_level(kk, M, inv, lim);
        if (lo.witness) {
            out.witness = std::move(lo.witness);
            out.ladder.hit_infinity = true;
            return out;
        }
        if (lo.stopped) {
            out.stopped = true;
            return out;
        }
        if (!O::less(M.back(), lo.best.max_abs))
            throw Error("ladder monotonicity violated: M_k <= M_{k-1}");
        record(kk, lo.best.max_abs, lo.best.attained);
    }
    return out;
}

ExtSeq flip_ext_alternate(const ExtSeq& e) {
    ExtSeq out = e;
    for (size_t i = 0; i < out.size(); i += 2)
        if (out[i]) out[i] = Int(-*out[i]);
    return out;
}

template <class Num>
DecisionReport assemble_real(const QuadNum& lambda, bool flipped, EngineOutcome<Num>& out,
                             const SearchLimits& lim,
                             std::chrono::steady_clock::time_point t0) {
    DecisionReport rep;
    rep.lambda = lambda;
    rep.k_max_used = lim.k_max;
    rep.ladder = std::move(out.ladder);
    if (flipped)
        for (MkLevel& lv : rep.ladder.levels) lv.attained = flip_ext_alternate(lv.attained);

    int certified = static_cast<int>(rep.ladder.levels.size());
    if (out.witness) {
        IntSeq w = std::move(*out.witness);
        if (flipped) w = flip_signs(w, FlipMode::alternate);
        rep.verdict = Verdict::relation_number;
        rep.mindeg_lo = rep.mindeg_hi = static_cast<int>(w.size());
        rep.verification = verify_witness(lambda, w);
        rep.witness = std::move(w);
        if (!rep.verification.all_ok()) throw Error("internal: found witness fails verification");
    } else {
        rep.verdict = Verdict::unknown;
        rep.mindeg_lo = std::max(certified + 1, mindeg_lower_bound(lambda));
        rep.mindeg_hi = -1;
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

} // namespace

DecisionReport exhaustive_decide_real(const QuadNum& lambda, const SearchLimits& lim) {
    if (lambda.is_zero()) throw ZeroLambda();
    if (lambda.d < 0) throw NotRealField();
    auto t0 = std::chrono::steady_clock::now();
    bool flipped = sign_real(lambda) < 0;
    QuadNum pos = flipped ? -lambda : lambda;
    if (pos.is_rational()) {
        EngineOutcome<Rational> out = run_ladder(pos.a, lim.k_max, lim);
        return assemble_real(lambda, flipped, out, lim, t0);
    }
    EngineOutcome<QuadNum> out = run_ladder(pos, lim.k_max, lim);
    return assemble_real(lambda, flipped, out, lim, t0);
}

MkLadder mk_table(const QuadNum& lambda, int up_to_k, const SearchLimits& lim) {
    if (lambda.is_zero()) throw ZeroLambda();
    if (lambda.d < 0) throw NotRealField();
    if (sign_real(lambda) <= 0) throw Error("mk_table requires real lambda > 0");
    if (up_to_k < 1) throw Error("mk_table requires up_to_k >= 1");
    if (lambda.is_rational()) return run_ladder(lambda.a, up_to_k, lim).ladder;
    return run_ladder(lambda, up_to_k, lim).ladder;
}

} // namespace relnum
