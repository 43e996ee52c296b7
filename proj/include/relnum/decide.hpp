#pragma once

#include <atomic>
#include <chrono>
#include <optional>
#include <span>

#include "relnum/wcf.hpp"
#include "relnum/witness.hpp"

namespace relnum {

enum class Verdict { relation_number, free_by_region, unknown };
std::string verdict_name(Verdict v);

struct MkLevel {
    int k = 0;
    QuadNum value;     // exact M_k for real lambda; for complex, a witness to abs_sq
    Rational abs_sq;   // exact M_k^2
    Rational upper;    // rational upper bound >= M_k (drives complex range bounds)
    ExtSeq attained;   // attaining sequence; may contain inf entries for complex lambda
};

struct MkLadder {
    std::vector<MkLevel> levels;
    bool hit_infinity = false;  // the next level is infinite (witness found)
};

struct SearchLimits {
    int k_max = 30;
    int eps_bits = 30;  // enclosure precision 2^-eps_bits for complex square roots
    int threads = 1;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::atomic<bool>* cancel = nullptr;
};

/// Cooperative stop checks, sampled every few hundred nodes inside the searches.
struct Stopper {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::atomic<bool>* cancel = nullptr;
    mutable unsigned tick = 0;

    explicit Stopper(const SearchLimits& lim) : deadline(lim.deadline), cancel(lim.cancel) {}
    bool stop_requested() const {
        if ((++tick & 0xff) != 0) return false;
        if (cancel && cancel->load(std::memory_order_relaxed)) return true;
        return deadline && std::chrono::steady_clock::now() >= *deadline;
    }
};

struct VerifyReport {
    bool s_zero = false;           // eval_s_at_u(n, lambda) = 0
    bool wcf_infinite = false;     // [n] = Infinity
    bool root_conditions = false;  // root_condition_check for every split index
    bool word_identity = false;    // relation word commutator evaluates to Id
    bool all_ok() const { return s_zero && wcf_infinite && root_conditions && word_identity; }
};

struct DecisionReport {
    QuadNum lambda;
    Verdict verdict = Verdict::unknown;
    std::optional<IntSeq> witness;
    int mindeg_lo = 1;   // certified lower bound on the minimal u-degree
    int mindeg_hi = -1;  // -1 encodes infinity / not established
    MkLadder ladder;
    double elapsed_ms = 0;
    int k_max_used = 0;
    VerifyReport verification;
};

enum class FreeStatus { free, undetermined };

/// Exact certified free tests: Brenner |lambda| >= 4, Chang-Jennings-Ree three
/// discs, both Lyndon-Ullman conditions, and the (sign-symmetrized) Ignatov
/// conditions.  Only returns `free` on a strict exact certificate.
FreeStatus free_region_precheck(const QuadNum& lambda);

/// Largest n with |lambda| >= 4 cos^2(pi/(n+1)), found by iterating the
/// alternating continued-fraction values; capped (lambda with |lambda| >= 4
/// would iterate forever).  Throws NotRealField for complex lambda.
int mindeg_lower_bound(const QuadNum& lambda, int cap = 64);

/// Algorithm of Theorem C for real lambda != 0.  Negative lambda is searched as
/// |lambda| and the witness flipped back (alternate sign flip).
DecisionReport exhaustive_decide_real(const QuadNum& lambda, const SearchLimits& lim = {});

/// Exact M_1..M_K ladder for real lambda > 0; stops early when a witness makes
/// the next level infinite.
MkLadder mk_table(const QuadNum& lambda, int up_to_k, const SearchLimits& lim = {});

/// Exhaustive search for complex lambda (D < 0, b != 0).
DecisionReport exhaustive_decide_complex(const QuadNum& lambda, const SearchLimits& lim = {});

struct GreedyParams {
    int N = 5;          // windowed depth
    Rational W = 5;     // window radius; default q for lambda = p/q
    int k_max = 30;

    static GreedyParams defaults_for(const QuadNum& lambda);
};

/// Algorithm 2: windowed DFS to depth N, then forced rounding out to k_max.
/// Returns the first sequence whose next center is a nonzero integer; no
/// minimality claim.
std::optional<IntSeq> greedy_find(const QuadNum& lambda, const GreedyParams& params,
                                  const SearchLimits& lim = {});

/// All witness-side checks (zero entries reduced away first).
VerifyReport verify_witness(const QuadNum& lambda, std::span<const Int> n);

/// Precheck, then the exhaustive engine matching the field of lambda.
DecisionReport decide(const QuadNum& lambda, const SearchLimits& lim = {});

} // namespace relnum
