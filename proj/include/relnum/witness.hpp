#pragma once

#include <span>
#include <string>
#include <vector>

#include "relnum/chebyshev.hpp"
#include "relnum/continuant.hpp"
#include "relnum/intseq.hpp"

namespace relnum {

using WordMatrix = Mat2<QuadNum>;

enum class WordStart { x_first, y_first };

/// Exact product X^{n_1} Y^{n_2} X^{n_3} ... (or Y-first), any length, over the
/// base field of lambda; X^n = [[1,n],[0,1]], Y^n = [[1,0],[n lambda,1]].
WordMatrix word_matrix(std::span<const Int> n, const QuadNum& lambda, WordStart start = WordStart::x_first);

WordMatrix word_inverse(const WordMatrix& w);  // det = 1 inverse

/// Theorem W-eq: the direct product of an even-length word equals the
/// Chebyshev-entry matrix (1/u and u factors resolved in Base[u]/(u^2+lambda)).
bool weq_check(std::span<const Int> n, const QuadNum& lambda);

/// Explicit relation built from a witness: exponents of the lower-triangular
/// word W, the commutator [W y W^-1, y] as a string, and exact verification.
struct RelationWord {
    IntSeq word_exponents;      // even length; W = x^{e1} y^{e2} ... y^{e_2m}
    std::string word;           // e.g. "x^-13 y^1 x^1 y^-13 x^1 y^1"
    std::string commutator;     // "[w y w^-1, y]" with w spelled out
    bool identity_ok = false;   // commutator evaluates to Id, checked syllable by syllable
};

/// Requires eval_s_at_u(n, lambda) = 0.  Even-length witnesses are doubled to
/// (n, 1, n) first; a final exponent 1 pads the word to even syllable count.
/// Throws NotAWitness if W is not lower-triangular.
RelationWord relation_word(std::span<const Int> n, const QuadNum& lambda);

struct TLemmaReport {
    bool ttilde_zero = false;
    bool that_zero = false;
    bool ttilde_matrix_match = false;  // odd length: W* == W^-1
    bool that_matrix_match = false;    // odd: W* == W(-n)^-1; even: W == W(-n)^-1
    bool biconditionals_ok = false;
};

TLemmaReport t_lemma_check(std::span<const Int> n, const QuadNum& lambda);

enum class FamilyKind { one_step, two_step_i, two_step_ii, two_step_iii, two_step_zerosum, two_step_cor, three_step };

struct FamilyWitness {
    Rational lambda;
    IntSeq seq;
    FamilyKind kind;
    std::vector<Int> params;
};

/// Closed-form rational relation-number families; the returned witness is
/// sign-corrected and verified before return.  Throws ConditionViolated when a
/// side condition fails.  Parameter counts: one_step (a,b,c); two_step_i (r,s,t);
/// two_step_ii (r,s,t,w) with w | rs; two_step_iii (r,s,t,v,w) with vw | rst and
/// rv+tv+tw = 0; two_step_zerosum (r,s,t,v) with r+v != 0; two_step_cor (r,s,t);
/// three_step (r,s,t,v,w) with rst = vw and r^2 s + w^2 + rst = (r+t)(v+w).
FamilyWitness family_generate(FamilyKind kind, std::span<const Int> params);

std::string family_kind_name(FamilyKind kind);

struct FamilySweepResult {
    int generated = 0;
    int lambda_in_range = 0;  // all produced lambda must lie strictly in (-4, 4)
    std::vector<FamilyWitness> witnesses;
    std::vector<std::string> failures;  // descriptions of generator/verification failures
    bool all_ok() const { return failures.empty() && lambda_in_range == generated; }
};

/// Sweeps every valid parameter combination: one_step over |a|,|b|,|c| <= abc_bound,
/// the two/three-step kinds over |r|,|s|,|t|,|v|,|w| <= rstvw_bound.  Side-condition
/// violations are skipped; every generated witness is kept for further checks.
FamilySweepResult family_sweep(long abc_bound, long rstvw_bound);

/// Cor. 3rd-4th: if v^n_k(u) = 0 or v^n_k(-u) = 0, confirms the explicit longer
/// witness (reverse(n), n) has s = 0; vacuously true when neither vanishes.
bool third_fourth_kind_check(std::span<const Int> n, const QuadNum& lambda);

} // namespace relnum
