#include "relnum/witness.hpp"

#include <cassert>
#include <sstream>

namespace relnum {

namespace {

WordMatrix x_power(const Int& n) {
    return {QuadNum(1), QuadNum(Rational(n)), QuadNum(0), QuadNum(1)};
}

WordMatrix y_power(const Int& n, const QuadNum& lambda) {
    return {QuadNum(1), QuadNum(0), QuadNum(Rational(n)) * lambda, QuadNum(1)};
}

} // namespace

WordMatrix word_matrix(std::span<const Int> n, const QuadNum& lambda, WordStart start) {
    if (lambda.is_zero()) throw ZeroLambda();
    WordMatrix acc = WordMatrix::identity();
    bool x_turn = start == WordStart::x_first;
    for (const Int& e : n) {
        acc = acc * (x_turn ? x_power(e) : y_power(e, lambda));
        x_turn = !x_turn;
    }
    return acc;
}

WordMatrix word_inverse(const WordMatrix& w) {
    assert(w.det() == QuadNum(1));
    return {w.m22, -w.m12, -w.m21, w.m11};
}

bool weq_check(std::span<const Int> n, const QuadNum& lambda) {
    if (n.size() % 2 != 0) throw Error("weq_check: even length required");
    if (lambda.is_zero()) throw ZeroLambda();
    size_t m = n.size() / 2;

    auto [s2m1, s2m] = eval_s_pair_at_u(n, lambda);            // s_{2m+1}, s_{2m}
    auto [sg2m, sg2m_1] = eval_s_pair_at_u(n.subspan(1), lambda);  // s^sigma_{2m}, s^sigma_{2m-1}
    // Parity pins each value to one coordinate of Base[u]/(u^2+lambda).
    if (!s2m1.b.is_zero() || !s2m.a.is_zero() || !sg2m.a.is_zero() || !sg2m_1.b.is_zero())
        return false;

    QuadNum sign(m % 2 == 1 ? 1 : -1);  // (-1)^{m-1}
    WordMatrix rhs{sign * (-s2m1.a), sign * s2m.b,          // (1/u) s_{2m}(u)
                   sign * (lambda * sg2m.b),                // -u s^sigma_{2m}(u)
                   sign * sg2m_1.a};
    return word_matrix(n, lambda) == rhs;
}

RelationWord relation_word(std::span<const Int> n, const QuadNum& lambda) {
    if (lambda.is_zero()) throw ZeroLambda();
    if (!eval_s_at_u(n, lambda).is_zero())
        throw NotAWitness("s^n(sqrt(-lambda)) != 0");

    // Normalize to odd length 2m-1 so that s_{2m} = 0, doubling via (n, 1, n).
    IntSeq core(n.begin(), n.end());
    if (core.size() % 2 == 0) {
        IntSeq doubled = core;
        doubled.emplace_back(1);
        doubled.insert(doubled.end(), core.begin(), core.end());
        core = std::move(doubled);
    }
    assert(eval_s_at_u(core, lambda).is_zero());

    RelationWord out;
    out.word_exponents = core;
    out.word_exponents.emplace_back(1);  // pad to even syllable count; s_{2m} ignores it

    WordMatrix w = word_matrix(out.word_exponents, lambda);
    if (!w.m12.is_zero()) throw NotAWitness("word matrix is not lower triangular");

    // Spell W and the commutator [W y W^-1, y] as syllables.
    struct Syl {
        char letter;
        Int exp;
    };
    std::vector<Syl> wsyl;
    for (size_t i = 0; i < out.word_exponents.size(); ++i)
        wsyl.push_back({i % 2 == 0 ? 'x' : 'y', out.word_exponents[i]});

    std::vector<Syl> word;
    auto append_w = [&](bool inverse) {
        if (!inverse) {
            word.insert(word.end(), wsyl.begin(), wsyl.end());
        } else {
            for (size_t i = wsyl.size(); i-- > 0;) word.push_back({wsyl[i].letter, -wsyl[i].exp});
        }
    };
    append_w(false);
    word.push_back({'y', Int(1)});
    append_w(true);
    word.push_back({'y', Int(1)});
    append_w(false);
    word.push_back({'y', Int(-1)});
    append_w(true);
    word.push_back({'y', Int(-1)});

    WordMatrix acc = WordMatrix::identity();
    for (const Syl& s : word)
        acc = acc * (s.letter == 'x' ? x_power(s.exp) : y_power(s.exp, lambda));
    out.identity_ok = (acc == WordMatrix::identity());

    auto spell = [](std::span<const Syl> syls) {
        std::ostringstream os;
        for (size_t i = 0; i < syls.size(); ++i) {
            if (i) os << " ";
            os << syls[i].letter << "^" << syls[i].exp.get_str();
        }
        return os.str();
    };
    out.word = spell(wsyl);
    out.commutator = spell(word);
    return out;
}

TLemmaReport t_lemma_check(std::span<const Int> n, const QuadNum& lambda) {
    if (lambda.is_zero()) throw ZeroLambda();
    TLemmaReport rep;
    VTPolys vt = vTtt_polys(n);
    rep.ttilde_zero = eval_poly_at_u(vt.Ttilde, lambda).is_zero();
    rep.that_zero = eval_poly_at_u(vt.That, lambda).is_zero();

    IntSeq neg = flip_signs(n, FlipMode::all);
    WordMatrix w = word_matrix(n, lambda);
    WordMatrix wneg = word_matrix(neg, lambda);
    if (n.size() % 2 == 1) {
        WordMatrix wstar = word_matrix(n, lambda, WordStart::y_first);
        rep.ttilde_matrix_match = (wstar == word_inverse(w));
        rep.that_matrix_match = (wstar == word_inverse(wneg));
        rep.biconditionals_ok = (rep.ttilde_zero == rep.ttilde_matrix_match) &&
                                (rep.that_zero == rep.that_matrix_match);
    } else {
        rep.that_matrix_match = (w == word_inverse(wneg));
        rep.biconditionals_ok = (rep.that_zero == rep.that_matrix_match);
    }
    return rep;
}

namespace {

void require(bool ok, const char* cond) {
    if (!ok) throw ConditionViolated(cond);
}

bool divides(const Int& d, const Int& n) {
    return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t());
}

} // namespace

std::string family_kind_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::one_step: return "one_step";
        case FamilyKind::two_step_i: return "two_step_i";
        case FamilyKind::two_step_ii: return "two_step_ii";
        case FamilyKind::two_step_iii: return "two_step_iii";
        case FamilyKind::two_step_zerosum: return "two_step_zerosum";
        case FamilyKind::two_step_cor: return "two_step_cor";
        case FamilyKind::three_step: return "three_step";
    }
    return "?";
}

FamilyWitness family_generate(FamilyKind kind, std::span<const Int> params) {
    auto arity = [&](size_t want) {
        require(params.size() == want, "wrong parameter count");
        for (const Int& p : params) require(p != 0, "parameters must be nonzero");
    };

    Rational lambda;
    IntSeq seq;
    switch (kind) {
        case FamilyKind::one_step: {
            arity(3);
            const Int &a = params[0], &b = params[1], &c = params[2];
            require(a + b != 0, "a + b != 0 (lambda would be 0)");
            lambda = make_rational(a + b, a * b * c);
            seq = {a, c, b};
            break;
        }
        case FamilyKind::two_step_i: {
            arity(3);
            const Int &r = params[0], &s = params[1], &t = params[2];
            require(r + s + t != 0, "r + s + t != 0 (lambda would be 0)");
            lambda = make_rational(r + s + t, r * s * t);
            seq = {r, s, t, r, s};
            break;
        }
        case FamilyKind::two_step_ii: {
            arity(4);
            const Int &r = params[0], &s = params[1], &t = params[2], &w = params[3];
            require(divides(w, r * s), "w | rs");
            require(r + w + t != 0, "r + w + t != 0 (lambda would be 0)");
            lambda = make_rational(r + w + t, r * s * t);
            seq = {r, s, t, Int(r * s / w), w};
            break;
        }
        case FamilyKind::two_step_iii: {
            arity(5);
            const Int &r = params[0], &s = params[1], &t = params[2], &v = params[3], &w = params[4];
            require(divides(v * w, r * s * t), "vw | rst");
            require(r * v + t * v + t * w == 0, "rv + tv + tw = 0");
            require(t + v != 0, "t + v != 0 (zero entry)");
            require(r + t + v + w != 0, "r + t + v + w != 0 (lambda would be 0)");
            lambda = make_rational(r + t + v + w, r * s * t);
            seq = {r, s, Int(t + v), Int(r * s * t / (v * w)), w};
            break;
        }
        case FamilyKind::two_step_zerosum: {
            arity(4);
            const Int &r = params[0], &s = params[1], &t = params[2], &v = params[3];
            require(r + v != 0, "r + v != 0");
            require(r * r * s + t * v * v != 0, "r^2 s + t v^2 != 0 (lambda would be 0)");
            lambda = make_rational(r * r * s + t * v * v, r * s * (r + v) * t * v);
            seq = {r, s, Int(-r - v), t, v};
            break;
        }
        case FamilyKind::two_step_cor: {
            arity(3);
            const Int &r = params[0], &s = params[1], &t = params[2];
            Int num = s * t + t + 1;
            require(num != 0, "1/r + 1/rs + 1/rst != 0");
            lambda = make_rational(num, r * s * t);
            seq = {t, Int(r * s), Int(1), r, Int(t * s)};
            break;
        }
        case FamilyKind::three_step: {
            arity(5);
            const Int &r = params[0], &s = params[1], &t = params[2], &v = params[3], &w = params[4];
            require(r * s * t == v * w, "rst = vw");
            require(r * r * s + w * w + r * s * t == (r + t) * (v + w),
                    "r^2 s + w^2 + rst = (r+t)(v+w)");
            require(r + t + v + w != 0, "r + t + v + w != 0 (lambda would be 0)");
            lambda = make_rational(r + t + v + w, r * s * t);
            seq = {r, s, t, Int(1), v, Int(1), w};
            break;
        }
    }

    QuadNum ql{lambda};
    // The proofs produce the witness for lambda up to sign; flip odd positions if needed.
    if (!eval_s_at_u(seq, ql).is_zero()) seq = flip_signs(seq, FlipMode::alternate);
    if (!eval_s_at_u(seq, ql).is_zero())
        throw Error("family_generate: constructed sequence fails for both signs");
    // Real relation numbers lie strictly inside (-4, 4).
    if (!(abs(lambda) < 4)) throw Error("family_generate: |lambda| >= 4");
    if (!relation_word(seq, ql).identity_ok)
        throw Error("family_generate: relation word does not evaluate to Id");

    return FamilyWitness{lambda, std::move(seq), kind, {params.begin(), params.end()}};
}

namespace {

template <class F>
void sweep_tuples(long bound, int arity, F&& body) {
    std::vector<Int> params(arity, Int(-bound));
    std::vector<long> vals(arity, -bound);
    for (;;) {
        bool any_zero = false;
        for (long v : vals) any_zero |= (v == 0);
        if (!any_zero) {
            for (int i = 0; i < arity; ++i) params[i] = vals[i];
            body(params);
        }
        int pos = arity - 1;
        while (pos >= 0 && vals[pos] == bound) vals[pos--] = -bound;
        if (pos < 0) return;
        ++vals[pos];
    }
}

} // namespace

FamilySweepResult family_sweep(long abc_bound, long rstvw_bound) {
    FamilySweepResult out;
    auto try_kind = [&](FamilyKind kind, std::span<const Int> params) {
        FamilyWitness fw;
        try {
            fw = family_generate(kind, params);
        } catch (const ConditionViolated&) {
            return;  // not a valid combination
        } catch (const std::exception& e) {
            out.failures.push_back(family_kind_name(kind) + "(" +
                                   to_string(std::span<const Int>(params)) + "): " + e.what());
            return;
        }
        ++out.generated;
        if (abs(fw.lambda) < 4) ++out.lambda_in_range;
        else out.failures.push_back(family_kind_name(kind) + ": |lambda| >= 4");
        out.witnesses.push_back(std::move(fw));
    };

    sweep_tuples(abc_bound, 3, [&](std::span<const Int> p) { try_kind(FamilyKind::one_step, p); });
    sweep_tuples(rstvw_bound, 3, [&](std::span<const Int> p) {
        try_kind(FamilyKind::two_step_i, p);
        try_kind(FamilyKind::two_step_cor, p);
    });
    sweep_tuples(rstvw_bound, 4, [&](std::span<const Int> p) {
        try_kind(FamilyKind::two_step_ii, p);
        try_kind(FamilyKind::two_step_zerosum, p);
    });
    sweep_tuples(rstvw_bound, 5, [&](std::span<const Int> p) {
        try_kind(FamilyKind::two_step_iii, p);
        try_kind(FamilyKind::three_step, p);
    });
    return out;
}

bool third_fourth_kind_check(std::span<const Int> n, const QuadNum& lambda) {
    if (lambda.is_zero()) throw ZeroLambda();
    IntPoly v = vTtt_polys(n).v;
    bool v_zero = eval_poly_at_u(v, lambda).is_zero();
    bool v_neg_zero = eval_poly_at_u(negate_t(v), lambda).is_zero();
    if (!v_zero && !v_neg_zero) return true;  // vacuous: no claim
    IntSeq longer = reversed(n);
    longer.insert(longer.end(), n.begin(), n.end());
    return eval_s_at_u(longer, lambda).is_zero();
}

} // namespace relnum
