#include "relnum/numeric.hpp"

#include <cassert>
#include <cctype>
#include <cstdlib>

namespace relnum {

Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Int floor_int(const Rational& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Int ceil_int(const Rational& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

namespace {

// Pulls the largest square factor out of |m|; returns (f, rest) with |m| = f^2 * rest.
std::pair<Int, Int> extract_square(Int m) {
    assert(m > 0);
    Int f = 1;
    for (Int p = 2; p * p <= m; ++p) {
        while (mpz_divisible_p(m.get_mpz_t(), Int(p * p).get_mpz_t())) {
            m /= p * p;
            f *= p;
        }
        if (p > 1000000) break;  // residual square factors beyond this are out of scope
    }
    return {f, m};
}

long check_discriminant(const Int& d) {
    if (d == 0 || d == 1) throw ParseError("discriminant must not be 0 or 1");
    if (!d.fits_slong_p()) throw ParseError("discriminant out of range");
    return d.get_si();
}

} // namespace

QuadNum::QuadNum(Rational ra, Rational rb, long dd) : a(std::move(ra)), b(std::move(rb)), d(dd) {
    if (b == 0) {
        d = 0;
    } else if (d == 0 || d == 1) {
        throw MixedField();
    }
}

namespace {

long merged_d(const QuadNum& x, const QuadNum& y) {
    if (x.d == 0) return y.d;
    if (y.d == 0 || x.d == y.d) return x.d;
    throw MixedField();
}

} // namespace

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
    return QuadNum(x.a + y.a, x.b + y.b, merged_d(x, y));
}

QuadNum operator-(const QuadNum& x, const QuadNum& y) {
    return QuadNum(x.a - y.a, x.b - y.b, merged_d(x, y));
}

QuadNum operator-(const QuadNum& x) { return QuadNum(-x.a, -x.b, x.d); }

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
    long d = merged_d(x, y);
    if (x.b == 0 && y.b == 0) return QuadNum(x.a * y.a, Rational(0), 0);
    // (a1 + b1 s)(a2 + b2 s) = a1 a2 + d b1 b2 + (a1 b2 + a2 b1) s
    return QuadNum(x.a * y.a + Rational(d) * x.b * y.b, x.a * y.b + y.a * x.b, d);
}

QuadNum operator/(const QuadNum& x, const QuadNum& y) {
    if (y.is_zero()) throw DivisionByZero();
    if (y.b == 0) return QuadNum(x.a / y.a, x.b / y.a, x.d);
    // 1/(a + b s) = (a - b s)/(a^2 - d b^2); the norm is nonzero since d is not a square.
    Rational norm = y.a * y.a - Rational(y.d) * y.b * y.b;
    assert(norm != 0);
    QuadNum conj(y.a, -y.b, y.d);
    QuadNum num = x * conj;
    return QuadNum(num.a / norm, num.b / norm, merged_d(x, y));
}

int sign_real(const QuadNum& x) {
    int sa = sgn(x.a);
    if (x.b == 0) return sa;
    if (x.d < 0) throw NotRealField();
    int sb = sgn(x.b);
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b have opposite signs: compare a^2 against d b^2
    int c = cmp(x.a * x.a, Rational(x.d) * x.b * x.b);
    if (c > 0) return sa;
    if (c < 0) return sb;
    assert(false && "squarefree d cannot make a + b sqrt(d) vanish with a, b != 0");
    return 0;
}

Cmp cmp_real(const QuadNum& x, const QuadNum& y) {
    int s = sign_real(x - y);
    return s < 0 ? Cmp::LT : (s > 0 ? Cmp::GT : Cmp::EQ);
}

Rational abs_sq(const QuadNum& x) {
    if (x.b == 0) return x.a * x.a;
    if (x.d > 0) throw NotComplexField();
    return x.a * x.a + Rational(-x.d) * x.b * x.b;
}

QuadNum abs_real(const QuadNum& x) { return sign_real(x) < 0 ? -x : x; }

std::pair<Rational, Rational> rational_sqrt_enclosure(const Rational& r, const Rational& eps) {
    if (r < 0) throw NegativeRadicand();
    if (eps <= 0) throw Error("sqrt enclosure needs eps > 0");
    if (r == 0) return {Rational(0), Rational(0)};
    const Int& p = r.get_num();
    const Int& q = r.get_den();
    // sqrt(p/q) = sqrt(p q)/q; scale by 2^m so the grid 1/(q 2^m) is finer than eps.
    Int target = ceil_int(Rational(1) / (Rational(q) * eps));
    unsigned long m = mpz_sizeinbase(target.get_mpz_t(), 2);
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), m);
    Int n = p * q * scale * scale;
    Int s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    Rational den(q * scale);
    Rational lo = make_rational(s, q * scale);
    if (s * s == n) return {lo, lo};
    Rational hi = make_rational(s + 1, q * scale);
    return {lo, hi};
}

int sign_plus_root(const Rational& p, const Rational& q, const Int& m) {
    assert(m > 0);
    int sp = sgn(p), sq = sgn(q);
    if (sq == 0) return sp;
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    int c = cmp(p * p, q * q * Rational(m));
    if (c > 0) return sp;
    if (c < 0) return sq;
    return 0;  // p = -q sqrt(m) is possible only when m is a square; callers pass squarefree m
}

std::pair<Int, Int> floor_ceil_real(const QuadNum& x) {
    if (x.b == 0) {
        Int f = floor_int(x.a), c = ceil_int(x.a);
        return {f, c};
    }
    if (x.d < 0) throw NotRealField();
    // x = a + b sqrt(d) is irrational; tighten a sqrt enclosure until the floor is pinned.
    Rational r = x.b * x.b * Rational(x.d);
    Rational eps(1, 16);
    for (;;) {
        auto [lo, hi] = rational_sqrt_enclosure(r, eps);
        Rational slo = sgn(x.b) > 0 ? lo : -hi;
        Rational shi = sgn(x.b) > 0 ? hi : -lo;
        Int fl = floor_int(x.a + slo);
        Int fh = floor_int(x.a + shi);
        if (fl == fh) return {fl, fl + 1};
        eps /= 16;
    }
}

Int floor_real(const QuadNum& x) { return floor_ceil_real(x).first; }

Int ceil_real(const QuadNum& x) { return floor_ceil_real(x).second; }

std::pair<Int, Int> nonzero_neighbors(const QuadNum& x) {
    auto [l, r] = floor_ceil_real(x);
    if (l == 0 || r == 0) return {Int(-1), Int(1)};
    return {l, r};
}

Int round_away(const QuadNum& x) {
    int s = sign_real(x);
    if (s == 0) return 0;
    QuadNum half(Rational(1, 2));
    if (s > 0) return floor_real(x + half);
    return -floor_real(-x + half);
}

ProjValue proj_inv_add(const QuadNum& inv_lambda, const ExtInt& n, const ProjValue& v) {
    if (!n.has_value()) {
        if (v.inf) throw NotWellDefined();
        return ProjValue::finite(QuadNum(0));
    }
    if (v.inf) return ProjValue::finite(QuadNum(0));
    QuadNum s = v.v + QuadNum(*n);
    if (s.is_zero()) return ProjValue::infinity();
    return ProjValue::finite(inv_lambda / s);
}

// ---- parsing ---------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    bool done() const { return i >= s.size(); }
    char peek() const { return done() ? '\0' : s[i]; }
    bool eat(char c) {
        if (peek() == c) { ++i; return true; }
        return false;
    }
};

Int parse_int(Cursor& c) {
    size_t start = c.i;
    if (c.peek() == '+' || c.peek() == '-') ++c.i;
    size_t digits = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) { ++c.i; ++digits; }
    if (digits == 0) throw ParseError("expected an integer at '" + c.s.substr(start) + "'");
    return Int(c.s.substr(start, c.i - start));
}

Rational parse_rat(Cursor& c) {
    Int num = parse_int(c);
    if (c.eat('/')) {
        Int den = parse_int(c);
        if (den == 0) throw ParseError("zero denominator");
        return make_rational(num, den);
    }
    return Rational(num);
}

// term := rational [* sqrt(D)] | sqrt(D)
QuadNum parse_term(Cursor& c) {
    if (c.s.compare(c.i, 4, "sqrt") == 0) {
        c.i += 4;
        if (!c.eat('(')) throw ParseError("expected '(' after sqrt");
        Int rad = parse_int(c);
        if (!c.eat(')')) throw ParseError("expected ')' after sqrt radicand");
        int sign = 1;
        if (rad < 0) { sign = -1; rad = -rad; }
        auto [f, rest] = extract_square(rad);
        if (rest == 1 && sign > 0) return QuadNum(Rational(f));  // sqrt of a perfect square
        long d = check_discriminant(sign < 0 ? Int(-rest) : rest);
        return QuadNum(Rational(0), Rational(f), d);
    }
    Rational r = parse_rat(c);
    if (c.eat('*')) {
        QuadNum root = parse_term(c);
        return root * QuadNum(r);
    }
    return QuadNum(r);
}

} // namespace

QuadNum parse_quadnum(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty number");
    Cursor c{s};
    QuadNum acc(0);
    bool neg = c.eat('-');
    if (!neg) c.eat('+');
    for (;;) {
        QuadNum t = parse_term(c);
        acc = neg ? acc - t : acc + t;
        if (c.done()) break;
        if (c.eat('+')) neg = false;
        else if (c.eat('-')) neg = true;
        else throw ParseError("unexpected '" + std::string(1, c.peek()) + "'");
    }
    return acc;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const QuadNum& x) {
    if (x.b == 0) return to_string(x.a);
    std::string out;
    if (x.a != 0) out = to_string(x.a);
    if (x.b < 0) out += "-";
    else if (!out.empty()) out += "+";
    Rational ab = abs(x.b);
    if (ab != 1) out += to_string(ab) + "*";
    out += "sqrt(" + std::to_string(x.d) + ")";
    return out;
}

std::string to_string(const ProjValue& v) { return v.inf ? "inf" : to_string(v.v); }

} // namespace relnum
