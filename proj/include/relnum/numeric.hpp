#pragma once

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relnum/errors.hpp"

namespace relnum {

using Int = mpz_class;
using Rational = mpq_class;

/// Canonical fraction num/den; throws DivisionByZero on den == 0.
Rational make_rational(const Int& num, const Int& den);

bool is_integer(const Rational& r);
Int floor_int(const Rational& r);
Int ceil_int(const Rational& r);

/// Element a + b*sqrt(d) of Q(sqrt d).  Canonical form keeps d == 0 whenever
/// b == 0, so plain rationals mix freely with any field; otherwise d is a
/// squarefree integer != 0, 1 fixed for the whole value.
struct QuadNum {
    Rational a;
    Rational b;
    long d = 0;

    QuadNum() = default;
    QuadNum(int v) : a(v) {}                    // NOLINT: implicit by design
    QuadNum(const Int& v) : a(v) {}             // NOLINT
    QuadNum(const Rational& v) : a(v) {}        // NOLINT
    QuadNum(Rational ra, Rational rb, long dd);

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }
    bool is_int() const { return b == 0 && is_integer(a); }

    friend bool operator==(const QuadNum& x, const QuadNum& y) {
        return x.a == y.a && x.b == y.b && x.d == y.d;
    }
};

QuadNum operator+(const QuadNum& x, const QuadNum& y);
QuadNum operator-(const QuadNum& x, const QuadNum& y);
QuadNum operator-(const QuadNum& x);
QuadNum operator*(const QuadNum& x, const QuadNum& y);
QuadNum operator/(const QuadNum& x, const QuadNum& y);  // throws DivisionByZero

enum class Cmp { LT = -1, EQ = 0, GT = 1 };

/// Exact sign of a real-embedded QuadNum.  Throws NotRealField when d < 0 and b != 0.
int sign_real(const QuadNum& x);
Cmp cmp_real(const QuadNum& x, const QuadNum& y);

/// |x|^2 = a^2 + |d| b^2 for d <= 0 (the complex embedding); a^2 - d b^2 is the
/// field norm only up to sign, so this is defined for rationals and d < 0.
Rational abs_sq(const QuadNum& x);

/// |x| for real-embedded x.
QuadNum abs_real(const QuadNum& x);

/// Exact floor/ceil under the real embedding.
std::pair<Int, Int> floor_ceil_real(const QuadNum& x);
Int floor_real(const QuadNum& x);
Int ceil_real(const QuadNum& x);

/// Floor/ceil remapped so neither end is 0: a zero endpoint turns the pair into (-1, 1).
std::pair<Int, Int> nonzero_neighbors(const QuadNum& x);

/// Nearest integer, ties away from zero.  round_away(0) = 0 (callers remap to 1).
Int round_away(const QuadNum& x);

/// lo <= sqrt(r) <= hi with hi - lo <= eps and lo >= 0.
std::pair<Rational, Rational> rational_sqrt_enclosure(const Rational& r, const Rational& eps);

/// Exact sign of p + q*sqrt(m) for m > 0.
int sign_plus_root(const Rational& p, const Rational& q, const Int& m);

/// A point of P^1 over the base field: a finite value or the single point at infinity.
struct ProjValue {
    bool inf = false;
    QuadNum v;

    static ProjValue infinity() { return ProjValue{true, QuadNum()}; }
    static ProjValue finite(QuadNum x) { return ProjValue{false, std::move(x)}; }

    friend bool operator==(const ProjValue& x, const ProjValue& y) {
        if (x.inf || y.inf) return x.inf == y.inf;
        return x.v == y.v;
    }
};

/// An integer extended with the point at infinity (nullopt).
using ExtInt = std::optional<Int>;
inline ExtInt ext_inf() { return std::nullopt; }

/// One continued-fraction layer (1/lambda)/(n + v) with projective conventions:
/// n + Infinity = Infinity, (1/l)/Infinity = 0, (1/l)/0 = Infinity.
/// Throws NotWellDefined when n = infinity meets v = Infinity.
ProjValue proj_inv_add(const QuadNum& inv_lambda, const ExtInt& n, const ProjValue& v);

// ---- parsing / formatting ------------------------------------------------

/// Accepts `p`, `p/q`, and sums like `1/2+1/2*sqrt(-3)` or `2-sqrt(5)`;
/// whitespace-insensitive.  Square factors of the radicand are pulled out so the
/// stored discriminant is squarefree.
QuadNum parse_quadnum(const std::string& text);

std::string to_string(const Rational& r);
std::string to_string(const QuadNum& x);
std::string to_string(const ProjValue& v);

} // namespace relnum
