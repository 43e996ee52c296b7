#pragma once

#include <span>
#include <string>
#include <vector>

#include "relnum/numeric.hpp"

namespace relnum {

/// Dense integer polynomial in t, coefficients lowest degree first, trailing zeros trimmed.
struct IntPoly {
    std::vector<Int> c;

    IntPoly() = default;
    IntPoly(int v) { if (v != 0) c.assign(1, Int(v)); }  // NOLINT: implicit by design
    explicit IntPoly(Int v) { if (v != 0) c.assign(1, std::move(v)); }
    explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }

    static IntPoly t() { return IntPoly(std::vector<Int>{Int(0), Int(1)}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    /// degree of the zero polynomial reported as -1
    long degree() const { return static_cast<long>(c.size()) - 1; }
    Int coeff(size_t i) const { return i < c.size() ? c[i] : Int(0); }

    friend bool operator==(const IntPoly& x, const IntPoly& y) { return x.c == y.c; }
};

IntPoly operator+(const IntPoly& x, const IntPoly& y);
IntPoly operator-(const IntPoly& x, const IntPoly& y);
IntPoly operator-(const IntPoly& x);
IntPoly operator*(const IntPoly& x, const IntPoly& y);
IntPoly operator*(const Int& k, const IntPoly& x);

/// p * n*t  (one Chebyshev recursion step)
IntPoly mul_nt(const IntPoly& p, const Int& n);

/// Exact division by t; requires a zero constant term.
IntPoly div_t(const IntPoly& p);

/// p(-t): negate odd coefficients.
IntPoly negate_t(const IntPoly& p);

bool is_even_poly(const IntPoly& p);
bool is_odd_poly(const IntPoly& p);

/// For an even polynomial e(t) = sum c_{2j} t^{2j}, the polynomial X with X(x)|_{x=t^2} = e.
IntPoly even_part_in_x(const IntPoly& e);

/// p(-x): substitute x -> -x (negate odd coefficients); alias of negate_t for clarity at x-level.
IntPoly substitute_neg(const IntPoly& p);

Rational eval_poly(const IntPoly& p, const Rational& x);

/// Dense list text form, lowest degree first: [c0, c1, ..., cd].
std::string to_string(const IntPoly& p);
/// Human form like "-t^4 + 2".
std::string to_pretty_string(const IntPoly& p);

} // namespace relnum
