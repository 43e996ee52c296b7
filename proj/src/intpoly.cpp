#include "relnum/intpoly.hpp"

#include <algorithm>
#include <sstream>

namespace relnum {

IntPoly operator+(const IntPoly& x, const IntPoly& y) {
    IntPoly r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.coeff(i) + y.coeff(i);
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& x, const IntPoly& y) {
    IntPoly r;
    r.c.resize(std::max(x.c.size(), y.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = x.coeff(i) - y.coeff(i);
    r.trim();
    return r;
}

IntPoly operator-(const IntPoly& x) {
    IntPoly r = x;
    for (auto& v : r.c) v = -v;
    return r;
}

IntPoly operator*(const IntPoly& x, const IntPoly& y) {
    if (x.is_zero() || y.is_zero()) return IntPoly();
    IntPoly r;
    r.c.assign(x.c.size() + y.c.size() - 1, Int(0));
    for (size_t i = 0; i < x.c.size(); ++i)
        for (size_t j = 0; j < y.c.size(); ++j) r.c[i + j] += x.c[i] * y.c[j];
    r.trim();
    return r;
}

IntPoly operator*(const Int& k, const IntPoly& x) {
    if (k == 0) return IntPoly();
    IntPoly r = x;
    for (auto& v : r.c) v *= k;
    return r;
}

IntPoly mul_nt(const IntPoly& p, const Int& n) {
    if (p.is_zero() || n == 0) return IntPoly();
    IntPoly r;
    r.c.assign(p.c.size() + 1, Int(0));
    for (size_t i = 0; i < p.c.size(); ++i) r.c[i + 1] = n * p.c[i];
    return r;
}

IntPoly div_t(const IntPoly& p) {
    if (p.is_zero()) return IntPoly();
    if (p.c[0] != 0) throw Error("div_t: nonzero constant term");
    IntPoly r;
    r.c.assign(p.c.begin() + 1, p.c.end());
    return r;
}

IntPoly negate_t(const IntPoly& p) {
    IntPoly r = p;
    for (size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
    return r;
}

bool is_even_poly(const IntPoly& p) {
    for (size_t i = 1; i < p.c.size(); i += 2)
        if (p.c[i] != 0) return false;
    return true;
}

bool is_odd_poly(const IntPoly& p) {
    for (size_t i = 0; i < p.c.size(); i += 2)
        if (p.c[i] != 0) return false;
    return true;
}

IntPoly even_part_in_x(const IntPoly& e) {
    if (!is_even_poly(e)) throw Error("even_part_in_x: polynomial has odd terms");
    IntPoly r;
    for (size_t i = 0; i < e.c.size(); i += 2) r.c.push_back(e.c[i]);
    r.trim();
    return r;
}

IntPoly substitute_neg(const IntPoly& p) { return negate_t(p); }

Rational eval_poly(const IntPoly& p, const Rational& x) {
    Rational acc(0);
    for (size_t i = p.c.size(); i-- > 0;) acc = acc * x + Rational(p.c[i]);
    return acc;
}

std::string to_string(const IntPoly& p) {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < p.c.size(); ++i) {
        if (i) out << ", ";
        out << p.c[i];
    }
    if (p.c.empty()) out << "0";
    out << "]";
    return out.str();
}

std::string to_pretty_string(const IntPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = p.c.size(); i-- > 0;) {
        const Int& v = p.c[i];
        if (v == 0) continue;
        if (first) {
            if (v < 0) out << "-";
            first = false;
        } else {
            out << (v < 0 ? " - " : " + ");
        }
        Int av = abs(v);
        if (av != 1 || i == 0) out << av.get_str();
        if (i >= 1) {
            if (av != 1) out << "*";
            out << "t";
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

} // namespace relnum
