#include "relnum/intseq.hpp"

#include <sstream>

namespace relnum {

bool all_nonzero(std::span<const Int> n) {
    for (const Int& v : n)
        if (v == 0) return false;
    return true;
}

IntSeq reversed(std::span<const Int> n) { return IntSeq(n.rbegin(), n.rend()); }

ExtSeq to_ext(std::span<const Int> n) {
    ExtSeq e;
    e.reserve(n.size());
    for (const Int& v : n) e.emplace_back(v);
    return e;
}

ReducedSeq reduce_zero_entries(std::span<const Int> n) {
    ReducedSeq out;
    out.seq.assign(n.begin(), n.end());
    for (;;) {
        size_t j = 0;
        while (j < out.seq.size() && out.seq[j] != 0) ++j;
        if (j == out.seq.size()) return out;
        if (out.seq.size() == 1) {  // the single entry 0: s-polynomial is identically zero
            out.zero_poly = true;
            out.seq.clear();
            return out;
        }
        if (j == 0) {
            out.seq.erase(out.seq.begin(), out.seq.begin() + 2);
        } else if (j + 1 == out.seq.size()) {
            out.seq.erase(out.seq.end() - 2, out.seq.end());
        } else {
            out.seq[j - 1] += out.seq[j + 1];
            out.seq.erase(out.seq.begin() + j, out.seq.begin() + j + 2);
        }
        out.sign = -out.sign;
    }
}

IntSeq flip_signs(std::span<const Int> n, FlipMode mode) {
    IntSeq r(n.begin(), n.end());
    if (mode == FlipMode::all) {
        for (Int& v : r) v = -v;
    } else {
        for (size_t i = 0; i < r.size(); ++i)
            if (i % 2 == 0) r[i] = -r[i];  // (-1)^i n_i with 1-based i: odd positions flip
    }
    return r;
}

namespace {

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    if (parts.size() == 1 && parts[0].empty()) parts.clear();
    return parts;
}

Int parse_entry(std::string p) {
    if (!p.empty() && p[0] == '+') p.erase(p.begin());
    if (p.empty()) throw ParseError("empty sequence entry");
    try {
        return Int(p);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad sequence entry '" + p + "'");
    }
}

} // namespace

IntSeq parse_intseq(const std::string& text) {
    IntSeq out;
    for (const auto& p : split_commas(text)) out.push_back(parse_entry(p));
    return out;
}

ExtSeq parse_extseq(const std::string& text) {
    ExtSeq out;
    for (const auto& p : split_commas(text)) {
        if (p == "inf" || p == "oo") out.push_back(ext_inf());
        else out.emplace_back(parse_entry(p));
    }
    return out;
}

std::string to_string(std::span<const Int> n) {
    std::ostringstream out;
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) out << ",";
        out << n[i].get_str();
    }
    return out.str();
}

std::string to_string(const ExtSeq& n) {
    std::ostringstream out;
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) out << ",";
        out << (n[i] ? n[i]->get_str() : std::string("inf"));
    }
    return out.str();
}

} // namespace relnum
