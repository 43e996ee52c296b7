#pragma once

#include <span>
#include <string>
#include <vector>

#include "relnum/numeric.hpp"

namespace relnum {

using IntSeq = std::vector<Int>;
/// Sequence over Z extended with infinity entries (nullopt).
using ExtSeq = std::vector<ExtInt>;

bool all_nonzero(std::span<const Int> n);

IntSeq reversed(std::span<const Int> n);
ExtSeq to_ext(std::span<const Int> n);

/// Result of collapsing zero entries: seq with s^seq = sign * s^input, or the
/// zero-polynomial degenerate case (input collapsed to the single entry 0).
struct ReducedSeq {
    IntSeq seq;
    int sign = 1;
    bool zero_poly = false;
};

/// Repeatedly removes zero entries: a zero at either end drops two entries, an
/// interior zero merges its neighbors; each step flips the tracked sign.
ReducedSeq reduce_zero_entries(std::span<const Int> n);

enum class FlipMode { all, alternate };

/// all: -n.  alternate: m_i = (-1)^i n_i, mapping a lambda-witness to a (-lambda)-witness.
IntSeq flip_signs(std::span<const Int> n, FlipMode mode);

/// Comma-separated integers; `inf` allowed for ExtSeq.
IntSeq parse_intseq(const std::string& text);
ExtSeq parse_extseq(const std::string& text);
std::string to_string(std::span<const Int> n);
std::string to_string(const ExtSeq& n);

} // namespace relnum
