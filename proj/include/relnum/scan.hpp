#pragma once

#include <iosfwd>
#include <string>

#include "relnum/decide.hpp"

namespace relnum {

/// One scanned rational lambda = p/q.  Serialized as the fixed CSV columns
/// p,q,verdict,mindeg_lo,mindeg_hi,witness,method,ms (empty field = none) or as
/// one JSON object per line.
struct ScanRow {
    Int p, q;
    std::string verdict;
    int mindeg_lo = 0;
    int mindeg_hi = -1;
    IntSeq witness;
    std::string method;
    long ms = 0;

    friend bool operator==(const ScanRow&, const ScanRow&) = default;
};

std::string scan_csv_header();
std::string to_csv(const ScanRow& row);
ScanRow scan_row_from_csv(const std::string& line);
std::string to_json_line(const ScanRow& row);
ScanRow scan_row_from_json_line(const std::string& line);

struct ScanOptions {
    Int den = 13;
    Int num_lo = 1;
    Int num_hi = 12;
    std::string mode = "exhaustive";  // or "greedy"
    int timeout_s = 300;              // wall clock per item
    std::string out_path;             // .csv or .jsonl; empty = no persistence
    int workers = 1;
    SearchLimits limits;
    GreedyParams greedy;      // greedy mode; W defaults to q per item unless set
    bool greedy_w_set = false;
};

/// Iterates reduced p/q over the numerator range; existing verified rows in
/// out_path are kept and skipped, rows failing re-verification are recomputed.
/// Returns the number of items whose verdict is still unknown.
int run_scan(const ScanOptions& opt, std::ostream& log);

} // namespace relnum
