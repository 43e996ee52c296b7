#include "relnum/scan.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

namespace relnum {

namespace {

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io error: " + what) {}
};

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::vector<std::string> csv_split(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

} // namespace

std::string scan_csv_header() { return "p,q,verdict,mindeg_lo,mindeg_hi,witness,method,ms"; }

std::string to_csv(const ScanRow& row) {
    std::ostringstream os;
    os << row.p.get_str() << "," << row.q.get_str() << "," << row.verdict << ",";
    if (row.mindeg_lo > 0) os << row.mindeg_lo;
    os << ",";
    if (row.mindeg_hi > 0) os << row.mindeg_hi;
    os << "," << csv_quote(to_string(std::span<const Int>(row.witness))) << "," << row.method
       << "," << row.ms;
    return os.str();
}

ScanRow scan_row_from_csv(const std::string& line) {
    std::vector<std::string> f = csv_split(line);
    if (f.size() != 8) throw ParseError("scan row needs 8 fields, got " + std::to_string(f.size()));
    ScanRow row;
    row.p = Int(f[0]);
    row.q = Int(f[1]);
    row.verdict = f[2];
    row.mindeg_lo = f[3].empty() ? 0 : std::stoi(f[3]);
    row.mindeg_hi = f[4].empty() ? -1 : std::stoi(f[4]);
    row.witness = parse_intseq(f[5]);
    row.method = f[6];
    row.ms = std::stol(f[7]);
    return row;
}

std::string to_json_line(const ScanRow& row) {
    nlohmann::json j{{"p", row.p.get_str()},          {"q", row.q.get_str()},
                     {"verdict", row.verdict},        {"mindeg_lo", row.mindeg_lo},
                     {"mindeg_hi", row.mindeg_hi},    {"method", row.method},
                     {"ms", row.ms},
                     {"witness", to_string(std::span<const Int>(row.witness))}};
    return j.dump();
}

ScanRow scan_row_from_json_line(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    ScanRow row;
    row.p = Int(j.at("p").get<std::string>());
    row.q = Int(j.at("q").get<std::string>());
    row.verdict = j.at("verdict").get<std::string>();
    row.mindeg_lo = j.at("mindeg_lo").get<int>();
    row.mindeg_hi = j.at("mindeg_hi").get<int>();
    row.witness = parse_intseq(j.at("witness").get<std::string>());
    row.method = j.at("method").get<std::string>();
    row.ms = j.at("ms").get<long>();
    return row;
}

namespace {

bool is_jsonl(const std::string& path) {
    return path.size() >= 6 && (path.ends_with(".jsonl") || path.ends_with(".json"));
}

// Rows already present and re-verified; rows failing verification are dropped.
std::map<std::pair<std::string, std::string>, ScanRow> load_existing(const std::string& path,
                                                                     std::ostream& log) {
    std::map<std::pair<std::string, std::string>, ScanRow> rows;
    std::ifstream in(path);
    if (!in) return rows;
    std::string line;
    bool jsonl = is_jsonl(path);
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!jsonl && first) {
            first = false;
            if (line.rfind("p,q,", 0) == 0) continue;  // header
        }
        ScanRow row;
        try {
            row = jsonl ? scan_row_from_json_line(line) : scan_row_from_csv(line);
        } catch (const std::exception& e) {
            log << "scan: dropping unreadable row: " << e.what() << "\n";
            continue;
        }
        if (row.verdict == "relation_number") {
            QuadNum lambda{make_rational(row.p, row.q)};
            if (row.witness.empty() || !verify_witness(lambda, row.witness).all_ok()) {
                log << "scan: dropping row " << row.p.get_str() << "/" << row.q.get_str()
                    << " (witness failed re-verification)\n";
                continue;
            }
        }
        rows[{row.p.get_str(), row.q.get_str()}] = std::move(row);
    }
    return rows;
}

ScanRow row_from_report(const Int& p, const Int& q, const DecisionReport& rep,
                        const std::string& method, long ms) {
    ScanRow row;
    row.p = p;
    row.q = q;
    row.verdict = verdict_name(rep.verdict);
    row.mindeg_lo = rep.mindeg_lo;
    row.mindeg_hi = rep.mindeg_hi;
    if (rep.witness) row.witness = *rep.witness;
    row.method = method;
    row.ms = ms;
    return row;
}

} // namespace

int run_scan(const ScanOptions& opt, std::ostream& log) {
    if (opt.den < 1) throw Error("scan requires a positive denominator");
    if (opt.mode != "exhaustive" && opt.mode != "greedy")
        throw Error("scan mode must be exhaustive or greedy");

    std::vector<Int> nums;
    for (Int p = opt.num_lo; p <= opt.num_hi; ++p) {
        if (p == 0) continue;
        Int g;
        mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), opt.den.get_mpz_t());
        if (g == 1) nums.push_back(p);
    }

    auto existing = opt.out_path.empty()
                        ? std::map<std::pair<std::string, std::string>, ScanRow>{}
                        : load_existing(opt.out_path, log);

    std::ofstream out;
    std::mutex io_mu;
    bool jsonl = is_jsonl(opt.out_path);
    if (!opt.out_path.empty()) {
        // rewrite the file with the surviving rows, then append as items finish
        out.open(opt.out_path, std::ios::trunc);
        if (!out) throw IoError("cannot open " + opt.out_path);
        if (!jsonl) out << scan_csv_header() << "\n";
        for (const auto& [key, row] : existing) out << (jsonl ? to_json_line(row) : to_csv(row)) << "\n";
        out.flush();
    }

    std::atomic<size_t> next{0};
    std::atomic<int> unknowns{0};
    auto work_one = [&](const Int& p) {
        auto key = std::make_pair(p.get_str(), opt.den.get_str());
        {
            std::lock_guard<std::mutex> g(io_mu);
            auto it = existing.find(key);
            if (it != existing.end()) {
                log << "scan: " << key.first << "/" << key.second << " already done ("
                    << it->second.verdict << ")\n";
                if (it->second.verdict == "unknown") unknowns.fetch_add(1);
                return;
            }
        }
        QuadNum lambda{make_rational(p, opt.den)};
        SearchLimits lim = opt.limits;
        if (opt.timeout_s > 0)
            lim.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(opt.timeout_s);
        auto t0 = std::chrono::steady_clock::now();
        ScanRow row;
        if (opt.mode == "exhaustive") {
            DecisionReport rep = decide(lambda, lim);
            long ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::steady_clock::now() - t0).count());
            row = row_from_report(p, opt.den, rep, "exhaustive", ms);
        } else {
            GreedyParams gp = opt.greedy;
            if (!opt.greedy_w_set) gp.W = Rational(opt.den);
            std::optional<IntSeq> wit;
            if (free_region_precheck(lambda) == FreeStatus::free) {
                row.verdict = "free_by_region";
            } else {
                wit = greedy_find(lambda, gp, lim);
                if (wit) {
                    row.verdict = "relation_number";
                    row.mindeg_hi = static_cast<int>(wit->size());
                    row.mindeg_lo = std::min(mindeg_lower_bound(lambda), row.mindeg_hi);
                    row.witness = *wit;
                } else {
                    row.verdict = "unknown";
                    row.mindeg_lo = mindeg_lower_bound(lambda);
                }
            }
            row.p = p;
            row.q = opt.den;
            row.method = "greedy";
            row.ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                           std::chrono::steady_clock::now() - t0).count());
            if (!row.witness.empty() && !verify_witness(lambda, row.witness).all_ok())
                throw Error("internal: greedy witness failed verification");
        }
        if (row.verdict == "unknown") unknowns.fetch_add(1);
        std::lock_guard<std::mutex> g(io_mu);
        log << "scan: " << row.p.get_str() << "/" << row.q.get_str() << " -> " << row.verdict;
        if (row.mindeg_hi > 0) log << " (mindeg <= " << row.mindeg_hi << ")";
        log << " [" << row.ms << " ms]\n";
        if (out.is_open()) {
            out << (jsonl ? to_json_line(row) : to_csv(row)) << "\n";
            out.flush();
        }
    };

    int workers = std::max(1, opt.workers);
    if (workers == 1) {
        for (const Int& p : nums) work_one(p);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&]() {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= nums.size()) return;
                    work_one(nums[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    return unknowns.load();
}

} // namespace relnum
