#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "relnum/identity_suite.hpp"
#include "relnum/json_io.hpp"
#include "relnum/scan.hpp"

using namespace relnum;

namespace {

constexpr int kExitRelation = 0;
constexpr int kExitFree = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

int env_threads() {
    const char* v = std::getenv("RELNUM_THREADS");
    if (!v) return 1;
    int t = std::atoi(v);
    return t >= 1 ? t : 1;
}

void print_ladder(const MkLadder& ladder, std::ostream& os) {
    for (const MkLevel& lv : ladder.levels) {
        os << "  M_" << lv.k << " = ";
        if (lv.value.is_zero() && lv.upper != 0) {
            os << "sqrt(" << to_string(lv.abs_sq) << ") <= " << to_string(lv.upper);
        } else {
            os << to_string(lv.value);
        }
        os << "   attained by " << to_string(lv.attained) << "\n";
    }
    if (ladder.hit_infinity) os << "  next level: infinity\n";
}

void print_report(const DecisionReport& rep, bool with_ladder, std::ostream& os) {
    os << "lambda = " << to_string(rep.lambda) << "\n";
    os << "verdict: " << verdict_name(rep.verdict) << "\n";
    if (rep.verdict == Verdict::relation_number) {
        os << "minimal u-degree: " << rep.mindeg_lo << "\n";
        os << "witness: " << to_string(std::span<const Int>(*rep.witness)) << "\n";
        const VerifyReport& v = rep.verification;
        os << "verified: s=0 " << (v.s_zero ? "yes" : "NO") << ", [n]=inf "
           << (v.wcf_infinite ? "yes" : "NO") << ", root conditions "
           << (v.root_conditions ? "yes" : "NO") << ", relation word "
           << (v.word_identity ? "yes" : "NO") << "\n";
    } else if (rep.verdict == Verdict::free_by_region) {
        os << "certified free (exact region test); minimal u-degree: infinity\n";
    } else {
        os << "minimal u-degree >= " << rep.mindeg_lo << " (cutoff k_max = " << rep.k_max_used
           << ")\n";
    }
    if (with_ladder && !rep.ladder.levels.empty()) {
        os << "M ladder:\n";
        print_ladder(rep.ladder, os);
    }
    os << "elapsed: " << rep.elapsed_ms << " ms\n";
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::relation_number: return kExitRelation;
        case Verdict::free_by_region: return kExitFree;
        case Verdict::unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"relnum: decides whether lambda is a relation number (the parabolic group "
                 "G_lambda is non-free) by exact search for the shortest Chebyshev zero"};
    app.require_subcommand(1);

    std::string lambda_str, seq_str, out_path, mode = "exhaustive", format = "text";
    int max_k = 30, eps_bits = 30, threads = env_threads(), up_to = 8;
    int greedy_n = 5, workers = env_threads(), timeout_per = 300, timeout_s = 0;
    std::string greedy_w;
    long trials = 200, abc_bound = 6, rstvw_bound = 4;
    std::uint64_t seed = 1;
    int suite_max_len = 6;
    long suite_coeff = 5;
    bool json_out = false, deterministic = false, with_ladder = false;
    std::string num_range = "1..12", den_str = "13";

    auto add_search_flags = [&](CLI::App* cmd) {
        cmd->add_option("--max-k", max_k, "search cutoff for the minimal u-degree");
        cmd->add_option("--eps-bits", eps_bits, "sqrt enclosure precision 2^-bits (complex)");
        cmd->add_option("--threads", threads, "parallel top-level branches (real search)");
        cmd->add_flag("--deterministic", deterministic, "force single-threaded search");
        cmd->add_option("--timeout", timeout_s, "wall-clock budget in seconds (0 = none)");
    };

    CLI::App* cmd_decide = app.add_subcommand("decide", "decide one lambda exactly");
    cmd_decide->add_option("lambda", lambda_str, "e.g. 1/13, 3, 1/2+1/2*sqrt(-3)")->required();
    cmd_decide->add_flag("--json", json_out, "print the report as JSON");
    cmd_decide->add_flag("--ladder", with_ladder, "print the M_k ladder");
    add_search_flags(cmd_decide);

    CLI::App* cmd_mk = app.add_subcommand("mk", "exact M_k ladder for real lambda > 0");
    cmd_mk->add_option("lambda", lambda_str)->required();
    cmd_mk->add_option("--up-to", up_to, "compute M_1..M_K")->required();
    cmd_mk->add_option("--format", format, "text, csv, or json");
    cmd_mk->add_option("--threads", threads, "parallel top-level branches");
    cmd_mk->add_option("--timeout", timeout_s, "wall-clock budget in seconds (0 = none)");

    CLI::App* cmd_scan = app.add_subcommand("scan", "scan reduced p/q over a numerator range");
    cmd_scan->add_option("--den", den_str, "denominator q")->required();
    cmd_scan->add_option("--num", num_range, "numerator range a..b")->required();
    cmd_scan->add_option("--mode", mode, "exhaustive or greedy");
    cmd_scan->add_option("--timeout-per", timeout_per, "seconds per item");
    cmd_scan->add_option("--out", out_path, "output file (.csv or .jsonl); resumable");
    cmd_scan->add_option("--workers", workers, "parallel scan items");
    cmd_scan->add_option("--max-k", max_k, "per-item search cutoff");
    cmd_scan->add_option("--greedy-n", greedy_n, "greedy windowed depth N");
    cmd_scan->add_option("--greedy-w", greedy_w, "greedy window radius W (default q)");
    cmd_scan->add_option("--threads", threads, "threads inside each item search");

    CLI::App* cmd_verify = app.add_subcommand("verify", "verify a witness sequence");
    cmd_verify->add_option("lambda", lambda_str)->required();
    cmd_verify->add_option("sequence", seq_str, "comma-separated integers")->required();
    cmd_verify->add_flag("--json", json_out);

    CLI::App* cmd_greedy = app.add_subcommand("greedy", "greedy witness search (Algorithm 2)");
    cmd_greedy->add_option("lambda", lambda_str)->required();
    cmd_greedy->add_option("--greedy-n", greedy_n, "windowed depth N");
    cmd_greedy->add_option("--greedy-w", greedy_w, "window radius W (default q for p/q)");
    cmd_greedy->add_option("--max-k", max_k, "maximum sequence length");
    cmd_greedy->add_option("--timeout", timeout_s, "wall-clock budget in seconds");

    CLI::App* cmd_families = app.add_subcommand("families", "closed-form family sweep");
    cmd_families->add_option("--abc-bound", abc_bound, "|a|,|b|,|c| bound for one_step");
    cmd_families->add_option("--rstvw-bound", rstvw_bound, "|r..w| bound for the others");
    cmd_families->add_flag("--json", json_out);

    CLI::App* cmd_ident = app.add_subcommand("identities", "randomized exact identity suite");
    cmd_ident->add_option("--trials", trials, "trials per identity");
    cmd_ident->add_option("--seed", seed, "RNG seed");
    cmd_ident->add_option("--max-len", suite_max_len, "sequence length bound");
    cmd_ident->add_option("--coeff-bound", suite_coeff, "entry magnitude bound");
    cmd_ident->add_flag("--json", json_out);

    CLI11_PARSE(app, argc, argv);

    try {
        SearchLimits lim;
        lim.k_max = max_k;
        lim.eps_bits = eps_bits;
        lim.threads = deterministic ? 1 : threads;
        if (timeout_s > 0)
            lim.deadline = std::chrono::steady_clock::now() + std::chrono::seconds(timeout_s);

        if (*cmd_decide) {
            DecisionReport rep = decide(parse_quadnum(lambda_str), lim);
            if (json_out) std::cout << to_json(rep).dump(2) << "\n";
            else print_report(rep, with_ladder, std::cout);
            return verdict_exit(rep.verdict);
        }

        if (*cmd_mk) {
            QuadNum lambda = parse_quadnum(lambda_str);
            MkLadder ladder = mk_table(lambda, up_to, lim);
            if (format == "json") {
                std::cout << to_json(ladder).dump(2) << "\n";
            } else if (format == "csv") {
                std::cout << "k,value,attained\n";
                for (const MkLevel& lv : ladder.levels)
                    std::cout << lv.k << "," << to_string(lv.value) << ",\""
                              << to_string(lv.attained) << "\"\n";
            } else {
                print_ladder(ladder, std::cout);
            }
            if (static_cast<int>(ladder.levels.size()) < up_to && !ladder.hit_infinity) {
                std::cerr << "mk: stopped before M_" << up_to << " (timeout)\n";
                return kExitUnknown;
            }
            return 0;
        }

        if (*cmd_scan) {
            ScanOptions opt;
            opt.den = Int(den_str);
            auto dots = num_range.find("..");
            if (dots == std::string::npos) {
                opt.num_lo = opt.num_hi = Int(num_range);
            } else {
                opt.num_lo = Int(num_range.substr(0, dots));
                opt.num_hi = Int(num_range.substr(dots + 2));
            }
            opt.mode = mode;
            opt.timeout_s = timeout_per;
            opt.out_path = out_path;
            opt.workers = workers;
            opt.limits = lim;
            opt.greedy.N = greedy_n;
            opt.greedy.k_max = max_k;
            if (!greedy_w.empty()) {
                QuadNum w = parse_quadnum(greedy_w);
                opt.greedy.W = w.a;
                opt.greedy_w_set = true;
            }
            run_scan(opt, std::cerr);
            return 0;
        }

        if (*cmd_verify) {
            QuadNum lambda = parse_quadnum(lambda_str);
            IntSeq n = parse_intseq(seq_str);
            VerifyReport rep = verify_witness(lambda, n);
            if (json_out) std::cout << to_json(rep).dump(2) << "\n";
            else
                std::cout << "s_zero: " << rep.s_zero << "\nwcf_infinite: " << rep.wcf_infinite
                          << "\nroot_conditions: " << rep.root_conditions
                          << "\nword_identity: " << rep.word_identity << "\n"
                          << (rep.all_ok() ? "witness verified" : "NOT a verified witness")
                          << "\n";
            return rep.all_ok() ? 0 : 1;
        }

        if (*cmd_greedy) {
            QuadNum lambda = parse_quadnum(lambda_str);
            GreedyParams gp = GreedyParams::defaults_for(lambda);
            gp.N = greedy_n;
            gp.k_max = max_k;
            if (!greedy_w.empty()) gp.W = parse_quadnum(greedy_w).a;
            std::optional<IntSeq> wit = greedy_find(lambda, gp, lim);
            if (!wit) {
                std::cout << "no witness found up to k_max = " << gp.k_max << "\n";
                return kExitUnknown;
            }
            std::cout << "witness: " << to_string(std::span<const Int>(*wit)) << "\n";
            VerifyReport v = verify_witness(lambda, *wit);
            std::cout << (v.all_ok() ? "verified" : "VERIFICATION FAILED") << "\n";
            return v.all_ok() ? 0 : 1;
        }

        if (*cmd_families) {
            FamilySweepResult res = family_sweep(abc_bound, rstvw_bound);
            int verified = 0;
            for (const FamilyWitness& fw : res.witnesses)
                if (verify_witness(QuadNum(fw.lambda), fw.seq).all_ok()) ++verified;
            if (json_out) {
                nlohmann::json j{{"generated", res.generated},
                                 {"verified", verified},
                                 {"lambda_in_range", res.lambda_in_range},
                                 {"failures", res.failures}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "generated " << res.generated << " family witnesses, " << verified
                          << " verified, " << res.lambda_in_range << " with lambda in (-4,4)\n";
                for (const std::string& f : res.failures) std::cout << "failure: " << f << "\n";
            }
            return (res.all_ok() && verified == res.generated) ? 0 : 1;
        }

        if (*cmd_ident) {
            IdentitySuiteParams params;
            params.trials = static_cast<int>(trials);
            params.seed = seed;
            params.max_len = suite_max_len;
            params.coeff_bound = suite_coeff;
            IdentitySuiteReport rep = run_identity_suite(params);
            if (json_out) {
                std::cout << to_json(rep).dump(2) << "\n";
            } else {
                for (const IdentityResult& r : rep.results) {
                    std::cout << (r.failures ? "FAIL " : "ok   ") << r.name << " (" << r.trials
                              << " trials";
                    if (r.failures)
                        std::cout << ", " << r.failures
                                  << " failures, first seed = " << r.first_failure_seed;
                    std::cout << ")\n";
                }
                std::cout << (rep.all_pass() ? "all identities pass" : "FAILURES present") << "\n";
            }
            return rep.all_pass() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ZeroLambda& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return std::string(e.what()).rfind("io error", 0) == 0 ? kExitIo : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
