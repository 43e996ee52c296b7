#include "relnum/json_io.hpp"

namespace relnum {

using nlohmann::json;

namespace {

json quad_to_json(const QuadNum& x) { return to_string(x); }
QuadNum quad_from_json(const json& j) { return parse_quadnum(j.get<std::string>()); }

Verdict verdict_from_name(const std::string& s) {
    if (s == "relation_number") return Verdict::relation_number;
    if (s == "free_by_region") return Verdict::free_by_region;
    if (s == "unknown") return Verdict::unknown;
    throw ParseError("unknown verdict '" + s + "'");
}

Rational rational_from_string(const std::string& s) {
    QuadNum q = parse_quadnum(s);
    if (!q.is_rational()) throw ParseError("expected a rational");
    return q.a;
}

} // namespace

bool operator==(const MkLevel& a, const MkLevel& b) {
    return a.k == b.k && a.value == b.value && a.abs_sq == b.abs_sq && a.upper == b.upper &&
           a.attained == b.attained;
}

bool operator==(const MkLadder& a, const MkLadder& b) {
    return a.levels == b.levels && a.hit_infinity == b.hit_infinity;
}

bool operator==(const VerifyReport& a, const VerifyReport& b) {
    return a.s_zero == b.s_zero && a.wcf_infinite == b.wcf_infinite &&
           a.root_conditions == b.root_conditions && a.word_identity == b.word_identity;
}

bool operator==(const DecisionReport& a, const DecisionReport& b) {
    return a.lambda == b.lambda && a.verdict == b.verdict && a.witness == b.witness &&
           a.mindeg_lo == b.mindeg_lo && a.mindeg_hi == b.mindeg_hi && a.ladder == b.ladder &&
           a.elapsed_ms == b.elapsed_ms && a.k_max_used == b.k_max_used &&
           a.verification == b.verification;
}

json to_json(const VerifyReport& rep) {
    return json{{"s_zero", rep.s_zero},
                {"wcf_infinite", rep.wcf_infinite},
                {"root_conditions", rep.root_conditions},
                {"word_identity", rep.word_identity}};
}

VerifyReport verify_report_from_json(const json& j) {
    VerifyReport rep;
    rep.s_zero = j.at("s_zero").get<bool>();
    rep.wcf_infinite = j.at("wcf_infinite").get<bool>();
    rep.root_conditions = j.at("root_conditions").get<bool>();
    rep.word_identity = j.at("word_identity").get<bool>();
    return rep;
}

json to_json(const MkLadder& ladder) {
    json levels = json::array();
    for (const MkLevel& lv : ladder.levels) {
        levels.push_back(json{{"k", lv.k},
                              {"value", to_string(lv.value)},
                              {"abs_sq", to_string(lv.abs_sq)},
                              {"upper", to_string(lv.upper)},
                              {"attained", to_string(lv.attained)}});
    }
    return json{{"levels", std::move(levels)}, {"hit_infinity", ladder.hit_infinity}};
}

MkLadder mk_ladder_from_json(const json& j) {
    MkLadder ladder;
    ladder.hit_infinity = j.at("hit_infinity").get<bool>();
    for (const json& lj : j.at("levels")) {
        MkLevel lv;
        lv.k = lj.at("k").get<int>();
        lv.value = quad_from_json(lj.at("value"));
        lv.abs_sq = rational_from_string(lj.at("abs_sq").get<std::string>());
        lv.upper = rational_from_string(lj.at("upper").get<std::string>());
        lv.attained = parse_extseq(lj.at("attained").get<std::string>());
        ladder.levels.push_back(std::move(lv));
    }
    return ladder;
}

json to_json(const DecisionReport& rep) {
    json j{{"lambda", quad_to_json(rep.lambda)},
           {"verdict", verdict_name(rep.verdict)},
           {"mindeg_lo", rep.mindeg_lo},
           {"mindeg_hi", rep.mindeg_hi},
           {"ladder", to_json(rep.ladder)},
           {"elapsed_ms", rep.elapsed_ms},
           {"k_max_used", rep.k_max_used},
           {"verification", to_json(rep.verification)}};
    if (rep.witness) j["witness"] = to_string(std::span<const Int>(*rep.witness));
    else j["witness"] = nullptr;
    return j;
}

DecisionReport decision_report_from_json(const json& j) {
    DecisionReport rep;
    rep.lambda = quad_from_json(j.at("lambda"));
    rep.verdict = verdict_from_name(j.at("verdict").get<std::string>());
    rep.mindeg_lo = j.at("mindeg_lo").get<int>();
    rep.mindeg_hi = j.at("mindeg_hi").get<int>();
    rep.ladder = mk_ladder_from_json(j.at("ladder"));
    rep.elapsed_ms = j.at("elapsed_ms").get<double>();
    rep.k_max_used = j.at("k_max_used").get<int>();
    rep.verification = verify_report_from_json(j.at("verification"));
    if (!j.at("witness").is_null()) rep.witness = parse_intseq(j.at("witness").get<std::string>());
    return rep;
}

json to_json(const IdentitySuiteReport& rep) {
    json results = json::array();
    for (const IdentityResult& r : rep.results) {
        results.push_back(json{{"name", r.name},
                               {"trials", r.trials},
                               {"failures", r.failures},
                               {"first_failure_seed", r.first_failure_seed}});
    }
    return json{{"seed", rep.params.seed},
                {"trials", rep.params.trials},
                {"max_len", rep.params.max_len},
                {"coeff_bound", rep.params.coeff_bound},
                {"all_pass", rep.all_pass()},
                {"results", std::move(results)}};
}

json to_json(const RelationWord& word) {
    return json{{"word_exponents", to_string(std::span<const Int>(word.word_exponents))},
                {"word", word.word},
                {"commutator", word.commutator},
                {"identity_ok", word.identity_ok}};
}

} // namespace relnum
