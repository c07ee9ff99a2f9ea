#include "qswap/report_io.hpp"

#include <sstream>

#include "json.hpp"
#include "qswap/format.hpp"

namespace qswap {

namespace {

using Json = nlohmann::ordered_json;

Json outcome_json(BellOutcome o) { return Json::array({o.u, o.v}); }

Json descriptor_json(const CaseDescriptor& c) {
    Json j;
    j["family"] = to_string(c.kind);
    j["d"] = c.d;
    j["n"] = c.n;
    j["slot"] = c.slot;
    j["pair"] = to_string(c.pair.kind);
    if (c.pair.kind == PairSpec::Kind::bell) {
        j["pair_u"] = c.pair.u;
        j["pair_v"] = c.pair.v;
    }
    j["outcome"] = outcome_json(c.outcome);
    return j;
}

Json case_json(const CaseReport& r) {
    Json j = descriptor_json(r.descriptor);
    j["probability_oracle"] = round_significant(r.probability_oracle);
    j["probability_expected"] = round_significant(r.probability_expected);
    j["fidelity"] = round_significant(r.fidelity);
    j["status"] = to_string(r.status);
    if (!r.note.empty()) {
        j["note"] = r.note;
    }
    return j;
}

Json config_json(const SweepConfig& c) {
    Json j;
    j["dimensions"] = c.dimensions;
    Json kinds = Json::array();
    for (const auto k : c.kinds) kinds.push_back(to_string(k));
    j["families"] = kinds;
    j["arities"] = c.arities;
    Json pairs = Json::array();
    for (const auto k : c.pair_kinds) pairs.push_back(to_string(k));
    j["pairs"] = pairs;
    j["mode"] = to_string(c.mode);
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["fidelity_tol"] = c.tolerances.fidelity;
    j["prob_tol"] = c.tolerances.probability;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string sweep_report_json(const SweepReport& report, bool with_timing) {
    Json j;
    j["config"] = config_json(report.config);
    j["totals"] = {{"total", report.total},
                   {"passed", report.passed},
                   {"failed", report.failed},
                   {"skipped", report.skipped}};
    Json failures = Json::array();
    for (const auto& c : report.cases) {
        if (c.status == CaseStatus::failed) {
            failures.push_back(case_json(c));
        }
    }
    j["failures"] = failures;
    if (with_timing) {
        j["wall_ms"] = round_significant(report.wall_ms);
    }
    return dump(j);
}

std::string sweep_report_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "family,d,n,slot,pair,pair_u,pair_v,u,v,probability_oracle,fidelity,pass\n";
    for (const auto& c : report.cases) {
        const auto& k = c.descriptor;
        out << to_string(k.kind) << ',' << k.d << ',' << k.n << ',' << k.slot << ','
            << to_string(k.pair.kind) << ',' << k.pair.u << ',' << k.pair.v << ',' << k.outcome.u << ','
            << k.outcome.v << ',' << format_number(c.probability_oracle) << ','
            << format_number(c.fidelity) << ','
            << (c.status == CaseStatus::skipped ? "skipped" : (c.pass() ? "true" : "false")) << '\n';
    }
    return out.str();
}

std::string case_report_json(const CaseReport& report) { return dump(case_json(report)); }

std::string transcript_json(const SummationTranscript& t) {
    Json j;
    j["protocol"] = "summation";
    j["d"] = t.d;
    j["n"] = t.n;
    j["seed"] = t.seed;
    Json parties = Json::array();
    for (std::size_t k = 0; k < t.secrets.size(); ++k) {
        parties.push_back({{"secret", t.secrets[k]},
                           {"preparation", outcome_json(t.preparations[k])},
                           {"outcome", outcome_json(t.outcomes[k])}});
    }
    j["parties"] = parties;
    j["announced_sum"] = t.announced_sum;
    j["tp_base"] = t.tp_base;
    j["tp_results"] = t.tp_results;
    j["tp_sum"] = t.tp_sum;
    j["expected_sum"] = t.expected_sum;
    j["correct"] = t.correct();
    return dump(j);
}

std::string transcript_json(const SecretSharingTranscript& t) {
    Json j;
    j["protocol"] = "secret-sharing";
    j["d"] = t.d;
    j["n"] = t.n;
    j["seed"] = t.seed;
    j["alice_base"] = t.alice_base;
    j["alice_results"] = t.alice_results;
    Json outcomes = Json::array();
    for (const auto& o : t.bob_outcomes) outcomes.push_back(outcome_json(o));
    j["bob_outcomes"] = outcomes;
    j["shares"] = t.shares;
    j["alice_secret"] = t.alice_secret;
    j["reconstructed"] = t.reconstructed;
    j["consistent"] = t.consistent();
    return dump(j);
}

}  // namespace qswap
