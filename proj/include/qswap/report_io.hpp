#pragma once

#include <string>

#include "qswap/protocols.hpp"
#include "qswap/verify.hpp"

namespace qswap {

/// {config, totals, failures[], wall_ms}. wall_ms is the only wall-clock
/// dependent field and is omitted when with_timing is false.
std::string sweep_report_json(const SweepReport& report, bool with_timing = true);

/// Header plus one row per case: family,d,n,slot,pair,pair_u,pair_v,u,v,
/// probability_oracle,fidelity,pass (pass is true/false/skipped).
std::string sweep_report_csv(const SweepReport& report);

std::string case_report_json(const CaseReport& report);

std::string transcript_json(const SummationTranscript& t);
std::string transcript_json(const SecretSharingTranscript& t);

}  // namespace qswap
