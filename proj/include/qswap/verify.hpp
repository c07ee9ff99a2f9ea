#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qswap/bell.hpp"
#include "qswap/families.hpp"
#include "qswap/rng.hpp"
#include "qswap/state.hpp"
#include "qswap/swap_engine.hpp"

namespace qswap {

enum class FamilyKind { max_entangled, bell, ghz, ghz_class, cat_like };

std::string_view to_string(FamilyKind kind) noexcept;
std::string_view to_string(PairSpec::Kind kind) noexcept;
/// Accepts max, bell, ghz, ghz-class, cat-like. ConfigError otherwise.
FamilyKind parse_family_kind(std::string_view text);
PairSpec::Kind parse_pair_kind(std::string_view text);

/// Family of the given kind with randomly drawn parameters (phases, alphas,
/// shifts). The bell kind ignores n and always has arity 2.
QuditStateFamily random_family(FamilyKind kind, Dimension d, int n, Rng& rng);

// --- brute-force oracle --------------------------------------------------------

/// Labels of the oracle post-state of a single swap on an n-qudit family:
/// 1..n with the surviving partner qudit (label n+2) standing at `slot`.
std::vector<int> swap_output_labels(int n, int slot);

/// Literal simulation of a swap: expands A on labels 1..n and the pair on
/// n+1, n+2, Bell-projects (slot, n+1) and reorders to swap_output_labels.
Projection oracle_swap(const QuditStateFamily& a, const SwapStep& step);

/// Sequential simulation of several swaps. Fresh pairs get increasing labels
/// above n; the post-state is ordered by the family slots it now occupies.
/// probability is the joint probability of the outcome sequence.
Projection oracle_multi_swap(const QuditStateFamily& a, std::span<const SwapStep> steps);

/// Swapping chain of outcomes.size()+1 max pairs on labels (1,2), (3,4), ...
/// with Bell measurements on (2k, 2k+1). When full_register is set every pair
/// is expanded before the first measurement, otherwise pairs join lazily.
/// The post-state lives on labels (1, 2N).
Projection oracle_chain(Dimension d, std::span<const BellOutcome> outcomes,
                        bool full_register = false);

// --- case comparison -----------------------------------------------------------

struct Tolerances {
    double fidelity = 1e-10;
    double probability = 1e-10;
};

struct CaseDescriptor {
    FamilyKind kind = FamilyKind::max_entangled;
    int d = 2;
    int n = 2;
    int slot = 1;
    PairSpec pair;
    BellOutcome outcome;
};

enum class CaseStatus { passed, failed, skipped };

std::string_view to_string(CaseStatus status) noexcept;

struct CaseReport {
    CaseDescriptor descriptor;
    double probability_oracle = 0.0;
    double probability_expected = 0.0;
    double fidelity = 0.0;
    CaseStatus status = CaseStatus::failed;
    std::string note;
    std::chrono::nanoseconds elapsed{0};

    bool pass() const noexcept { return status == CaseStatus::passed; }
};

/// Compares an oracle branch with a predicted family. A branch where both
/// sides vanish is skipped; a branch where only one side vanishes fails.
CaseReport compare_case(const CaseDescriptor& descriptor, const Projection& oracle,
                        const std::optional<QuditStateFamily>& predicted,
                        double probability_expected, const Tolerances& tol);

/// oracle_swap against predict_swap for one case.
CaseReport verify_swap_case(const QuditStateFamily& a, const SwapStep& step,
                            const Tolerances& tol, CaseDescriptor descriptor);

// --- sweeps --------------------------------------------------------------------

enum class SweepMode { automatic, exhaustive, sampled };

std::string_view to_string(SweepMode mode) noexcept;

/// Groups with more than this many (slot, pair, outcome) cases are sampled in
/// automatic mode.
inline constexpr std::size_t kExhaustiveCaseLimit = 100'000;

struct SweepConfig {
    std::vector<int> dimensions;
    std::vector<FamilyKind> kinds;
    std::vector<int> arities;
    std::vector<PairSpec::Kind> pair_kinds{PairSpec::Kind::max_entangled, PairSpec::Kind::bell};
    SweepMode mode = SweepMode::automatic;
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    Tolerances tolerances;
    unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepReport {
    SweepConfig config;
    std::size_t total = 0;  // passed + failed; skipped branches are counted apart
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    std::vector<CaseReport> cases;
    double wall_ms = 0.0;

    std::vector<CaseReport> failures() const;
};

/// Runs every case of the configuration. Cases are generated in a fixed order,
/// each seeded from (config.seed, case index), so the report does not depend
/// on the thread count. Throws ConfigError / DimensionError on invalid input.
SweepReport run_sweep(const SweepConfig& config);

}  // namespace qswap
