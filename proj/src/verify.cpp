#include "qswap/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <numeric>
#include <thread>

#include "qswap/errors.hpp"

namespace qswap {

std::string_view to_string(FamilyKind kind) noexcept {
    switch (kind) {
        case FamilyKind::max_entangled: return "max";
        case FamilyKind::bell: return "bell";
        case FamilyKind::ghz: return "ghz";
        case FamilyKind::ghz_class: return "ghz-class";
        case FamilyKind::cat_like: return "cat-like";
    }
    return "?";
}

std::string_view to_string(PairSpec::Kind kind) noexcept {
    return kind == PairSpec::Kind::bell ? "bell" : "max";
}

std::string_view to_string(CaseStatus status) noexcept {
    switch (status) {
        case CaseStatus::passed: return "passed";
        case CaseStatus::failed: return "failed";
        case CaseStatus::skipped: return "skipped";
    }
    return "?";
}

std::string_view to_string(SweepMode mode) noexcept {
    switch (mode) {
        case SweepMode::automatic: return "auto";
        case SweepMode::exhaustive: return "exhaustive";
        case SweepMode::sampled: return "sampled";
    }
    return "?";
}

FamilyKind parse_family_kind(std::string_view text) {
    for (const auto k : {FamilyKind::max_entangled, FamilyKind::bell, FamilyKind::ghz,
                         FamilyKind::ghz_class, FamilyKind::cat_like}) {
        if (text == to_string(k)) {
            return k;
        }
    }
    throw ConfigError("unknown family kind '" + std::string(text) + "'");
}

PairSpec::Kind parse_pair_kind(std::string_view text) {
    if (text == "max") return PairSpec::Kind::max_entangled;
    if (text == "bell") return PairSpec::Kind::bell;
    throw ConfigError("unknown pair kind '" + std::string(text) + "'");
}

QuditStateFamily random_family(FamilyKind kind, Dimension d, int n, Rng& rng) {
    const int dd = d.value();
    const auto size = static_cast<std::size_t>(dd);
    switch (kind) {
        case FamilyKind::max_entangled:
            return make_max_entangled(d, n);
        case FamilyKind::bell: {
            const int u = rng.below(dd);
            const int v = rng.below(dd);
            return make_bell(d, ModInt(u, d), ModInt(v, d));
        }
        case FamilyKind::ghz: {
            std::vector<double> deltas(size);
            for (auto& x : deltas) x = 2.0 * std::numbers::pi * rng.uniform();
            return make_ghz(d, n, deltas);
        }
        case FamilyKind::ghz_class: {
            const ModInt mu1(rng.below(dd), d);
            std::vector<ModInt> mus;
            for (int k = 1; k < n; ++k) mus.emplace_back(rng.below(dd), d);
            std::vector<Amplitude> alphas(size);
            double norm2 = 0.0;
            for (auto& a : alphas) {
                a = std::polar(0.05 + 0.95 * rng.uniform(), 2.0 * std::numbers::pi * rng.uniform());
                norm2 += std::norm(a);
            }
            for (auto& a : alphas) a /= std::sqrt(norm2);
            return make_ghz_class(d, n, mu1, mus, alphas);
        }
        case FamilyKind::cat_like: {
            std::vector<Amplitude> omegas(size);
            for (auto& w : omegas) w = std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
            return make_cat_like(d, n, omegas);
        }
    }
    throw ConfigError("unhandled family kind");
}

std::vector<int> swap_output_labels(int n, int slot) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    std::iota(labels.begin(), labels.end(), 1);
    labels.at(static_cast<std::size_t>(slot - 1)) = n + 2;
    return labels;
}

Projection oracle_swap(const QuditStateFamily& a, const SwapStep& step) {
    const SwapStep steps[] = {step};
    return oracle_multi_swap(a, steps);
}

Projection oracle_multi_swap(const QuditStateFamily& a, std::span<const SwapStep> steps) {
    const int n = a.arity();
    std::vector<int> slot_labels(static_cast<std::size_t>(n));
    std::iota(slot_labels.begin(), slot_labels.end(), 1);
    PureState state = family_to_state(a, slot_labels);
    int next_label = n + 1;
    double probability = 1.0;
    for (const auto& step : steps) {
        if (step.slot < 1 || step.slot > n) {
            throw ConfigError("oracle: swap slot outside 1..n");
        }
        if (step.pair.dim() != a.dim()) {
            throw DimensionError("oracle: swap partner has a different dimension");
        }
        const int first = next_label;
        const int second = next_label + 1;
        next_label += 2;
        state = tensor(state, family_to_state(step.pair, {first, second}));
        auto& slot_label = slot_labels[static_cast<std::size_t>(step.slot - 1)];
        auto projection = bell_project(state, slot_label, first, step.outcome);
        probability *= projection.probability;
        if (!projection.post) {
            return {probability, std::nullopt};
        }
        state = std::move(*projection.post);
        slot_label = second;
    }
    return {probability, reorder(state, slot_labels)};
}

Projection oracle_chain(Dimension d, std::span<const BellOutcome> outcomes, bool full_register) {
    if (outcomes.empty()) {
        throw ConfigError("oracle_chain needs at least one intermediate measurement");
    }
    const int pairs = static_cast<int>(outcomes.size()) + 1;
    const auto max_pair = make_max_entangled(d, 2);
    PureState state = family_to_state(max_pair, {1, 2});
    if (full_register) {
        for (int k = 2; k <= pairs; ++k) {
            state = tensor(state, family_to_state(max_pair, {2 * k - 1, 2 * k}));
        }
    }
    double probability = 1.0;
    for (int k = 1; k < pairs; ++k) {
        if (!full_register) {
            state = tensor(state, family_to_state(max_pair, {2 * k + 1, 2 * k + 2}));
        }
        auto projection = bell_project(state, 2 * k, 2 * k + 1, outcomes[static_cast<std::size_t>(k - 1)]);
        probability *= projection.probability;
        if (!projection.post) {
            return {probability, std::nullopt};
        }
        state = std::move(*projection.post);
    }
    const int ends[] = {1, 2 * pairs};
    return {probability, reorder(state, ends)};
}

CaseReport compare_case(const CaseDescriptor& descriptor, const Projection& oracle,
                        const std::optional<QuditStateFamily>& predicted,
                        double probability_expected, const Tolerances& tol) {
    CaseReport report;
    report.descriptor = descriptor;
    report.probability_oracle = oracle.probability;
    report.probability_expected = probability_expected;
    if (!oracle.post && !predicted) {
        report.status = CaseStatus::skipped;
        report.note = "zero-probability outcome";
        return report;
    }
    if (!oracle.post || !predicted) {
        report.status = CaseStatus::failed;
        report.note = oracle.post ? "closed form vanishes but oracle branch does not"
                                  : "oracle branch vanishes but closed form does not";
        return report;
    }
    report.fidelity = fidelity_up_to_phase(*oracle.post, family_to_state(*predicted, oracle.post->labels()));
    const bool fidelity_ok = report.fidelity >= 1.0 - tol.fidelity;
    const bool probability_ok = std::abs(oracle.probability - probability_expected) <= tol.probability;
    report.status = fidelity_ok && probability_ok ? CaseStatus::passed : CaseStatus::failed;
    if (!fidelity_ok) {
        report.note = "fidelity below tolerance";
    } else if (!probability_ok) {
        report.note = "probability mismatch";
    }
    return report;
}

CaseReport verify_swap_case(const QuditStateFamily& a, const SwapStep& step, const Tolerances& tol,
                            CaseDescriptor descriptor) {
    const auto start = std::chrono::steady_clock::now();
    const auto oracle = oracle_swap(a, step);
    const double expected = predict_swap_probability(a, step);
    std::optional<QuditStateFamily> predicted;
    if (expected > kZeroProbability) {
        predicted = predict_swap(a, step);
    }
    auto report = compare_case(descriptor, oracle, predicted, expected, tol);
    report.elapsed = std::chrono::steady_clock::now() - start;
    return report;
}

std::vector<CaseReport> SweepReport::failures() const {
    std::vector<CaseReport> out;
    std::copy_if(cases.begin(), cases.end(), std::back_inserter(out),
                 [](const CaseReport& c) { return c.status == CaseStatus::failed; });
    return out;
}

namespace {

struct PlannedCase {
    CaseDescriptor descriptor;
    std::uint64_t seed;
};

std::vector<PairSpec> pair_configs(Dimension d, std::span<const PairSpec::Kind> kinds) {
    std::vector<PairSpec> out;
    for (const auto kind : kinds) {
        if (kind == PairSpec::Kind::max_entangled) {
            out.push_back(PairSpec::max_entangled());
        } else {
            for (int u = 0; u < d.value(); ++u) {
                for (int v = 0; v < d.value(); ++v) {
                    out.push_back(PairSpec::bell(u, v));
                }
            }
        }
    }
    return out;
}

void validate(const SweepConfig& config) {
    for (const int d : config.dimensions) {
        (void)Dimension(d);
    }
    for (const int n : config.arities) {
        if (n < 1) {
            throw ConfigError("sweep arity must be at least 1");
        }
        for (const int d : config.dimensions) {
            (void)register_size(Dimension(d), static_cast<std::size_t>(n) + 2);
        }
    }
    if (config.mode == SweepMode::sampled && config.samples == 0) {
        throw ConfigError("sampled sweep needs a positive sample count");
    }
    if (config.tolerances.fidelity < 0.0 || config.tolerances.probability < 0.0) {
        throw ConfigError("tolerances must be non-negative");
    }
}

std::vector<PlannedCase> plan(const SweepConfig& config) {
    std::vector<PlannedCase> cases;
    std::uint64_t group = 0;
    for (const int dv : config.dimensions) {
        const Dimension d(dv);
        const auto pairs = pair_configs(d, config.pair_kinds);
        const auto outcome_count = static_cast<std::size_t>(dv * dv);
        for (const auto kind : config.kinds) {
            std::vector<int> arities = config.arities;
            if (kind == FamilyKind::bell) {
                arities = config.arities.empty() ? std::vector<int>{} : std::vector<int>{2};
            }
            for (const int n : arities) {
                ++group;
                const std::size_t group_size = static_cast<std::size_t>(n) * pairs.size() * outcome_count;
                const bool exhaustive =
                    config.mode == SweepMode::exhaustive ||
                    (config.mode == SweepMode::automatic && group_size <= kExhaustiveCaseLimit);
                auto add = [&](int slot, const PairSpec& pair, BellOutcome outcome) {
                    const auto index = static_cast<std::uint64_t>(cases.size());
                    cases.push_back({{kind, dv, n, slot, pair, outcome}, derive_seed(config.seed, index)});
                };
                if (group_size == 0) {
                    continue;
                }
                if (exhaustive) {
                    for (int slot = 1; slot <= n; ++slot) {
                        for (const auto& pair : pairs) {
                            for (std::size_t o = 0; o < outcome_count; ++o) {
                                add(slot, pair, BellDistribution::outcome_at(d, o));
                            }
                        }
                    }
                } else {
                    Rng rng(RandomSeed{derive_seed(~config.seed, group)});
                    for (std::size_t s = 0; s < config.samples; ++s) {
                        const int slot = 1 + rng.below(n);
                        const auto& pair = pairs[static_cast<std::size_t>(rng.below(static_cast<int>(pairs.size())))];
                        const int u = rng.below(dv);
                        const int v = rng.below(dv);
                        add(slot, pair, {u, v});
                    }
                }
            }
        }
    }
    return cases;
}

CaseReport run_planned(const PlannedCase& planned, const Tolerances& tol) {
    const auto& desc = planned.descriptor;
    const Dimension d(desc.d);
    Rng rng(RandomSeed{planned.seed});
    const auto family = random_family(desc.kind, d, desc.n, rng);
    const SwapStep step{desc.slot, desc.pair.family(d), desc.outcome};
    return verify_swap_case(family, step, tol, desc);
}

}  // namespace

SweepReport run_sweep(const SweepConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    validate(config);
    const auto planned = plan(config);

    SweepReport report;
    report.config = config;
    report.cases.resize(planned.size());

    unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(planned.size(), 1)));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    auto worker = [&] {
        try {
            for (std::size_t i = next.fetch_add(1); i < planned.size(); i = next.fetch_add(1)) {
                report.cases[i] = run_planned(planned[i], config.tolerances);
            }
        } catch (...) {
            const std::lock_guard lock(error_mutex);
            if (!error) {
                error = std::current_exception();
            }
            next = planned.size();
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (error) {
        std::rethrow_exception(error);
    }

    for (const auto& c : report.cases) {
        switch (c.status) {
            case CaseStatus::passed: ++report.passed; break;
            case CaseStatus::failed: ++report.failed; break;
            case CaseStatus::skipped: ++report.skipped; break;
        }
    }
    report.total = report.passed + report.failed;
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace qswap
