#include <algorithm>
#include <cmath>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "qswap/errors.hpp"
#include "qswap/report_io.hpp"
#include "qswap/verify.hpp"
#include "test_support.hpp"

using namespace qswap;

namespace {

CaseDescriptor describe(FamilyKind kind, const QuditStateFamily& a, const SwapStep& step, PairSpec pair) {
    return {kind, a.dim().value(), a.arity(), step.slot, pair, step.outcome};
}

SweepConfig small_config() {
    SweepConfig c;
    c.dimensions = {2, 3};
    c.kinds = {FamilyKind::max_entangled, FamilyKind::ghz_class, FamilyKind::cat_like};
    c.arities = {2, 3};
    c.mode = SweepMode::sampled;
    c.samples = 40;
    c.seed = 99;
    return c;
}

}  // namespace

TEST_CASE("oracle_swap on two max pairs") {
    const Dimension two(2);
    const auto max2 = make_max_entangled(two, 2);
    const auto r = oracle_swap(max2, {2, max2, {0, 0}});
    CHECK(r.probability == doctest::Approx(0.25).epsilon(1e-14));
    REQUIRE(r.post);
    CHECK(r.post->labels() == swap_output_labels(2, 2));
    CHECK(fidelity_up_to_phase(*r.post, family_to_state(max2, {1, 4})) >= 1.0 - 1e-12);

    const Dimension five(5);
    const auto max5 = make_max_entangled(five, 2);
    for (int u = 0; u < 5; ++u) {
        for (int v = 0; v < 5; ++v) {
            CHECK(std::abs(oracle_swap(max5, {1, max5, {u, v}}).probability - 0.04) < 1e-12);
        }
    }
}

TEST_CASE("swap_output_labels puts the partner at the measured slot") {
    CHECK(swap_output_labels(3, 1) == std::vector<int>{5, 2, 3});
    CHECK(swap_output_labels(3, 2) == std::vector<int>{1, 5, 3});
    CHECK(swap_output_labels(1, 1) == std::vector<int>{3});
}

TEST_CASE("product GHZ-class input has vanishing branches that are skipped") {
    const Dimension two(2);
    const Amplitude product[] = {1.0, 0.0};
    const std::vector<ModInt> mus{ModInt(0, two)};
    const auto a = make_ghz_class(two, 2, ModInt(0, two), mus, product);
    int skipped = 0;
    for (int u = 0; u < 2; ++u) {
        for (int v = 0; v < 2; ++v) {
            const SwapStep step{1, a, {u, v}};
            const auto report = verify_swap_case(a, step, {}, describe(FamilyKind::ghz_class, a, step, {}));
            if (v == 1) {
                CHECK(report.probability_oracle == 0.0);
                CHECK(report.status == CaseStatus::skipped);
                CHECK_FALSE(report.note.empty());
                ++skipped;
            } else {
                CHECK(report.status == CaseStatus::passed);
            }
        }
    }
    CHECK(skipped == 2);
}

TEST_CASE("verify_swap_case passes max x max cases") {
    for (int d = 2; d <= 4; ++d) {
        const Dimension dim(d);
        const auto a = make_max_entangled(dim, 2);
        for (int u = 0; u < d; ++u) {
            for (int v = 0; v < d; ++v) {
                const SwapStep step{2, a, {u, v}};
                const auto r = verify_swap_case(a, step, {}, describe(FamilyKind::max_entangled, a, step, {}));
                CHECK(r.pass());
                CHECK(r.fidelity >= 1.0 - 1e-10);
                CHECK(std::abs(r.probability_expected - 1.0 / (d * d)) < 1e-12);
            }
        }
    }
}

TEST_CASE("compare_case: mismatched outcome gives fidelity 0 and fails") {
    const Dimension two(2);
    const auto max2 = make_max_entangled(two, 2);
    const auto oracle = oracle_swap(max2, {2, max2, {0, 1}});
    const auto predicted = predict_swap(max2, {2, max2, {0, 0}});
    const auto r = compare_case({}, oracle, predicted, 0.25, {});
    CHECK(r.fidelity < 1e-12);
    CHECK(r.status == CaseStatus::failed);

    const auto one_sided = compare_case({}, oracle, std::nullopt, 0.0, {});
    CHECK(one_sided.status == CaseStatus::failed);
    const auto wrong_probability = compare_case({}, oracle, predict_swap(max2, {2, max2, {0, 1}}), 0.5, {});
    CHECK(wrong_probability.fidelity >= 1.0 - 1e-12);
    CHECK(wrong_probability.status == CaseStatus::failed);
}

TEST_CASE("oracle outcome probabilities are uniform with Bell-type partners and sum to one") {
    Rng rng(RandomSeed{5});
    for (int d = 2; d <= 4; ++d) {
        const Dimension dim(d);
        for (const auto kind : {FamilyKind::max_entangled, FamilyKind::bell, FamilyKind::ghz,
                                FamilyKind::ghz_class, FamilyKind::cat_like}) {
            const auto a = random_family(kind, dim, 3, rng);
            const auto pair = PairSpec::bell(rng.below(d), rng.below(d)).family(dim);
            const int slot = 1 + rng.below(a.arity());
            double total = 0.0;
            for (int u = 0; u < d; ++u) {
                for (int v = 0; v < d; ++v) {
                    const double p = oracle_swap(a, {slot, pair, {u, v}}).probability;
                    CHECK(std::abs(p - 1.0 / (d * d)) < 1e-10);
                    total += p;
                }
            }
            CHECK(std::abs(total - 1.0) < 1e-9);
        }
    }
}

TEST_CASE("outcome probabilities sum to one for a general partner") {
    const Dimension three(3);
    Rng rng(RandomSeed{6});
    const auto a = random_family(FamilyKind::ghz_class, three, 3, rng);
    const auto pair = random_family(FamilyKind::ghz_class, three, 2, rng);
    double total = 0.0;
    for (int u = 0; u < 3; ++u) {
        for (int v = 0; v < 3; ++v) total += oracle_swap(a, {2, pair, {u, v}}).probability;
    }
    CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("oracle post-state does not depend on expansion labels") {
    Rng rng(RandomSeed{8});
    const Dimension three(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_family(FamilyKind::ghz_class, three, 3, rng);
        const auto pair = PairSpec::bell(rng.below(3), rng.below(3)).family(three);
        const int slot = 1 + rng.below(3);
        const BellOutcome o{rng.below(3), rng.below(3)};
        const auto reference = oracle_swap(a, {slot, pair, o});
        REQUIRE(reference.post);

        // Same physical setup, different labels and a different tensor order.
        const std::vector<int> a_labels{40, 10, 30};
        const std::vector<int> p_labels{77, 5};
        const auto joint = tensor(family_to_state(pair, p_labels), family_to_state(a, a_labels));
        const auto projected = bell_project(joint, a_labels[static_cast<std::size_t>(slot - 1)], 77, o);
        REQUIRE(projected.post);
        CHECK(std::abs(projected.probability - reference.probability) < 1e-12);
        std::vector<int> order = a_labels;
        order[static_cast<std::size_t>(slot - 1)] = 5;
        const auto relabeled = reorder(*projected.post, order);
        double overlap = 0.0;
        {
            Amplitude acc = 0.0;
            for (std::size_t i = 0; i < relabeled.amplitudes().size(); ++i) {
                acc += std::conj(relabeled.amplitudes()[i]) * reference.post->amplitudes()[i];
            }
            overlap = std::abs(acc);
        }
        CHECK(overlap >= 1.0 - 1e-12);
    }
}

TEST_CASE("run_sweep: exhaustive bipartite sweep has no failures") {
    SweepConfig c;
    c.dimensions = {2, 3};
    c.kinds = {FamilyKind::max_entangled, FamilyKind::bell};
    c.arities = {2};
    c.mode = SweepMode::exhaustive;
    const auto r = run_sweep(c);
    CHECK(r.failed == 0);
    CHECK(r.total == r.passed + r.failed);
    // per kind: n * (1 + d^2) pairs * d^2 outcomes
    CHECK(r.cases.size() == 2 * (2 * 5 * 4 + 2 * 10 * 9));
    for (const auto& cr : r.cases) {
        CHECK(std::abs(cr.probability_oracle - 1.0 / (cr.descriptor.d * cr.descriptor.d)) < 1e-10);
    }
}

TEST_CASE("run_sweep is deterministic across reruns and thread counts") {
    auto c = small_config();
    c.threads = 1;
    const auto a = run_sweep(c);
    c.threads = 4;
    const auto b = run_sweep(c);
    const auto again = run_sweep(c);
    CHECK(a.cases.size() == 2 * 3 * 2 * 40);
    CHECK(sweep_report_json(a, false) == sweep_report_json(b, false));
    CHECK(sweep_report_csv(a) == sweep_report_csv(b));
    CHECK(sweep_report_csv(b) == sweep_report_csv(again));
    CHECK(a.failed == 0);
}

TEST_CASE("run_sweep: empty configuration") {
    SweepConfig c;
    const auto r = run_sweep(c);
    CHECK(r.total == 0);
    CHECK(r.cases.empty());
    c.dimensions = {3};
    c.arities = {2};
    CHECK(run_sweep(c).total == 0);
}

TEST_CASE("run_sweep rejects invalid configurations") {
    SweepConfig c = small_config();
    c.dimensions = {1};
    CHECK_THROWS_AS(run_sweep(c), DimensionError);
    c = small_config();
    c.arities = {0};
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c = small_config();
    c.samples = 0;
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c = small_config();
    c.tolerances.fidelity = -1.0;
    CHECK_THROWS_AS(run_sweep(c), ConfigError);
    c = small_config();
    c.dimensions = {16};
    c.arities = {6};
    CHECK_THROWS_AS(run_sweep(c), RegisterError);
}

TEST_CASE("automatic mode samples oversized groups") {
    SweepConfig c;
    c.dimensions = {5};
    c.kinds = {FamilyKind::max_entangled};
    c.arities = {2};
    c.pair_kinds = {PairSpec::Kind::bell};
    c.samples = 30;
    // 2 * 25 * 25 = 1250 cases: enumerated
    CHECK(run_sweep(c).cases.size() == 1250);
    c.dimensions = {16};
    // 2 * 256 * 256 > limit: sampled
    CHECK(run_sweep(c).cases.size() == 30);
}

TEST_CASE("sweep report serialization") {
    const auto r = run_sweep(small_config());
    const auto j = nlohmann::json::parse(sweep_report_json(r));
    CHECK(j.contains("config"));
    CHECK(j.contains("wall_ms"));
    CHECK(j["totals"]["total"] == r.total);
    CHECK(j["totals"]["passed"] == r.passed);
    CHECK(j["totals"]["failed"] == 0);
    CHECK(j["failures"].is_array());
    CHECK_FALSE(nlohmann::json::parse(sweep_report_json(r, false)).contains("wall_ms"));

    std::istringstream csv(sweep_report_csv(r));
    std::string header;
    std::getline(csv, header);
    CHECK(header == "family,d,n,slot,pair,pair_u,pair_v,u,v,probability_oracle,fidelity,pass");
    std::size_t rows = 0;
    for (std::string line; std::getline(csv, line);) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 11);
    }
    CHECK(rows == r.cases.size());
}

TEST_CASE("failing cases are listed in the report") {
    auto c = small_config();
    c.kinds = {FamilyKind::max_entangled};
    c.dimensions = {2};
    const auto clean = run_sweep(c);
    REQUIRE(clean.failed == 0);
    const auto& any = clean.cases.front();
    const Dimension two(2);
    const auto max2 = make_max_entangled(two, 2);
    const auto oracle = oracle_swap(max2, {2, max2, {0, 1}});
    SweepReport report = clean;
    report.cases.push_back(compare_case(any.descriptor, oracle, predict_swap(max2, {2, max2, {0, 0}}), 0.25, {}));
    report.failed = 1;
    report.total += 1;
    const auto j = nlohmann::json::parse(sweep_report_json(report, false));
    REQUIRE(j["failures"].size() == 1);
    CHECK(j["failures"][0]["status"] == "failed");
}

TEST_CASE("family kind names round-trip") {
    for (const auto kind : {FamilyKind::max_entangled, FamilyKind::bell, FamilyKind::ghz,
                            FamilyKind::ghz_class, FamilyKind::cat_like}) {
        CHECK(parse_family_kind(to_string(kind)) == kind);
    }
    CHECK(parse_pair_kind("bell") == PairSpec::Kind::bell);
    CHECK_THROWS_AS(parse_family_kind("w-state"), ConfigError);
}
