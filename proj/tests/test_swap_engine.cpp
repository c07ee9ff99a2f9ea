#include <array>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qswap/errors.hpp"
#include "qswap/swap_engine.hpp"
#include "qswap/swap_formulas.hpp"
#include "qswap/verify.hpp"
#include "test_support.hpp"

using namespace qswap;

namespace {

Amplitude zeta(int d, long long k) { return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(k) / d); }

void check_coefficients(const QuditStateFamily& f, std::initializer_list<Amplitude> expected) {
    int j = 0;
    for (const auto& c : expected) {
        CHECK(std::abs(f.coefficient(j) - c) < 1e-12);
        ++j;
    }
}

void check_shifts(const QuditStateFamily& f, std::initializer_list<int> expected) {
    CHECK(std::vector<int>(f.shifts().begin(), f.shifts().end()) == std::vector<int>(expected));
}

/// Oracle post-state vs predicted family; the oracle is the literal simulation.
double oracle_fidelity(const QuditStateFamily& a, const SwapStep& step) {
    const auto oracle = oracle_swap(a, step);
    REQUIRE(oracle.post);
    return fidelity_up_to_phase(*oracle.post, family_to_state(predict_swap(a, step), oracle.post->labels()));
}

}  // namespace

TEST_CASE("predict_swap: two max pairs with trivial outcome") {
    const Dimension two(2);
    const auto max = make_max_entangled(two, 2);
    const SwapStep step{2, max, {0, 0}};
    CHECK(same_family(predict_swap(max, step), max));
    CHECK(predict_swap_probability(max, step) == doctest::Approx(0.25));
    CHECK(oracle_fidelity(max, step) >= 1.0 - 1e-12);
}

TEST_CASE("predict_swap: max with Bell partner, d=3") {
    const Dimension three(3);
    const auto a = make_max_entangled(three, 2);
    const SwapStep step{2, make_bell(three, ModInt(1, three), ModInt(2, three)), {2, 2}};
    const auto f = predict_swap(a, step);
    const double r = 1.0 / std::sqrt(3.0);
    check_coefficients(f, {r, r * zeta(3, 2), r * zeta(3, 4)});
    check_shifts(f, {0, 1});
    CHECK(oracle_fidelity(a, step) >= 1.0 - 1e-12);
}

TEST_CASE("predict_swap: GHZ-class with max partner") {
    const Dimension two(2);
    const Amplitude alpha[] = {0.6, 0.8};
    const std::vector<ModInt> mus{ModInt(1, two)};
    const auto a = make_ghz_class(two, 2, ModInt(0, two), mus, alpha);
    const SwapStep step{2, make_max_entangled(two, 2), {1, 0}};
    const auto f = predict_swap(a, step);
    check_coefficients(f, {0.6, -0.8});
    check_shifts(f, {0, 1});
    CHECK(oracle_fidelity(a, step) >= 1.0 - 1e-12);
}

TEST_CASE("predict_swap reproduces the max/max and max/Bell closed forms symbolically") {
    for (int d = 2; d <= 5; ++d) {
        const Dimension dim(d);
        const double r = 1.0 / std::sqrt(d);
        for (int n = 2; n <= 4; ++n) {
            const auto a = make_max_entangled(dim, n);
            for (int s = 2; s <= n; ++s) {
                for (int u = 0; u < d; ++u) {
                    for (int v = 0; v < d; ++v) {
                        // Max partner: zeta^{-j u'}, slot shift v'.
                        const auto f = predict_swap(a, {s, make_max_entangled(dim, 2), {u, v}});
                        for (int j = 0; j < d; ++j) {
                            CHECK(std::abs(f.coefficient(j) - r * zeta(d, -j * u)) < 1e-12);
                        }
                        for (int k = 1; k <= n; ++k) {
                            CHECK(f.shift(k) == (k == s ? v : 0));
                        }
                        // Bell partner (pu, pv): zeta^{j(pu - u')}, slot shift pv + v'.
                        const int pu = (u + 1) % d;
                        const int pv = (v + 2) % d;
                        const auto g = predict_swap(a, {s, make_bell(dim, ModInt(pu, dim), ModInt(pv, dim)), {u, v}});
                        for (int j = 0; j < d; ++j) {
                            CHECK(std::abs(g.coefficient(j) - r * zeta(d, j * (pu - u))) < 1e-12);
                        }
                        CHECK(g.shift(s) == (pv + v) % d);
                    }
                }
            }
        }
    }
}

TEST_CASE("predict_swap agrees with the per-family closed forms") {
    Rng rng(RandomSeed{9});
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 2 + trial % 4;
        const Dimension dim(d);
        const int n = 1 + trial % 4;
        const int slot = 1 + rng.below(n);
        const PairSpec pair = trial % 2 ? PairSpec::bell(rng.below(d), rng.below(d)) : PairSpec::max_entangled();
        const BellOutcome o{rng.below(d), rng.below(d)};
        const SwapStep step{slot, pair.family(dim), o};

        std::vector<double> deltas(static_cast<std::size_t>(d));
        std::vector<Amplitude> omegas(static_cast<std::size_t>(d)), alphas(static_cast<std::size_t>(d));
        double norm2 = 0.0;
        for (int j = 0; j < d; ++j) {
            deltas[static_cast<std::size_t>(j)] = 6.283 * rng.uniform();
            omegas[static_cast<std::size_t>(j)] = std::polar(1.0, 6.283 * rng.uniform());
            alphas[static_cast<std::size_t>(j)] = std::polar(0.1 + rng.uniform(), 6.283 * rng.uniform());
            norm2 += std::norm(alphas[static_cast<std::size_t>(j)]);
        }
        for (auto& a : alphas) a /= std::sqrt(norm2);
        const int mu1 = rng.below(d);
        std::vector<int> mus;
        std::vector<ModInt> mod_mus;
        for (int k = 1; k < n; ++k) {
            mus.push_back(rng.below(d));
            mod_mus.emplace_back(mus.back(), dim);
        }

        CHECK(same_family(predict_swap(make_max_entangled(dim, n), step),
                          formulas::max_entangled_swap(dim, n, slot, pair, o), 1e-10));
        CHECK(same_family(predict_swap(make_ghz(dim, n, deltas), step),
                          formulas::ghz_swap(dim, n, deltas, slot, pair, o), 1e-10));
        CHECK(same_family(predict_swap(make_cat_like(dim, n, omegas), step),
                          formulas::cat_like_swap(dim, n, omegas, slot, pair, o), 1e-10));
        CHECK(same_family(predict_swap(make_ghz_class(dim, n, ModInt(mu1, dim), mod_mus, alphas), step),
                          formulas::ghz_class_swap(dim, n, mu1, mus, alphas, slot, pair, o), 1e-10));
    }
}

TEST_CASE("oracle equivalence over families, slots, partners and outcomes") {
    Rng rng(RandomSeed{2718});
    for (int d = 2; d <= 5; ++d) {
        const Dimension dim(d);
        for (const auto kind : {FamilyKind::max_entangled, FamilyKind::bell, FamilyKind::ghz,
                                FamilyKind::ghz_class, FamilyKind::cat_like}) {
            const auto a = random_family(kind, dim, 3, rng);
            for (int slot = 1; slot <= a.arity(); ++slot) {
                for (const auto& pair : {PairSpec::max_entangled(), PairSpec::bell(rng.below(d), rng.below(d))}) {
                    for (int u = 0; u < d; ++u) {
                        for (int v = 0; v < d; ++v) {
                            CHECK(oracle_fidelity(a, {slot, pair.family(dim), {u, v}}) >= 1.0 - 1e-10);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("max, GHZ and cat-like inputs keep flat coefficient magnitudes") {
    Rng rng(RandomSeed{17});
    for (int trial = 0; trial < 100; ++trial) {
        const int d = 2 + trial % 5;
        const Dimension dim(d);
        const auto kind = std::array{FamilyKind::max_entangled, FamilyKind::ghz, FamilyKind::cat_like}[trial % 3];
        const auto a = random_family(kind, dim, 3, rng);
        const SwapStep step{1 + rng.below(3), PairSpec::bell(rng.below(d), rng.below(d)).family(dim),
                            {rng.below(d), rng.below(d)}};
        const auto f = predict_swap(a, step);
        for (const auto& c : f.coefficients()) {
            CHECK(std::abs(std::abs(c) - 1.0 / std::sqrt(d)) < 1e-12);
        }
    }
}

TEST_CASE("general pair families use both pair shifts") {
    // Partner with a nonzero second shift and non-flat coefficients.
    const Dimension three(3);
    const std::vector<ModInt> mus{ModInt(2, three)};
    const Amplitude beta[] = {0.2, Amplitude(0.0, 0.4), std::sqrt(0.8)};
    const auto pair = make_ghz_class(three, 2, ModInt(1, three), mus, beta);
    Rng rng(RandomSeed{1});
    const auto a = random_family(FamilyKind::ghz_class, three, 3, rng);
    for (int slot = 1; slot <= 3; ++slot) {
        for (int u = 0; u < 3; ++u) {
            for (int v = 0; v < 3; ++v) {
                const SwapStep step{slot, pair, {u, v}};
                const auto oracle = oracle_swap(a, step);
                CHECK(oracle.probability == doctest::Approx(predict_swap_probability(a, step)).epsilon(1e-12));
                CHECK(oracle_fidelity(a, step) >= 1.0 - 1e-10);
            }
        }
    }
}

TEST_CASE("zero-probability outcomes are signalled") {
    const Dimension two(2);
    const Amplitude product[] = {1.0, 0.0};
    const std::vector<ModInt> mus{ModInt(0, two)};
    const auto a = make_ghz_class(two, 2, ModInt(0, two), mus, product);
    // |00> (x) |00>: measuring (qudit 2, pair qudit 1) can only give v = 0.
    const SwapStep step{2, a, {0, 1}};
    CHECK(predict_swap_probability(a, step) == 0.0);
    CHECK_THROWS_AS(predict_swap(a, step), ZeroProbabilityError);
    CHECK_FALSE(oracle_swap(a, step).post);
}

TEST_CASE("predict_swap rejects malformed steps") {
    const Dimension two(2);
    const auto a = make_max_entangled(two, 2);
    CHECK_THROWS_AS(predict_swap(a, {3, a, {0, 0}}), ConfigError);
    CHECK_THROWS_AS(predict_swap(a, {0, a, {0, 0}}), ConfigError);
    CHECK_THROWS_AS(predict_swap(a, {1, make_max_entangled(two, 3), {0, 0}}), ConfigError);
    CHECK_THROWS_AS(predict_swap(a, {1, make_max_entangled(Dimension(3), 2), {0, 0}}), DimensionError);
    CHECK_THROWS_AS(predict_swap(a, {1, a, {2, 0}}), DimensionError);
}

TEST_CASE("predict_multi_swap examples") {
    const Dimension two(2);
    const auto max2 = make_max_entangled(two, 2);
    const std::vector<SwapStep> steps{{1, max2, {1, 0}}, {2, max2, {0, 1}}};
    const auto f = predict_multi_swap(max2, steps);
    const double h = 1.0 / std::sqrt(2.0);
    check_coefficients(f, {h, -h});
    check_shifts(f, {0, 1});
    const auto oracle = oracle_multi_swap(max2, steps);
    REQUIRE(oracle.post);
    CHECK(fidelity_up_to_phase(*oracle.post, family_to_state(f, oracle.post->labels())) >= 1.0 - 1e-12);
    CHECK(oracle.probability == doctest::Approx(1.0 / 16));

    const std::vector<SwapStep> trivial{{1, max2, {0, 0}}, {2, max2, {0, 0}}};
    CHECK(same_family(predict_multi_swap(max2, trivial), max2));
    CHECK(same_family(predict_multi_swap(max2, {}), max2));
}

TEST_CASE("predict_multi_swap over every qudit matches the all-slot closed form") {
    const Dimension three(3);
    Rng rng(RandomSeed{314});
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<PairSpec> pairs;
        std::vector<BellOutcome> outcomes;
        std::vector<SwapStep> steps;
        for (int k = 1; k <= 3; ++k) {
            pairs.push_back(PairSpec::bell(rng.below(3), rng.below(3)));
            outcomes.push_back({rng.below(3), rng.below(3)});
            steps.push_back({k, pairs.back().family(three), outcomes.back()});
        }
        const auto f = predict_multi_swap(make_max_entangled(three, 3), steps);
        CHECK(same_family(f, formulas::all_slots_swap(three, pairs, outcomes), 1e-10));
        const auto oracle = oracle_multi_swap(make_max_entangled(three, 3), steps);
        REQUIRE(oracle.post);
        CHECK(fidelity_up_to_phase(*oracle.post, family_to_state(f, oracle.post->labels())) >= 1.0 - 1e-10);
    }
}

TEST_CASE("predict_chain examples") {
    const Dimension two(2);
    const BellOutcome o1[] = {{0, 1}, {1, 0}};
    const double h = 1.0 / std::sqrt(2.0);
    const auto f = predict_chain(two, o1);
    check_coefficients(f, {h, -h});
    check_shifts(f, {0, 1});
    const auto oracle = oracle_chain(two, o1);
    REQUIRE(oracle.post);
    CHECK(fidelity_up_to_phase(*oracle.post, qswap::testing::ket(2, {1, 6}, {0, h, -h, 0})) >= 1.0 - 1e-12);

    for (int d = 2; d <= 5; ++d) {
        const std::vector<BellOutcome> zeros(static_cast<std::size_t>(d), BellOutcome{0, 0});
        CHECK(same_family(predict_chain(Dimension(d), zeros), make_max_entangled(Dimension(d), 2)));
    }

    const Dimension three(3);
    const BellOutcome o3[] = {{1, 1}, {1, 1}, {1, 2}};
    const auto g = predict_chain(three, o3);
    const double r = 1.0 / std::sqrt(3.0);
    check_coefficients(g, {r, r, r});
    check_shifts(g, {0, 1});
    const auto oracle3 = oracle_chain(three, o3, true);
    REQUIRE(oracle3.post);
    CHECK(fidelity_up_to_phase(*oracle3.post, family_to_state(g, {1, 8})) >= 1.0 - 1e-12);

    CHECK_THROWS_AS(predict_chain(two, {}), ConfigError);
}

TEST_CASE("chain closed form, folded swaps and oracle agree") {
    auto check_chain = [](Dimension dim, const std::vector<BellOutcome>& outcomes) {
        const auto max2 = make_max_entangled(dim, 2);
        std::vector<SwapStep> steps;
        for (const auto& o : outcomes) steps.push_back({2, max2, o});
        const auto closed = predict_chain(dim, outcomes);
        CHECK(same_family(closed, predict_multi_swap(max2, steps), 1e-10));
        const auto oracle = oracle_chain(dim, outcomes);
        REQUIRE(oracle.post);
        const int last = 2 * static_cast<int>(outcomes.size() + 1);
        CHECK(fidelity_up_to_phase(*oracle.post, family_to_state(closed, {1, last})) >= 1.0 - 1e-10);
    };
    const Dimension two(2);
    for (int pairs = 2; pairs <= 5; ++pairs) {
        const int m = pairs - 1;
        const int combos = 1 << (2 * m);
        for (int code = 0; code < combos; ++code) {
            std::vector<BellOutcome> outcomes;
            for (int k = 0; k < m; ++k) outcomes.push_back({(code >> (2 * k)) & 1, (code >> (2 * k + 1)) & 1});
            check_chain(two, outcomes);
        }
    }
    const Dimension three(3);
    Rng rng(RandomSeed{77});
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + trial % 4;
        std::vector<BellOutcome> outcomes;
        for (int k = 0; k < m; ++k) outcomes.push_back({rng.below(3), rng.below(3)});
        check_chain(three, outcomes);
    }
}
