#include "qswap/swap_engine.hpp"

#include <cmath>
#include <string>

#include "qswap/errors.hpp"

namespace qswap {

namespace {

struct RawSwap {
    std::vector<Amplitude> coefficients;
    std::vector<int> shifts;
    double probability;
};

RawSwap apply_swap_rule(const QuditStateFamily& a, const SwapStep& step) {
    const Dimension dim = a.dim();
    if (step.pair.dim() != dim) {
        throw DimensionError("swap partner has a different dimension");
    }
    if (step.pair.arity() != 2) {
        throw ConfigError("swap partner must be a two-qudit family");
    }
    if (step.slot < 1 || step.slot > a.arity()) {
        throw ConfigError("swap slot " + std::to_string(step.slot) + " outside 1.." +
                          std::to_string(a.arity()));
    }
    check_outcome(dim, step.outcome);

    const int d = dim.value();
    const int sigma = a.shift(step.slot);
    const int tau1 = step.pair.shift(1);
    const int tau2 = step.pair.shift(2);
    const auto [u, v] = step.outcome;

    RawSwap raw{std::vector<Amplitude>(static_cast<std::size_t>(d)),
                std::vector<int>(a.shifts().begin(), a.shifts().end()), 0.0};
    for (int j = 0; j < d; ++j) {
        const int k = wrap(static_cast<long long>(j) + sigma + v - tau1, d);
        const Amplitude c = a.coefficient(j) * step.pair.coefficient(k) *
                            root_of_unity(dim, -static_cast<long long>(j) * u);
        raw.coefficients[static_cast<std::size_t>(j)] = c;
        raw.probability += std::norm(c);
    }
    raw.probability /= d;
    raw.shifts[static_cast<std::size_t>(step.slot - 1)] = wrap(static_cast<long long>(sigma) + v + tau2 - tau1, d);
    return raw;
}

}  // namespace

QuditStateFamily predict_swap(const QuditStateFamily& a, const SwapStep& step) {
    auto raw = apply_swap_rule(a, step);
    if (raw.probability <= kZeroProbability) {
        throw ZeroProbabilityError("swap outcome (" + std::to_string(step.outcome.u) + "," +
                                   std::to_string(step.outcome.v) + ") has zero probability");
    }
    return with_canonical_phase(
        QuditStateFamily::normalized(a.dim(), std::move(raw.coefficients), std::move(raw.shifts)));
}

double predict_swap_probability(const QuditStateFamily& a, const SwapStep& step) {
    return apply_swap_rule(a, step).probability;
}

QuditStateFamily predict_multi_swap(QuditStateFamily a, std::span<const SwapStep> steps) {
    for (const auto& step : steps) {
        a = predict_swap(a, step);
    }
    return a;
}

QuditStateFamily predict_chain(Dimension d, std::span<const BellOutcome> outcomes) {
    if (outcomes.empty()) {
        throw ConfigError("predict_chain needs at least one intermediate measurement");
    }
    long long u_total = 0;
    long long v_total = 0;
    for (const auto& o : outcomes) {
        check_outcome(d, o);
        u_total += o.u;
        v_total += o.v;
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d.value()));
    std::vector<Amplitude> c(static_cast<std::size_t>(d.value()));
    for (int j = 0; j < d.value(); ++j) {
        c[static_cast<std::size_t>(j)] = scale * root_of_unity(d, -static_cast<long long>(j) * u_total);
    }
    return with_canonical_phase(QuditStateFamily(d, std::move(c), {0, wrap(v_total, d.value())}));
}

}  // namespace qswap
