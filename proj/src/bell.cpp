#include "qswap/bell.hpp"

#include <cmath>
#include <string>

#include "indexing.hpp"
#include "qswap/errors.hpp"

namespace qswap {

namespace {

struct PairLayout {
    std::size_t first_stride;
    std::size_t second_stride;
    std::vector<std::size_t> rest;
    std::vector<int> rest_labels;
};

PairLayout layout_for(const PureState& state, int first, int second) {
    if (first == second) {
        throw RegisterError("Bell measurement needs two distinct qudits");
    }
    const std::size_t a = state.position_of(first);
    const std::size_t b = state.position_of(second);
    const std::size_t removed[] = {a, b};
    PairLayout layout{state.stride(a), state.stride(b),
                      detail::rest_offsets(state.dim().value(), state.num_qudits(), removed), {}};
    for (const int label : state.labels()) {
        if (label != first && label != second) {
            layout.rest_labels.push_back(label);
        }
    }
    return layout;
}

std::vector<Amplitude> conjugate_phases(Dimension d) {
    std::vector<Amplitude> table(static_cast<std::size_t>(d.value()));
    for (int k = 0; k < d.value(); ++k) {
        table[static_cast<std::size_t>(k)] = std::conj(root_of_unity(d, k));
    }
    return table;
}

}  // namespace

void check_outcome(Dimension d, BellOutcome outcome) {
    if (outcome.u < 0 || outcome.u >= d.value() || outcome.v < 0 || outcome.v >= d.value()) {
        throw DimensionError("Bell outcome (" + std::to_string(outcome.u) + "," +
                             std::to_string(outcome.v) + ") outside Z_" + std::to_string(d.value()));
    }
}

PureState bell_state(Dimension d, ModInt u, ModInt v, std::array<int, 2> labels) {
    if (u.dim() != d || v.dim() != d) {
        throw DimensionError("bell_state: parameter dimension mismatch");
    }
    const int n = d.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    std::vector<Amplitude> amps(static_cast<std::size_t>(n * n));
    for (int j = 0; j < n; ++j) {
        amps[static_cast<std::size_t>(j * n + wrap(j + v.value(), n))] =
            scale * root_of_unity(d, static_cast<long long>(j) * u.value());
    }
    return PureState(d, {labels[0], labels[1]}, std::move(amps));
}

Projection bell_project(const PureState& state, int first, int second, BellOutcome outcome) {
    const Dimension dim = state.dim();
    check_outcome(dim, outcome);
    const auto layout = layout_for(state, first, second);
    const auto phases = conjugate_phases(dim);
    const int d = dim.value();
    const double scale = 1.0 / std::sqrt(static_cast<double>(d));
    const auto amps = state.amplitudes();

    std::vector<Amplitude> post(layout.rest.size());
    double p = 0.0;
    for (std::size_t r = 0; r < layout.rest.size(); ++r) {
        Amplitude acc{};
        for (int j = 0; j < d; ++j) {
            const std::size_t idx = layout.rest[r] +
                                    static_cast<std::size_t>(j) * layout.first_stride +
                                    static_cast<std::size_t>(wrap(j + outcome.v, d)) * layout.second_stride;
            acc += phases[static_cast<std::size_t>(wrap(static_cast<long long>(j) * outcome.u, d))] *
                   amps[idx];
        }
        post[r] = scale * acc;
        p += std::norm(post[r]);
    }
    if (p <= kZeroProbability) {
        return {p, std::nullopt};
    }
    return {p, PureState(dim, layout.rest_labels, std::move(post))};
}

BellDistribution::BellDistribution(Dimension d, std::vector<double> probabilities)
    : dim_(d), probs_(std::move(probabilities)) {
    if (probs_.size() != static_cast<std::size_t>(d.value() * d.value())) {
        throw DimensionError("BellDistribution needs d^2 entries");
    }
}

double BellDistribution::operator()(int u, int v) const {
    check_outcome(dim_, {u, v});
    return probs_[static_cast<std::size_t>(u * dim_.value() + v)];
}

BellOutcome BellDistribution::outcome_at(Dimension d, std::size_t index) {
    return {static_cast<int>(index / static_cast<std::size_t>(d.value())),
            static_cast<int>(index % static_cast<std::size_t>(d.value()))};
}

BellDistribution bell_outcome_distribution(const PureState& state, int first, int second) {
    const Dimension dim = state.dim();
    const auto layout = layout_for(state, first, second);
    const auto phases = conjugate_phases(dim);
    const int d = dim.value();
    const auto amps = state.amplitudes();

    std::vector<double> probs(static_cast<std::size_t>(d * d), 0.0);
    std::vector<Amplitude> column(static_cast<std::size_t>(d));
    for (const std::size_t base : layout.rest) {
        for (int v = 0; v < d; ++v) {
            for (int j = 0; j < d; ++j) {
                column[static_cast<std::size_t>(j)] =
                    amps[base + static_cast<std::size_t>(j) * layout.first_stride +
                         static_cast<std::size_t>(wrap(j + v, d)) * layout.second_stride];
            }
            for (int u = 0; u < d; ++u) {
                Amplitude acc{};
                for (int j = 0; j < d; ++j) {
                    acc += phases[static_cast<std::size_t>((j * u) % d)] * column[static_cast<std::size_t>(j)];
                }
                probs[static_cast<std::size_t>(u * d + v)] += std::norm(acc) / d;
            }
        }
    }
    return BellDistribution(dim, std::move(probs));
}

BellMeasurement bell_measure(const PureState& state, int first, int second, Rng& rng) {
    const auto dist = bell_outcome_distribution(state, first, second);
    std::vector<double> weights(dist.probabilities().begin(), dist.probabilities().end());
    for (auto& w : weights) {
        if (w <= kZeroProbability) {
            w = 0.0;
        }
    }
    const auto index = sample_index(weights, rng);
    const auto outcome = BellDistribution::outcome_at(state.dim(), index);
    auto projection = bell_project(state, first, second, outcome);
    if (!projection.post) {
        throw ZeroProbabilityError("bell_measure: sampled a vanishing branch");
    }
    return {outcome, projection.probability, std::move(*projection.post)};
}

BellMeasurement bell_measure(const PureState& state, int first, int second, RandomSeed seed) {
    Rng rng(seed);
    return bell_measure(state, first, second, rng);
}

}  // namespace qswap
