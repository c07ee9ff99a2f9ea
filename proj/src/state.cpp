#include "qswap/state.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "indexing.hpp"
#include "qswap/errors.hpp"

namespace qswap {

std::size_t register_amplitude_limit() {
    static const std::size_t limit = [] {
        if (const char* env = std::getenv("QSWAP_MAX_QUDITS"); env != nullptr && *env != '\0') {
            char* end = nullptr;
            const unsigned long long v = std::strtoull(env, &end, 10);
            if (end != nullptr && *end == '\0' && v > 0) {
                return static_cast<std::size_t>(v);
            }
        }
        return kDefaultRegisterLimit;
    }();
    return limit;
}

std::size_t register_size(Dimension d, std::size_t num_qudits) {
    const std::size_t limit = register_amplitude_limit();
    std::size_t size = 1;
    for (std::size_t k = 0; k < num_qudits; ++k) {
        size *= static_cast<std::size_t>(d.value());
        if (size > limit) {
            throw RegisterError("register of " + std::to_string(num_qudits) + " qudits at d=" +
                                std::to_string(d.value()) + " exceeds the amplitude limit " +
                                std::to_string(limit));
        }
    }
    return size;
}

PureState::PureState(Dimension dim, std::vector<int> labels, std::vector<Amplitude> amps)
    : dim_(dim), labels_(std::move(labels)), amps_(std::move(amps)) {
    if (amps_.size() != register_size(dim_, labels_.size())) {
        throw RegisterError("amplitude count " + std::to_string(amps_.size()) +
                            " does not match d^n for " + std::to_string(labels_.size()) +
                            " qudits");
    }
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw RegisterError("qudit labels must be distinct");
    }
    double norm2 = 0.0;
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw RegisterError("non-finite amplitude");
        }
        norm2 += std::norm(a);
    }
    if (!(norm2 > 0.0)) {
        throw ZeroProbabilityError("cannot normalize the zero vector");
    }
    if (std::abs(norm2 - 1.0) > 1e-15) {
        const double scale = 1.0 / std::sqrt(norm2);
        for (auto& a : amps_) {
            a *= scale;
        }
    }
}

PureState PureState::basis(Dimension dim, std::vector<int> labels, std::span<const int> digits) {
    if (digits.size() != labels.size()) {
        throw RegisterError("basis: digit count does not match label count");
    }
    std::vector<Amplitude> amps(register_size(dim, labels.size()));
    std::size_t index = 0;
    for (const int digit : digits) {
        if (digit < 0 || digit >= dim.value()) {
            throw DimensionError("basis digit out of range");
        }
        index = index * static_cast<std::size_t>(dim.value()) + static_cast<std::size_t>(digit);
    }
    amps[index] = 1.0;
    return PureState(dim, std::move(labels), std::move(amps));
}

bool PureState::has_label(int label) const noexcept {
    return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::size_t PureState::position_of(int label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw RegisterError("unknown qudit label " + std::to_string(label));
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t PureState::stride(std::size_t pos) const {
    std::size_t s = 1;
    for (std::size_t k = pos + 1; k < labels_.size(); ++k) {
        s *= static_cast<std::size_t>(dim_.value());
    }
    return s;
}

Amplitude PureState::amplitude(std::span<const int> digits) const {
    if (digits.size() != labels_.size()) {
        throw RegisterError("amplitude: digit count does not match register");
    }
    std::size_t index = 0;
    for (const int digit : digits) {
        if (digit < 0 || digit >= dim_.value()) {
            throw DimensionError("amplitude: digit out of range");
        }
        index = index * static_cast<std::size_t>(dim_.value()) + static_cast<std::size_t>(digit);
    }
    return amps_[index];
}

PureState tensor(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("tensor: operands have different dimensions");
    }
    for (const int label : b.labels()) {
        if (a.has_label(label)) {
            throw RegisterError("tensor: label " + std::to_string(label) + " appears on both sides");
        }
    }
    std::vector<int> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    const auto lhs = a.amplitudes();
    const auto rhs = b.amplitudes();
    std::vector<Amplitude> amps(register_size(a.dim(), labels.size()));
    std::size_t k = 0;
    for (const auto x : lhs) {
        for (const auto y : rhs) {
            amps[k++] = x * y;
        }
    }
    return PureState(a.dim(), std::move(labels), std::move(amps));
}

Amplitude inner_product(const PureState& a, const PureState& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("inner_product: operands have different dimensions");
    }
    if (a.labels() != b.labels()) {
        throw RegisterError("inner_product: registers differ in labels or order");
    }
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    Amplitude acc{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

double fidelity_up_to_phase(const PureState& a, const PureState& b) {
    return std::min(1.0, std::abs(inner_product(a, b)));
}

PureState reorder(const PureState& state, std::span<const int> labels) {
    if (labels.size() != state.num_qudits()) {
        throw RegisterError("reorder: label count mismatch");
    }
    std::vector<std::size_t> strides;
    strides.reserve(labels.size());
    for (const int label : labels) {
        strides.push_back(state.stride(state.position_of(label)));
    }
    const auto source = detail::strided_offsets(state.dim().value(), strides);
    const auto amps = state.amplitudes();
    std::vector<Amplitude> out(amps.size());
    for (std::size_t i = 0; i < source.size(); ++i) {
        out[i] = amps[source[i]];
    }
    return PureState(state.dim(), std::vector<int>(labels.begin(), labels.end()), std::move(out));
}

namespace {

std::vector<int> labels_without(const PureState& state, std::size_t pos) {
    std::vector<int> out = state.labels();
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
    return out;
}

}  // namespace

Projection project_computational(const PureState& state, int label, ModInt outcome) {
    if (outcome.dim() != state.dim()) {
        throw DimensionError("project_computational: outcome dimension mismatch");
    }
    const std::size_t pos = state.position_of(label);
    const std::size_t removed[] = {pos};
    const auto offsets = detail::rest_offsets(state.dim().value(), state.num_qudits(), removed);
    const std::size_t shift = static_cast<std::size_t>(outcome.value()) * state.stride(pos);
    const auto amps = state.amplitudes();
    std::vector<Amplitude> post(offsets.size());
    double p = 0.0;
    for (std::size_t r = 0; r < offsets.size(); ++r) {
        post[r] = amps[offsets[r] + shift];
        p += std::norm(post[r]);
    }
    if (p <= kZeroProbability) {
        return {p, std::nullopt};
    }
    return {p, PureState(state.dim(), labels_without(state, pos), std::move(post))};
}

std::vector<double> computational_distribution(const PureState& state, int label) {
    const std::size_t pos = state.position_of(label);
    const std::size_t s = state.stride(pos);
    const auto d = static_cast<std::size_t>(state.dim().value());
    const auto amps = state.amplitudes();
    std::vector<double> probs(d, 0.0);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        probs[(i / s) % d] += std::norm(amps[i]);
    }
    return probs;
}

ComputationalMeasurement measure_computational(const PureState& state, int label, Rng& rng) {
    auto probs = computational_distribution(state, label);
    for (auto& w : probs) {
        if (w <= kZeroProbability) {
            w = 0.0;
        }
    }
    const auto outcome = static_cast<int>(sample_index(probs, rng));
    auto projection = project_computational(state, label, ModInt(outcome, state.dim()));
    if (!projection.post) {
        throw ZeroProbabilityError("measure_computational: sampled a vanishing branch");
    }
    return {outcome, projection.probability, std::move(*projection.post)};
}

}  // namespace qswap
