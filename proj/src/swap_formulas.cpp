#include "qswap/swap_formulas.hpp"

#include <cmath>
#include <vector>

#include "qswap/errors.hpp"

namespace qswap::formulas {

namespace {

int pair_u(const PairSpec& p) { return p.kind == PairSpec::Kind::bell ? p.u : 0; }
int pair_v(const PairSpec& p) { return p.kind == PairSpec::Kind::bell ? p.v : 0; }

void check_slot(int n, int slot) {
    if (slot < 1 || slot > n) {
        throw ConfigError("slot outside 1..n");
    }
}

/// sum_j weight_j zeta^{j(u (-) u')} with the slot shifted by v (+) v' on top of base shifts.
QuditStateFamily shifted_phase_family(Dimension d, std::span<const Amplitude> weights,
                                      std::vector<int> shifts, int slot, PairSpec pair,
                                      BellOutcome outcome) {
    check_slot(static_cast<int>(shifts.size()), slot);
    check_outcome(d, outcome);
    const int phase = wrap(pair_u(pair) - outcome.u, d.value());
    std::vector<Amplitude> c(static_cast<std::size_t>(d.value()));
    for (int j = 0; j < d.value(); ++j) {
        c[static_cast<std::size_t>(j)] =
            weights[static_cast<std::size_t>(j)] * root_of_unity(d, static_cast<long long>(j) * phase);
    }
    auto& s = shifts[static_cast<std::size_t>(slot - 1)];
    s = wrap(static_cast<long long>(s) + pair_v(pair) + outcome.v, d.value());
    return with_canonical_phase(QuditStateFamily::normalized(d, std::move(c), std::move(shifts)));
}

std::vector<int> zeros(int n) { return std::vector<int>(static_cast<std::size_t>(n), 0); }

}  // namespace

QuditStateFamily max_entangled_swap(Dimension d, int n, int slot, PairSpec pair,
                                    BellOutcome outcome) {
    const std::vector<Amplitude> w(static_cast<std::size_t>(d.value()), 1.0);
    return shifted_phase_family(d, w, zeros(n), slot, pair, outcome);
}

QuditStateFamily ghz_swap(Dimension d, int n, std::span<const double> deltas, int slot,
                          PairSpec pair, BellOutcome outcome) {
    if (deltas.size() != static_cast<std::size_t>(d.value())) {
        throw ConfigError("ghz_swap: expected d phases");
    }
    std::vector<Amplitude> w;
    for (const double delta : deltas) {
        w.push_back(std::polar(1.0, delta));
    }
    return shifted_phase_family(d, w, zeros(n), slot, pair, outcome);
}

QuditStateFamily ghz_class_swap(Dimension d, int n, int mu1, std::span<const int> mus,
                                std::span<const Amplitude> alphas, int slot, PairSpec pair,
                                BellOutcome outcome) {
    if (mus.size() != static_cast<std::size_t>(n - 1) ||
        alphas.size() != static_cast<std::size_t>(d.value())) {
        throw ConfigError("ghz_class_swap: parameter length mismatch");
    }
    std::vector<Amplitude> w(static_cast<std::size_t>(d.value()));
    for (int j = 0; j < d.value(); ++j) {
        w[static_cast<std::size_t>(j)] =
            root_of_unity(d, static_cast<long long>(j) * mu1) * alphas[static_cast<std::size_t>(j)];
    }
    std::vector<int> shifts{0};
    shifts.insert(shifts.end(), mus.begin(), mus.end());
    return shifted_phase_family(d, w, std::move(shifts), slot, pair, outcome);
}

QuditStateFamily cat_like_swap(Dimension d, int n, std::span<const Amplitude> omegas, int slot,
                               PairSpec pair, BellOutcome outcome) {
    if (omegas.size() != static_cast<std::size_t>(d.value())) {
        throw ConfigError("cat_like_swap: expected d coefficients");
    }
    return shifted_phase_family(d, omegas, zeros(n), slot, pair, outcome);
}

QuditStateFamily all_slots_swap(Dimension d, std::span<const PairSpec> pairs,
                                std::span<const BellOutcome> outcomes) {
    if (pairs.empty() || pairs.size() != outcomes.size()) {
        throw ConfigError("all_slots_swap: need one pair and one outcome per qudit");
    }
    long long phase = 0;
    std::vector<int> shifts;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        check_outcome(d, outcomes[k]);
        phase += pair_u(pairs[k]) - outcomes[k].u;
        shifts.push_back(wrap(static_cast<long long>(pair_v(pairs[k])) + outcomes[k].v, d.value()));
    }
    std::vector<Amplitude> c(static_cast<std::size_t>(d.value()));
    for (int j = 0; j < d.value(); ++j) {
        c[static_cast<std::size_t>(j)] = root_of_unity(d, static_cast<long long>(j) * wrap(phase, d.value()));
    }
    return with_canonical_phase(QuditStateFamily::normalized(d, std::move(c), std::move(shifts)));
}

}  // namespace qswap::formulas
