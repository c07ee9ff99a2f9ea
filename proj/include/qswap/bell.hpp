#pragma once

#include <array>
#include <vector>

#include "qswap/modular.hpp"
#include "qswap/rng.hpp"
#include "qswap/state.hpp"

namespace qswap {

/// Label (u, v) of the generalized Bell state
///   |Psi(u,v)> = d^{-1/2} sum_j zeta^{j u} |j, j (+) v>,  zeta = e^{2 pi i / d}.
/// Both components live in [0, d) of the dimension they are used with.
struct BellOutcome {
    int u = 0;
    int v = 0;

    friend bool operator==(const BellOutcome&, const BellOutcome&) = default;
};

/// Throws DimensionError unless 0 <= u, v < d.
void check_outcome(Dimension d, BellOutcome outcome);

PureState bell_state(Dimension d, ModInt u, ModInt v, std::array<int, 2> labels = {1, 2});

/// Projects qudits (first, second) onto |Psi(u,v)>. `first` takes the unshifted
/// |j> slot and `second` the shifted |j (+) v> slot; swapping the arguments
/// swaps the slot convention. Both qudits leave the register.
Projection bell_project(const PureState& state, int first, int second, BellOutcome outcome);

/// All d^2 Bell outcome probabilities, stored in lexicographic (u, v) order.
class BellDistribution {
public:
    BellDistribution(Dimension d, std::vector<double> probabilities);

    Dimension dim() const noexcept { return dim_; }
    double operator()(int u, int v) const;
    std::span<const double> probabilities() const noexcept { return probs_; }
    static BellOutcome outcome_at(Dimension d, std::size_t index);

private:
    Dimension dim_;
    std::vector<double> probs_;
};

BellDistribution bell_outcome_distribution(const PureState& state, int first, int second);

struct BellMeasurement {
    BellOutcome outcome;
    double probability = 0.0;
    PureState post;
};

/// Born-rule sampled Bell measurement (inverse CDF over lexicographic outcomes).
BellMeasurement bell_measure(const PureState& state, int first, int second, Rng& rng);
BellMeasurement bell_measure(const PureState& state, int first, int second, RandomSeed seed);

}  // namespace qswap
