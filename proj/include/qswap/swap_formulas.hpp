#pragma once

// Closed-form swap results for each named state family, written out term by
// term rather than through the general rule in swap_engine.hpp. They serve as
// a second algebraic route: predict_swap must agree with every one of them.
//
// A max pair is the Bell pair (0, 0), so each function covers both partner
// kinds. All results are returned phase-canonicalized.

#include <span>

#include "qswap/bell.hpp"
#include "qswap/families.hpp"

namespace qswap::formulas {

/// max(d, n) swapped at `slot`:  sum_j zeta^{j(u (-) u')} |j, ..., j (+) v (+) v', ..., j>.
QuditStateFamily max_entangled_swap(Dimension d, int n, int slot, PairSpec pair,
                                    BellOutcome outcome);

/// GHZ: sum_j e^{i delta_j} zeta^{j(u (-) u')} |j, ..., j (+) v (+) v', ..., j>.
QuditStateFamily ghz_swap(Dimension d, int n, std::span<const double> deltas, int slot,
                          PairSpec pair, BellOutcome outcome);

/// GHZ-class: sum_j zeta^{j(mu_1 (+) u (-) u')} alpha_j |j, j (+) mu_2, ..., j (+) mu_s (+) v (+) v', ...>.
/// mus holds mu_2..mu_n; the first position carries no mu, so slot 1 shifts by v (+) v' alone.
QuditStateFamily ghz_class_swap(Dimension d, int n, int mu1, std::span<const int> mus,
                                std::span<const Amplitude> alphas, int slot, PairSpec pair,
                                BellOutcome outcome);

/// Cat-like: sum_j omega_j zeta^{j(u (-) u')} |j, ..., j (+) v (+) v', ..., j>.
QuditStateFamily cat_like_swap(Dimension d, int n, std::span<const Amplitude> omegas, int slot,
                               PairSpec pair, BellOutcome outcome);

/// Every qudit of max(d, n) swapped, qudit k with pairs[k] and outcome outcomes[k]:
///   sum_j zeta^{j sum_k (u_k - u'_k)} |j (+) v_1 (+) v'_1, ..., j (+) v_n (+) v'_n>.
QuditStateFamily all_slots_swap(Dimension d, std::span<const PairSpec> pairs,
                                std::span<const BellOutcome> outcomes);

}  // namespace qswap::formulas
