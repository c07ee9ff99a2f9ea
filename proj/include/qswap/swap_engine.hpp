#pragma once

#include <span>
#include <vector>

#include "qswap/bell.hpp"
#include "qswap/families.hpp"

namespace qswap {

/// One Bell measurement joining qudit `slot` (1-based) of the current family
/// with the first qudit of a fresh two-qudit `pair`. The family qudit takes
/// the unshifted Bell slot, the pair qudit the shifted one.
struct SwapStep {
    int slot = 1;
    QuditStateFamily pair;
    BellOutcome outcome;
};

/// Closed-form post-measurement family of A after `step`.
///
/// With A = sum_j a_j |j (+) sigma_1, ...> and pair = sum_k b_k |k (+) tau_1, k (+) tau_2>,
/// outcome (u, v) leaves
///
///   a'_j  ~  a_j * b_{j (+) sigma_s (+) v (-) tau_1} * zeta^{-j u}
///
/// with the pair's surviving qudit standing in position s, shifted by
/// sigma_s (+) v (+) tau_2 (-) tau_1. The result is renormalized and
/// phase-canonicalized. Throws ZeroProbabilityError for a vanishing outcome.
QuditStateFamily predict_swap(const QuditStateFamily& a, const SwapStep& step);

/// Born probability of step.outcome: (1/d) sum_j |a_j b_{k(j)}|^2.
double predict_swap_probability(const QuditStateFamily& a, const SwapStep& step);

/// Left fold of predict_swap; slots refer to the family as it stands at each step.
QuditStateFamily predict_multi_swap(QuditStateFamily a, std::span<const SwapStep> steps);

/// End-to-end state of a swapping chain of outcomes.size()+1 maximally
/// entangled pairs (1,2), (3,4), ... with Bell measurements on (2k, 2k+1):
///   d^{-1/2} sum_j zeta^{-j sum u_k} |j, j (+) sum v_k>.
QuditStateFamily predict_chain(Dimension d, std::span<const BellOutcome> outcomes);

}  // namespace qswap
