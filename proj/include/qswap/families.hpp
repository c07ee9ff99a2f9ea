#pragma once

#include <span>
#include <vector>

#include "qswap/modular.hpp"
#include "qswap/state.hpp"

namespace qswap {

/// The "amplitude + shift" form shared by every state family handled here:
///
///   sum_j c_j |j (+) s_1, j (+) s_2, ..., j (+) s_n>,   j in Z_d.
///
/// The first shift is always 0: a family built with s_1 != 0 is re-indexed
/// (c_j -> c_{j (-) s_1}, s_k -> s_k (-) s_1), which describes the same vector.
class QuditStateFamily {
public:
    /// Rejects coefficient vectors whose squared norm is not 1 within kNormTolerance.
    QuditStateFamily(Dimension dim, std::vector<Amplitude> coefficients, std::vector<int> shifts);

    /// Rescales the coefficients to unit norm. ZeroProbabilityError if they all vanish.
    static QuditStateFamily normalized(Dimension dim, std::vector<Amplitude> coefficients,
                                       std::vector<int> shifts);

    Dimension dim() const noexcept { return dim_; }
    int arity() const noexcept { return static_cast<int>(shifts_.size()); }
    std::span<const Amplitude> coefficients() const noexcept { return coefficients_; }
    std::span<const int> shifts() const noexcept { return shifts_; }
    Amplitude coefficient(int j) const { return coefficients_.at(static_cast<std::size_t>(j)); }
    /// 1-based, matching particle numbering.
    int shift(int slot) const { return shifts_.at(static_cast<std::size_t>(slot - 1)); }

private:
    Dimension dim_;
    std::vector<Amplitude> coefficients_;
    std::vector<int> shifts_;
};

/// Multiplies by the global phase that makes the first nonzero coefficient real-positive.
QuditStateFamily with_canonical_phase(const QuditStateFamily& f);

/// Coefficient-wise comparison after phase canonicalization.
bool same_family(const QuditStateFamily& a, const QuditStateFamily& b, double tol = 1e-12);

/// d^{-1/2} sum_j |j, j, ..., j> on n qudits.
QuditStateFamily make_max_entangled(Dimension d, int n);

/// d^{-1/2} sum_j zeta^{j u} |j, j (+) v>.
QuditStateFamily make_bell(Dimension d, ModInt u, ModInt v);

/// d^{-1/2} sum_j e^{i delta_j} |j, ..., j>; deltas holds d real phases.
QuditStateFamily make_ghz(Dimension d, int n, std::span<const double> deltas);

/// sum_j zeta^{j mu1} alpha_j |j, j (+) mu_2, ..., j (+) mu_n>.
/// Normalization is carried by alphas alone; mus holds mu_2..mu_n.
QuditStateFamily make_ghz_class(Dimension d, int n, ModInt mu1, std::span<const ModInt> mus,
                                std::span<const Amplitude> alphas);

/// d^{-1/2} sum_j omega_j |j, ..., j> with every |omega_j| = 1.
QuditStateFamily make_cat_like(Dimension d, int n, std::span<const Amplitude> omegas);

/// Dense expansion on the given labels (one per qudit).
PureState family_to_state(const QuditStateFamily& f, std::vector<int> labels);

/// Dense expansion on labels 1..n.
PureState family_to_state(const QuditStateFamily& f);

/// Two-qudit partner of a swap: either max(d, 2) or a Bell state |Psi(u,v)>.
struct PairSpec {
    enum class Kind { max_entangled, bell };

    Kind kind = Kind::max_entangled;
    int u = 0;
    int v = 0;

    static PairSpec max_entangled() { return {}; }
    static PairSpec bell(int u, int v) { return {Kind::bell, u, v}; }

    QuditStateFamily family(Dimension d) const;

    friend bool operator==(const PairSpec&, const PairSpec&) = default;
};

}  // namespace qswap
