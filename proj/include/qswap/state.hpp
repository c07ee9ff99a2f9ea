#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qswap/modular.hpp"
#include "qswap/rng.hpp"

namespace qswap {

inline constexpr double kNormTolerance = 1e-10;

/// Probabilities at or below this are treated as an exactly vanishing branch.
inline constexpr double kZeroProbability = 1e-14;

inline constexpr std::size_t kDefaultRegisterLimit = 2'000'000;

/// Largest amplitude count a register may hold. Defaults to 2e6 and can be
/// overridden through the QSWAP_MAX_QUDITS environment variable (read once).
std::size_t register_amplitude_limit();

/// d^n, or RegisterError when it exceeds register_amplitude_limit().
std::size_t register_size(Dimension d, std::size_t num_qudits);

/// Dense pure state over an ordered set of labelled qudits.
///
/// Amplitudes are stored row-major in base-d digit order: the first label is
/// the most significant digit. Instances are immutable and always unit-norm;
/// the constructor rescales the supplied vector and rejects zero, non-finite
/// or mis-sized input.
class PureState {
public:
    PureState(Dimension dim, std::vector<int> labels, std::vector<Amplitude> amps);

    /// Computational basis state |digits> on the given labels.
    static PureState basis(Dimension dim, std::vector<int> labels, std::span<const int> digits);

    Dimension dim() const noexcept { return dim_; }
    const std::vector<int>& labels() const noexcept { return labels_; }
    std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
    std::size_t num_qudits() const noexcept { return labels_.size(); }

    bool has_label(int label) const noexcept;
    /// Position of label in the register; RegisterError when absent.
    std::size_t position_of(int label) const;
    /// Stride of the digit at position pos, i.e. d^(n-1-pos).
    std::size_t stride(std::size_t pos) const;

    Amplitude amplitude(std::span<const int> digits) const;

private:
    Dimension dim_;
    std::vector<int> labels_;
    std::vector<Amplitude> amps_;
};

/// a (x) b with labels concatenated.
PureState tensor(const PureState& a, const PureState& b);

/// <a|b>. Both registers must carry the same labels in the same order.
Amplitude inner_product(const PureState& a, const PureState& b);

/// |<a|b>|, equal to 1 exactly when a and b agree up to a global phase.
double fidelity_up_to_phase(const PureState& a, const PureState& b);

/// Same state with the register permuted into the given label order.
PureState reorder(const PureState& state, std::span<const int> labels);

/// Result of projecting onto one branch. post is empty for a vanishing branch.
struct Projection {
    double probability = 0.0;
    std::optional<PureState> post;
};

/// Projects qudit `label` onto |outcome>; the measured qudit leaves the register.
Projection project_computational(const PureState& state, int label, ModInt outcome);

/// Born probabilities of all d outcomes of a computational measurement.
std::vector<double> computational_distribution(const PureState& state, int label);

struct ComputationalMeasurement {
    int outcome = 0;
    double probability = 0.0;
    PureState post;
};

/// Born-rule sampled computational measurement of one qudit.
ComputationalMeasurement measure_computational(const PureState& state, int label, Rng& rng);

}  // namespace qswap
