#pragma once

#include <string>

#include "qswap/families.hpp"
#include "qswap/state.hpp"

namespace qswap {

inline constexpr int kSignificantDigits = 12;

/// %.12g rendering.
std::string format_number(double x);

/// x rounded to 12 significant digits, so serializers print at most that many.
double round_significant(double x);

std::string format_amplitude(Amplitude a);

/// Ket listing of the nonzero amplitudes, e.g. "0.707106781187|0,0>_{1,2} + ...".
std::string to_string(const PureState& state);

/// "sum_j c_j |j(+)s_1, ..., j(+)s_n>" rendered as coefficient list and shifts.
std::string to_string(const QuditStateFamily& family);

}  // namespace qswap
