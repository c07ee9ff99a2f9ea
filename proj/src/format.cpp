#include "qswap/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace qswap {

std::string format_number(double x) {
    if (x == 0.0) {
        return "0";  // folds -0
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, x);
    return buf;
}

double round_significant(double x) {
    if (!std::isfinite(x) || x == 0.0) {
        return x == 0.0 ? 0.0 : x;
    }
    return std::strtod(format_number(x).c_str(), nullptr);
}

std::string format_amplitude(Amplitude a) {
    constexpr double kTiny = 1e-13;
    const double re = std::abs(a.real()) < kTiny ? 0.0 : a.real();
    const double im = std::abs(a.imag()) < kTiny ? 0.0 : a.imag();
    if (im == 0.0) {
        return format_number(re);
    }
    if (re == 0.0) {
        return format_number(im) + "i";
    }
    return "(" + format_number(re) + (im < 0 ? "-" : "+") + format_number(std::abs(im)) + "i)";
}

std::string to_string(const PureState& state) {
    const int d = state.dim().value();
    const std::size_t n = state.num_qudits();
    std::ostringstream out;
    bool first = true;
    const auto amps = state.amplitudes();
    std::vector<int> digits(n);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) < 1e-12) {
            continue;
        }
        std::size_t rest = i;
        for (std::size_t k = n; k-- > 0;) {
            digits[k] = static_cast<int>(rest % static_cast<std::size_t>(d));
            rest /= static_cast<std::size_t>(d);
        }
        out << (first ? "" : " + ") << format_amplitude(amps[i]) << "|";
        for (std::size_t k = 0; k < n; ++k) {
            out << (k ? "," : "") << digits[k];
        }
        out << ">";
        first = false;
    }
    out << "  on qudits (";
    for (std::size_t k = 0; k < n; ++k) {
        out << (k ? "," : "") << state.labels()[k];
    }
    out << ")";
    return out.str();
}

std::string to_string(const QuditStateFamily& family) {
    std::ostringstream out;
    out << "d=" << family.dim().value() << " n=" << family.arity() << " c=[";
    for (int j = 0; j < family.dim().value(); ++j) {
        out << (j ? ", " : "") << format_amplitude(family.coefficient(j));
    }
    out << "] shifts=(";
    for (int k = 1; k <= family.arity(); ++k) {
        out << (k > 1 ? "," : "") << family.shift(k);
    }
    out << ")";
    return out.str();
}

}  // namespace qswap
