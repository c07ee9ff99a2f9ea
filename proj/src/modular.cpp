#include "qswap/modular.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qswap/errors.hpp"

namespace qswap {

Dimension::Dimension(int d, int max_d) : d_(d) {
    if (d < 2) {
        throw DimensionError("dimension must be at least 2, got " + std::to_string(d));
    }
    if (d > max_d) {
        throw DimensionError("dimension " + std::to_string(d) + " exceeds the configured maximum " +
                             std::to_string(max_d));
    }
}

ModInt::ModInt(int value, Dimension dim) : value_(value), dim_(dim) {
    if (value < 0 || value >= dim.value()) {
        throw DimensionError("value " + std::to_string(value) + " is not in Z_" +
                             std::to_string(dim.value()));
    }
}

ModInt mod_add(ModInt a, ModInt b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("mod_add: operands live in different dimensions");
    }
    return ModInt(wrap(static_cast<long long>(a.value()) + b.value(), a.dim().value()), a.dim());
}

ModInt mod_sub(ModInt a, ModInt b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("mod_sub: operands live in different dimensions");
    }
    return ModInt(wrap(static_cast<long long>(a.value()) - b.value(), a.dim().value()), a.dim());
}

Amplitude root_of_unity(Dimension d, long long k) {
    const int r = wrap(k, d.value());
    if (r == 0) {
        return {1.0, 0.0};
    }
    const double angle = 2.0 * std::numbers::pi * r / d.value();
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace qswap
