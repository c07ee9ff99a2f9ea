#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qswap::detail {

/// Enumerates sum_k digit_k * strides[k] over all digit tuples in row-major
/// order (strides[0] is the slowest-varying digit).
inline std::vector<std::size_t> strided_offsets(int d, std::span<const std::size_t> strides) {
    std::vector<std::size_t> out{0};
    for (const std::size_t s : strides) {
        std::vector<std::size_t> next;
        next.reserve(out.size() * static_cast<std::size_t>(d));
        for (const std::size_t base : out) {
            for (int digit = 0; digit < d; ++digit) {
                next.push_back(base + static_cast<std::size_t>(digit) * s);
            }
        }
        out = std::move(next);
    }
    return out;
}

/// Strides of a row-major n-digit base-d register.
inline std::vector<std::size_t> register_strides(int d, std::size_t n) {
    std::vector<std::size_t> strides(n, 1);
    for (std::size_t k = n; k-- > 1;) {
        strides[k - 1] = strides[k] * static_cast<std::size_t>(d);
    }
    return strides;
}

/// Base offsets of every basis index whose digits at the `removed` positions
/// are zero, in row-major order of the remaining positions.
inline std::vector<std::size_t> rest_offsets(int d, std::size_t n,
                                             std::span<const std::size_t> removed) {
    const auto all = register_strides(d, n);
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < n; ++p) {
        bool drop = false;
        for (const std::size_t r : removed) {
            drop = drop || r == p;
        }
        if (!drop) {
            kept.push_back(all[p]);
        }
    }
    return strided_offsets(d, kept);
}

}  // namespace qswap::detail
