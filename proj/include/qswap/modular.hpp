#pragma once

#include <complex>
#include <cstdint>

namespace qswap {

using Amplitude = std::complex<double>;

inline constexpr int kDefaultMaxDimension = 16;

/// Local dimension d of every qudit in a register, 2 <= d <= max_d.
class Dimension {
public:
    explicit Dimension(int d, int max_d = kDefaultMaxDimension);

    int value() const noexcept { return d_; }

    friend bool operator==(Dimension, Dimension) = default;

private:
    int d_;
};

/// Reduces any integer into [0, d).
constexpr int wrap(long long x, int d) noexcept {
    const long long r = x % d;
    return static_cast<int>(r < 0 ? r + d : r);
}

/// Element of Z_d. Construction rejects values outside [0, d).
class ModInt {
public:
    ModInt(int value, Dimension dim);

    /// Wraps an arbitrary integer into Z_d.
    static ModInt reduce(long long x, Dimension dim) { return ModInt(wrap(x, dim.value()), dim); }

    int value() const noexcept { return value_; }
    Dimension dim() const noexcept { return dim_; }

    friend bool operator==(ModInt, ModInt) = default;

private:
    int value_;
    Dimension dim_;
};

ModInt mod_add(ModInt a, ModInt b);
ModInt mod_sub(ModInt a, ModInt b);

inline ModInt operator+(ModInt a, ModInt b) { return mod_add(a, b); }
inline ModInt operator-(ModInt a, ModInt b) { return mod_sub(a, b); }

/// e^{2 pi i k / d}. k is reduced mod d first so equal exponents give bit-identical values.
Amplitude root_of_unity(Dimension d, long long k);

}  // namespace qswap
