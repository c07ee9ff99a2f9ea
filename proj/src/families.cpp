#include "qswap/families.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "qswap/errors.hpp"

namespace qswap {

namespace {

double squared_norm(std::span<const Amplitude> c) {
    double acc = 0.0;
    for (const auto& x : c) {
        acc += std::norm(x);
    }
    return acc;
}

void check_arity(int n) {
    if (n < 1) {
        throw ConfigError("family arity must be at least 1, got " + std::to_string(n));
    }
}

}  // namespace

QuditStateFamily::QuditStateFamily(Dimension dim, std::vector<Amplitude> coefficients,
                                   std::vector<int> shifts)
    : dim_(dim), coefficients_(std::move(coefficients)), shifts_(std::move(shifts)) {
    const int d = dim_.value();
    if (coefficients_.size() != static_cast<std::size_t>(d)) {
        throw DimensionError("family needs exactly d coefficients");
    }
    check_arity(static_cast<int>(shifts_.size()));
    for (const int s : shifts_) {
        if (s < 0 || s >= d) {
            throw DimensionError("family shift " + std::to_string(s) + " outside Z_" + std::to_string(d));
        }
    }
    for (const auto& c : coefficients_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw DimensionError("non-finite family coefficient");
        }
    }
    if (std::abs(squared_norm(coefficients_) - 1.0) > kNormTolerance) {
        throw ConfigError("family coefficients are not normalized");
    }
    if (const int anchor = shifts_.front(); anchor != 0) {
        std::vector<Amplitude> reindexed(coefficients_.size());
        for (int j = 0; j < d; ++j) {
            reindexed[static_cast<std::size_t>(j)] = coefficients_[static_cast<std::size_t>(wrap(j - anchor, d))];
        }
        coefficients_ = std::move(reindexed);
        for (auto& s : shifts_) {
            s = wrap(s - anchor, d);
        }
    }
}

QuditStateFamily QuditStateFamily::normalized(Dimension dim, std::vector<Amplitude> coefficients,
                                              std::vector<int> shifts) {
    const double n2 = squared_norm(coefficients);
    if (!(n2 > 0.0)) {
        throw ZeroProbabilityError("all family coefficients vanish");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& c : coefficients) {
        c *= scale;
    }
    return QuditStateFamily(dim, std::move(coefficients), std::move(shifts));
}

QuditStateFamily with_canonical_phase(const QuditStateFamily& f) {
    const auto c = f.coefficients();
    Amplitude phase{1.0, 0.0};
    for (const auto& x : c) {
        if (std::abs(x) > 1e-12) {
            phase = std::conj(x) / std::abs(x);
            break;
        }
    }
    std::vector<Amplitude> out(c.begin(), c.end());
    for (auto& x : out) {
        x *= phase;
    }
    return QuditStateFamily::normalized(f.dim(), std::move(out),
                                        std::vector<int>(f.shifts().begin(), f.shifts().end()));
}

bool same_family(const QuditStateFamily& a, const QuditStateFamily& b, double tol) {
    if (a.dim() != b.dim() || a.arity() != b.arity()) {
        return false;
    }
    if (!std::equal(a.shifts().begin(), a.shifts().end(), b.shifts().begin())) {
        return false;
    }
    const auto ca = with_canonical_phase(a);
    const auto cb = with_canonical_phase(b);
    for (int j = 0; j < a.dim().value(); ++j) {
        if (std::abs(ca.coefficient(j) - cb.coefficient(j)) > tol) {
            return false;
        }
    }
    return true;
}

QuditStateFamily make_max_entangled(Dimension d, int n) {
    check_arity(n);
    const double c = 1.0 / std::sqrt(static_cast<double>(d.value()));
    return QuditStateFamily(d, std::vector<Amplitude>(static_cast<std::size_t>(d.value()), c),
                            std::vector<int>(static_cast<std::size_t>(n), 0));
}

QuditStateFamily make_bell(Dimension d, ModInt u, ModInt v) {
    if (u.dim() != d || v.dim() != d) {
        throw DimensionError("make_bell: parameter dimension mismatch");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d.value()));
    std::vector<Amplitude> c(static_cast<std::size_t>(d.value()));
    for (int j = 0; j < d.value(); ++j) {
        c[static_cast<std::size_t>(j)] = scale * root_of_unity(d, static_cast<long long>(j) * u.value());
    }
    return QuditStateFamily(d, std::move(c), {0, v.value()});
}

QuditStateFamily make_ghz(Dimension d, int n, std::span<const double> deltas) {
    check_arity(n);
    if (deltas.size() != static_cast<std::size_t>(d.value())) {
        throw ConfigError("make_ghz: expected " + std::to_string(d.value()) + " phases, got " +
                          std::to_string(deltas.size()));
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d.value()));
    std::vector<Amplitude> c;
    c.reserve(deltas.size());
    for (const double delta : deltas) {
        if (!std::isfinite(delta)) {
            throw ConfigError("make_ghz: non-finite phase");
        }
        c.push_back(scale * std::polar(1.0, delta));
    }
    return QuditStateFamily(d, std::move(c), std::vector<int>(static_cast<std::size_t>(n), 0));
}

QuditStateFamily make_ghz_class(Dimension d, int n, ModInt mu1, std::span<const ModInt> mus,
                                std::span<const Amplitude> alphas) {
    check_arity(n);
    if (mus.size() != static_cast<std::size_t>(n - 1)) {
        throw ConfigError("make_ghz_class: expected n-1 shifts mu_2..mu_n");
    }
    if (alphas.size() != static_cast<std::size_t>(d.value())) {
        throw ConfigError("make_ghz_class: expected d alphas");
    }
    if (std::abs(squared_norm(alphas) - 1.0) > kNormTolerance) {
        throw ConfigError("make_ghz_class: sum |alpha_j|^2 must equal 1");
    }
    if (mu1.dim() != d) {
        throw DimensionError("make_ghz_class: mu1 dimension mismatch");
    }
    std::vector<Amplitude> c(static_cast<std::size_t>(d.value()));
    for (int j = 0; j < d.value(); ++j) {
        c[static_cast<std::size_t>(j)] =
            root_of_unity(d, static_cast<long long>(j) * mu1.value()) * alphas[static_cast<std::size_t>(j)];
    }
    std::vector<int> shifts{0};
    for (const ModInt mu : mus) {
        if (mu.dim() != d) {
            throw DimensionError("make_ghz_class: shift dimension mismatch");
        }
        shifts.push_back(mu.value());
    }
    return QuditStateFamily(d, std::move(c), std::move(shifts));
}

QuditStateFamily make_cat_like(Dimension d, int n, std::span<const Amplitude> omegas) {
    check_arity(n);
    if (omegas.size() != static_cast<std::size_t>(d.value())) {
        throw ConfigError("make_cat_like: expected d coefficients");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(d.value()));
    std::vector<Amplitude> c;
    c.reserve(omegas.size());
    for (const auto& w : omegas) {
        if (std::abs(std::abs(w) - 1.0) > kNormTolerance) {
            throw ConfigError("make_cat_like: every omega_j must have unit modulus");
        }
        c.push_back(scale * w);
    }
    return QuditStateFamily(d, std::move(c), std::vector<int>(static_cast<std::size_t>(n), 0));
}

PureState family_to_state(const QuditStateFamily& f, std::vector<int> labels) {
    if (labels.size() != static_cast<std::size_t>(f.arity())) {
        throw RegisterError("family_to_state: expected " + std::to_string(f.arity()) + " labels");
    }
    const int d = f.dim().value();
    std::vector<Amplitude> amps(register_size(f.dim(), labels.size()));
    for (int j = 0; j < d; ++j) {
        std::size_t index = 0;
        for (const int s : f.shifts()) {
            index = index * static_cast<std::size_t>(d) + static_cast<std::size_t>(wrap(j + s, d));
        }
        amps[index] = f.coefficient(j);
    }
    return PureState(f.dim(), std::move(labels), std::move(amps));
}

PureState family_to_state(const QuditStateFamily& f) {
    std::vector<int> labels(static_cast<std::size_t>(f.arity()));
    std::iota(labels.begin(), labels.end(), 1);
    return family_to_state(f, std::move(labels));
}

QuditStateFamily PairSpec::family(Dimension d) const {
    if (kind == Kind::max_entangled) {
        return make_max_entangled(d, 2);
    }
    return make_bell(d, ModInt(u, d), ModInt(v, d));
}

}  // namespace qswap
