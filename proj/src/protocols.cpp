#include "qswap/protocols.hpp"

#include <numeric>
#include <set>
#include <string>

#include "qswap/errors.hpp"
#include "qswap/families.hpp"
#include "qswap/state.hpp"

namespace qswap {

namespace {

// Labels: qudits 0..n of the shared max state, then (first, second) per party.
int party_first(int k) { return 1000 + 2 * k; }
int party_second(int k) { return 1001 + 2 * k; }

void check_parties(Dimension d, std::size_t n) {
    if (n < 1) {
        throw ConfigError("protocol needs at least one party");
    }
    // Qudit 0 is measured first, so the live register peaks at n remaining
    // shared qudits plus one fresh pair.
    (void)register_size(d, n + 2);
}

PureState shared_state(Dimension d, int n) {
    std::vector<int> labels(static_cast<std::size_t>(n + 1));
    std::iota(labels.begin(), labels.end(), 0);
    return family_to_state(make_max_entangled(d, n + 1), std::move(labels));
}

}  // namespace

TpView tp_view(const SummationTranscript& t) {
    return {t.announced_sum, t.tp_base, t.tp_results};
}

SummationTranscript run_summation(Dimension d, std::span<const ModInt> secrets, RandomSeed seed) {
    check_parties(d, secrets.size());
    const int dd = d.value();
    const int n = static_cast<int>(secrets.size());
    Rng rng(seed);

    SummationTranscript t;
    t.d = dd;
    t.n = n;
    t.seed = seed.value;

    // Computational measurements on qudits nobody else touches commute with the
    // parties' Bell measurements, so TP's results are drawn as early as possible.
    auto base = measure_computational(shared_state(d, n), 0, rng);
    t.tp_base = base.outcome;
    PureState state = std::move(base.post);
    long long secret_total = 0;
    long long announced = 0;
    long long result_total = 0;
    for (int k = 1; k <= n; ++k) {
        const ModInt x = secrets[static_cast<std::size_t>(k - 1)];
        if (x.dim() != d) {
            throw DimensionError("secret dimension does not match the protocol dimension");
        }
        const int u = rng.below(dd);
        t.secrets.push_back(x.value());
        t.preparations.push_back({u, x.value()});
        secret_total += x.value();

        state = tensor(state, bell_state(d, ModInt(u, d), x, {party_first(k), party_second(k)}));
        auto m = bell_measure(state, k, party_first(k), rng);
        t.outcomes.push_back(m.outcome);
        announced += m.outcome.v;
        auto r = measure_computational(m.post, party_second(k), rng);
        t.tp_results.push_back(r.outcome);
        result_total += r.outcome;
        state = std::move(r.post);
    }
    t.announced_sum = wrap(announced, dd);

    t.tp_sum = wrap(result_total - t.announced_sum - static_cast<long long>(n) * t.tp_base, dd);
    t.expected_sum = wrap(secret_total, dd);
    return t;
}

double success_probability(Dimension d, std::span<const int> v, std::span<const int> v_prime) {
    if (v.size() != v_prime.size()) {
        throw ConfigError("success_probability: v and v' differ in length");
    }
    const int dd = d.value();
    double p = 1.0;
    for (std::size_t k = 0; k < v.size(); ++k) {
        for (const int x : {v[k], v_prime[k]}) {
            if (x < 0 || x >= dd) {
                throw DimensionError("success_probability: entry outside Z_" + std::to_string(dd));
            }
        }
        const int first = dd - v[k];
        const int second = dd - v[k] - v_prime[k];
        if (second < 0) {
            return 0.0;
        }
        p *= static_cast<double>(first * second) / static_cast<double>(dd * dd);
    }
    return p;
}

SecretSharingTranscript run_secret_sharing(Dimension d, int n, RandomSeed seed) {
    if (n < 1) {
        throw ConfigError("secret sharing needs at least one Bob");
    }
    check_parties(d, static_cast<std::size_t>(n));
    const int dd = d.value();
    Rng rng(seed);

    SecretSharingTranscript t;
    t.d = dd;
    t.n = n;
    t.seed = seed.value;

    const auto pair = make_max_entangled(d, 2);
    auto base = measure_computational(shared_state(d, n), 0, rng);
    t.alice_base = base.outcome;
    PureState state = std::move(base.post);
    long long share_total = 0;
    long long result_total = 0;
    for (int k = 1; k <= n; ++k) {
        state = tensor(state, family_to_state(pair, {party_first(k), party_second(k)}));
        auto m = bell_measure(state, k, party_first(k), rng);
        t.bob_outcomes.push_back(m.outcome);
        t.shares.push_back(m.outcome.v);
        share_total += m.outcome.v;
        auto r = measure_computational(m.post, party_second(k), rng);
        t.alice_results.push_back(r.outcome);
        result_total += r.outcome;
        state = std::move(r.post);
    }

    t.alice_secret = wrap(result_total - static_cast<long long>(n) * t.alice_base, dd);
    t.reconstructed = wrap(share_total, dd);
    return t;
}

std::vector<int> consistent_secrets(Dimension d, int n, std::span<const std::pair<int, int>> known_shares) {
    if (n < 1) {
        throw ConfigError("consistent_secrets: n must be positive");
    }
    const int dd = d.value();
    std::vector<int> fixed(static_cast<std::size_t>(n), -1);
    for (const auto& [index, share] : known_shares) {
        if (index < 0 || index >= n || share < 0 || share >= dd) {
            throw ConfigError("consistent_secrets: share out of range");
        }
        fixed[static_cast<std::size_t>(index)] = share;
    }
    std::set<int> secrets;
    std::vector<int> shares(static_cast<std::size_t>(n), 0);
    // Odometer over every completion of the unknown shares.
    while (true) {
        long long total = 0;
        for (int k = 0; k < n; ++k) {
            total += fixed[static_cast<std::size_t>(k)] >= 0 ? fixed[static_cast<std::size_t>(k)]
                                                            : shares[static_cast<std::size_t>(k)];
        }
        secrets.insert(wrap(total, dd));
        int k = 0;
        for (; k < n; ++k) {
            if (fixed[static_cast<std::size_t>(k)] >= 0) continue;
            if (++shares[static_cast<std::size_t>(k)] < dd) break;
            shares[static_cast<std::size_t>(k)] = 0;
        }
        if (k == n) break;
    }
    return {secrets.begin(), secrets.end()};
}

}  // namespace qswap
