#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qswap/bell.hpp"
#include "qswap/modular.hpp"
#include "qswap/rng.hpp"

namespace qswap {

/// Full record of one run of the multi-party summation protocol.
///
/// A semi-honest third party (TP) holds qudit 0 of max(d, n+1) and hands qudit
/// k to party k. Party k encodes x_k in a Bell pair |Psi(u_k, x_k)>, Bell-measures
/// (TP's qudit k, own first qudit) and ships the second qudit to TP. The
/// parties announce sum v'_k; TP measures everything in the computational basis.
struct SummationTranscript {
    int d = 0;
    int n = 0;
    std::vector<int> secrets;                // party-private
    std::vector<BellOutcome> preparations;   // (u_k, v_k = x_k), party-private
    std::vector<BellOutcome> outcomes;       // (u'_k, v'_k), party-private
    int announced_sum = 0;                   // sum v'_k mod d
    int tp_base = 0;                         // i
    std::vector<int> tp_results;             // i (+) v_k (+) v'_k
    int tp_sum = 0;
    int expected_sum = 0;
    std::uint64_t seed = 0;

    bool correct() const noexcept { return tp_sum == expected_sum; }
};

/// Everything TP observes during a summation run.
struct TpView {
    int announced_sum = 0;
    int base = 0;
    std::vector<int> results;

    friend bool operator==(const TpView&, const TpView&) = default;
};

TpView tp_view(const SummationTranscript& t);

/// Simulates the summation protocol on the dense oracle. Every party and TP
/// measurement is Born-sampled from a single generator seeded by `seed`.
SummationTranscript run_summation(Dimension d, std::span<const ModInt> secrets, RandomSeed seed);

/// prod_k (d - v_k)(d - v_k - v'_k) / d^2, evaluated literally; 0 when any
/// factor is negative.
double success_probability(Dimension d, std::span<const int> v, std::span<const int> v_prime);

/// Full record of one secret-sharing run: Alice holds qudit 0 of max(d, n+1),
/// Bob_k holds qudit k and a max pair whose second qudit goes to Alice.
struct SecretSharingTranscript {
    int d = 0;
    int n = 0;
    int alice_base = 0;                   // i
    std::vector<int> alice_results;       // i (+) v'_k
    std::vector<BellOutcome> bob_outcomes;
    std::vector<int> shares;              // v'_k
    int alice_secret = 0;
    int reconstructed = 0;
    std::uint64_t seed = 0;

    bool consistent() const noexcept { return alice_secret == reconstructed; }
};

SecretSharingTranscript run_secret_sharing(Dimension d, int n, RandomSeed seed);

/// Distinct secrets compatible with a partial set of shares, given as
/// (bob index in [0, n), share) pairs; unknown shares range over Z_d.
std::vector<int> consistent_secrets(Dimension d, int n, std::span<const std::pair<int, int>> known_shares);

}  // namespace qswap
