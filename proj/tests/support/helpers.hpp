// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only oracles and generators. Everything here recomputes its answer by
// a route independent of the library code it is used to check.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "phaselim/fock.hpp"
#include "phaselim/phase_shift.hpp"

namespace phaselim::test {

/// Exact binomial coefficient via the Pascal recurrence.
inline long long binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    long long value = 1;
    for (int i = 1; i <= k; ++i) {
        value = value * (n - k + i) / i;
    }
    return value;
}

/// Brute-force composition enumeration: an odometer over all tuples with
/// entries in [0, N], keeping those summing to N.
inline std::vector<std::vector<int>> brute_force_compositions(int modes, int total) {
    std::vector<std::vector<int>> result;
    std::vector<int> v(static_cast<std::size_t>(modes), 0);
    while (true) {
        int sum = 0;
        for (int x : v) {
            sum += x;
        }
        if (sum == total) {
            result.push_back(v);
        }
        int m = 0;
        while (m < modes && ++v[static_cast<std::size_t>(m)] > total) {
            v[static_cast<std::size_t>(m)] = 0;
            ++m;
        }
        if (m == modes) {
            break;
        }
    }
    return result;
}

/// Overlap oracle: explicitly build the shifted ket list and take the sum of
/// conj(a_v) * shifted_v term by term, without the library's overlap path.
inline Complex oracle_overlap(const PureState& state, const std::vector<double>& lambdas,
                              double phi) {
    Complex sum{0.0, 0.0};
    for (const auto& [ket, amp] : state.amplitudes()) {
        double exponent = 0.0;
        for (int m = 0; m < ket.mode_count(); ++m) {
            exponent += lambdas[static_cast<std::size_t>(m)] * ket[m];
        }
        const Complex shifted = amp * Complex{std::cos(phi * exponent), std::sin(phi * exponent)};
        sum += std::conj(amp) * shifted;
    }
    return sum;
}

/// Mean photon number oracle (direct weighted sum).
inline double oracle_mean_photons(const PureState& state) {
    double sum = 0.0;
    for (const auto& [ket, amp] : state.amplitudes()) {
        int n = 0;
        for (int m = 0; m < ket.mode_count(); ++m) {
            n += ket[m];
        }
        sum += std::norm(amp) * n;
    }
    return sum;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

/// Random normalized state over the given manifolds, for property tests.
inline PureState random_state(int modes, const std::vector<int>& manifolds, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PureState state(modes);
    for (int n : manifolds) {
        for (const auto& ket : enumerate_manifold(modes, n)) {
            const double mag = uniform(rng, 0.05, 1.0);
            const double phase = uniform(rng, 0.0, 2.0 * std::numbers::pi);
            state.set_amplitude(ket, std::polar(mag, phase));
        }
    }
    state.normalize();
    return state;
}

/// A state plus a profile under which it satisfies the orthogonality
/// condition, built from vacuum and a single NOON-type manifold component:
///   sqrt(w0) e^{i xi0} |vac> + sqrt(1-w0) (|N,0> + e^{i theta} |0,N>)/sqrt(2)
/// with phi chosen so w0 + (1-w0) cos(N phi) = 0. Occupied manifolds are a
/// subset of {0, N}; such states are stationary by construction (two
/// equations, two multipliers).
struct FeasibleSample {
    PureState state;
    PhaseProfile profile;
};

inline FeasibleSample sample_vacuum_plus_noon(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = 1 + static_cast<int>(rng() % 6);
    const bool with_vacuum = (rng() % 5) != 0;
    const double w0 = with_vacuum ? uniform(rng, 0.02, 0.5) : 0.0;
    const double phi =
        w0 > 0.0 ? std::acos(-w0 / (1.0 - w0)) / n : std::numbers::pi / (2.0 * n);

    const double noon = std::sqrt((1.0 - w0) / 2.0);
    PureState state(2);
    if (w0 > 0.0) {
        state.set_amplitude(OccupationVector{0, 0},
                            std::polar(std::sqrt(w0), uniform(rng, 0.0, 2.0 * std::numbers::pi)));
    }
    state.set_amplitude(OccupationVector{n, 0}, noon);
    state.set_amplitude(OccupationVector{0, n},
                        std::polar(noon, uniform(rng, 0.0, 2.0 * std::numbers::pi)));
    state.normalize();
    return {std::move(state), PhaseProfile({1.0, -1.0}, phi)};
}

/// Vacuum plus two NOON-type manifold components N1 < N2, with the weights
/// solved from the real linear orthogonality constraint
///   w0 + w1 cos(N1 phi) + w2 cos(N2 phi) = 0.
/// Rejects configurations where the reduction target manifold would carry a
/// positive sigma (those sit outside the optimal family; the energy lemma is
/// not claimed for them).
inline std::optional<FeasibleSample> sample_three_manifold(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        const int n1 = 1 + static_cast<int>(rng() % 5);
        const int n2 = n1 + 1 + static_cast<int>(rng() % (7 - n1 - 1));
        const double phi = uniform(rng, 0.15, 1.2);
        const double c1 = std::cos(n1 * phi);
        const double c2 = std::cos(n2 * phi);
        if (c2 > 1.0 - 1e-6) {
            continue;
        }
        const double w1 = uniform(rng, 0.05, 0.8);
        const double w2 = (w1 * c1 + (1.0 - w1)) / (1.0 - c2);
        const double w0 = 1.0 - w1 - w2;
        if (w2 < 0.02 || w0 < 0.02) {
            continue;
        }
        // Reduction target: largest (1 - cos(k phi))/k. Keep only samples
        // whose target sigma is negative.
        const double r1 = (1.0 - c1) / n1;
        const double r2 = (1.0 - c2) / n2;
        const double target_sigma = r1 > r2 ? c1 : c2;
        if (target_sigma > -0.05) {
            continue;
        }

        PureState state(2);
        state.set_amplitude(OccupationVector{0, 0}, std::sqrt(w0));
        const double a1 = std::sqrt(w1 / 2.0);
        state.set_amplitude(OccupationVector{n1, 0}, a1);
        state.set_amplitude(OccupationVector{0, n1},
                            std::polar(a1, uniform(rng, 0.0, 2.0 * std::numbers::pi)));
        const double a2 = std::sqrt(w2 / 2.0);
        state.set_amplitude(OccupationVector{n2, 0}, a2);
        state.set_amplitude(OccupationVector{0, n2},
                            std::polar(a2, uniform(rng, 0.0, 2.0 * std::numbers::pi)));
        state.normalize();
        return FeasibleSample{std::move(state), PhaseProfile({1.0, -1.0}, phi)};
    }
    return std::nullopt;
}

}  // namespace phaselim::test
