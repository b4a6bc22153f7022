// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <complex>
#include <initializer_list>
#include <map>
#include <vector>

namespace phaselim {

using Complex = std::complex<double>;

/// Photon counts per mode of one Fock basis ket |n_1,...,n_M>.
/// Counts are exact integers; the total never touches floating point.
class OccupationVector {
public:
    explicit OccupationVector(std::vector<int> counts);
    OccupationVector(std::initializer_list<int> counts);

    int mode_count() const { return static_cast<int>(counts_.size()); }
    int total() const;
    int operator[](int mode) const { return counts_[static_cast<std::size_t>(mode)]; }
    const std::vector<int>& counts() const { return counts_; }

    auto operator<=>(const OccupationVector&) const = default;

private:
    std::vector<int> counts_;
};

/// Amplitudes with modulus below this are dropped by PureState::normalize().
inline constexpr double kAmplitudePrune = 1e-15;

/// Sparse multimode pure state: occupation ket -> complex amplitude.
/// Global phases are folded into the amplitudes; there is no separate
/// per-manifold phase bookkeeping.
class PureState {
public:
    explicit PureState(int mode_count);

    int mode_count() const { return mode_count_; }
    const std::map<OccupationVector, Complex>& amplitudes() const { return amplitudes_; }
    bool empty() const { return amplitudes_.empty(); }

    /// Zero for kets that are not stored.
    Complex amplitude(const OccupationVector& ket) const;

    /// Setting a zero amplitude erases the ket.
    void set_amplitude(const OccupationVector& ket, Complex value);

    double squared_norm() const;
    double norm() const;
    bool is_normalized(double tol = 1e-9) const;

    /// Scales to unit norm and prunes amplitudes below kAmplitudePrune.
    void normalize();

private:
    int mode_count_;
    std::map<OccupationVector, Complex> amplitudes_;
};

/// All occupation vectors with the given total photon number, in descending
/// lexicographic order. The count is C(N + M - 1, M - 1).
std::vector<OccupationVector> enumerate_manifold(int mode_count, int photon_number);

/// Sum_v |a_v|^2 * total(v). Requires a normalized state (norm within 1e-9).
double mean_photon_number(const PureState& state);

/// Sum_v conj(a_v) * b_v over the shared kets.
Complex inner_product(const PureState& a, const PureState& b);

/// Unnormalized restriction of the state to one fixed-photon-number subspace.
PureState manifold_projection(const PureState& state, int photon_number);

/// Weight |1_N psi|^2 of one manifold.
double manifold_weight(const PureState& state, int photon_number);

/// Ascending list of photon numbers whose manifold weight exceeds weight_tol.
std::vector<int> occupied_manifolds(const PureState& state, double weight_tol = 1e-12);

int highest_occupied_manifold(const PureState& state, double weight_tol = 1e-12);

}  // namespace phaselim
