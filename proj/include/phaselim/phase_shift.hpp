// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "phaselim/fock.hpp"

namespace phaselim {

/// Per-mode phase shifts phi_m = lambda_m * phi with -1 <= lambda_m <= 1 and
/// phi >= 0. Construction sorts the lambdas non-increasing; the profile is
/// defined up to a relabeling of the modes, and the library performs that
/// renumbering itself. mode_order() records where each sorted entry came from.
class PhaseProfile {
public:
    PhaseProfile(std::vector<double> lambdas, double phi);

    /// Builds from raw per-mode shifts phi_m, factoring out phi = max |phi_m|.
    /// All-zero shifts give the all-zero profile with phi = 0.
    static PhaseProfile from_phase_shifts(const std::vector<double>& shifts);

    int mode_count() const { return static_cast<int>(lambdas_.size()); }
    double phi() const { return phi_; }

    /// Sorted non-increasing.
    const std::vector<double>& lambdas() const { return lambdas_; }

    /// Original input position of each sorted slot.
    const std::vector<int>& mode_order() const { return mode_order_; }

    /// lambda_m * phi for the sorted mode index m.
    double phase_shift(int mode) const;

    /// Sum_m |lambda_m| * phi.
    double total_phase() const;

private:
    std::vector<double> lambdas_;
    std::vector<int> mode_order_;
    double phi_ = 0.0;
};

/// Offset profile mu_m = lambda_m - lambda_M, so 0 <= mu_m <= 2, mu_M = 0.
/// For a fixed-photon-number state the offset only changes the overlap by a
/// global phase; across manifolds it shifts relative phases, so the two
/// profiles are never substituted for one another on multi-manifold states.
class ReducedProfile {
public:
    ReducedProfile(std::vector<double> mus, double phi);

    int mode_count() const { return static_cast<int>(mus_.size()); }
    double phi() const { return phi_; }
    const std::vector<double>& mus() const { return mus_; }

private:
    std::vector<double> mus_;
    double phi_;
};

ReducedProfile reduce_profile(const PhaseProfile& profile);

/// Multiplies each amplitude by exp(i phi sum_m lambda_m n_m). Unitary.
PureState apply_phase_shift(const PureState& state, const PhaseProfile& profile);

/// <Psi| exp(i phi sum_m lambda_m n_m) |Psi>.
Complex overlap_after_shift(const PureState& state, const PhaseProfile& profile);
Complex overlap_after_shift(const PureState& state, const ReducedProfile& profile);

/// Mean phase factor of one manifold, renormalized by its weight. Undefined
/// (throws) when the manifold carries no weight. sigma of the vacuum is 1.
Complex sigma_of_manifold(const PureState& state, const PhaseProfile& profile,
                          int photon_number);
Complex sigma_of_manifold(const PureState& state, const ReducedProfile& profile,
                          int photon_number);

/// <Psi| 1_N exp(i phi sum lambda_m n_m) |Psi>, not renormalized; zero when
/// the manifold is unoccupied.
Complex manifold_overlap_term(const PureState& state, const PhaseProfile& profile,
                              int photon_number);

/// |overlap| <= tol: the shifted state is perfectly distinguishable.
bool is_distinguishable(const PureState& state, const PhaseProfile& profile,
                        double tol = 1e-10);

/// Every occupied manifold term has modulus <= tol: distinguishable even by a
/// measurement that also reveals the total energy.
bool is_manifoldwise_distinguishable(const PureState& state, const PhaseProfile& profile,
                                     double tol = 1e-10);

}  // namespace phaselim
