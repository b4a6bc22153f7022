// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "phaselim/fock.hpp"
#include "phaselim/phase_shift.hpp"

namespace phaselim {

enum class RecipeKind { phi_n, upsilon_n, omega_n, xi, custom };

/// Canonical textual form "kind:N:M:theta"; the xi state is the bare token
/// "xi". Custom recipes are programmatic only and have no textual form.
struct StateRecipe {
    RecipeKind kind = RecipeKind::custom;
    int photon_number = 0;
    int mode_count = 0;
    double theta = 0.0;

    static StateRecipe parse(const std::string& text);
    std::string to_string() const;
    PureState build() const;
};

/// (|N,0,...,0> + e^{i theta} |0,...,0,N>) / sqrt(2). Two excited modes out
/// of M >= 2; detects phi = pi/2N with lambdas (1, ..., -1).
PureState make_phi_n(int photon_number, int mode_count, double theta = 0.0);

/// sqrt((eta-1)/eta) |vac> + (1/sqrt(2 eta)) (|N,0,...> + e^{i theta} |0,...,N>)
/// with eta = eta_opt. Mean photon number N / eta_opt; saturates the general
/// phi bound at its orthogonalization phase.
PureState make_upsilon_n(int photon_number, int mode_count, double theta = 0.0);

/// (|0,...,0> + |N,0,...,0>) / sqrt(2); mean photon number N/2. Orthogonal
/// under the single shift phi_1 = pi/N, saturating the total-phase limit.
PureState make_omega_n(int photon_number, int mode_count);

/// (|0,0> + |0,1>) / sqrt(2): globally distinguishable at phi = 2 pi under
/// the relative-phase shift, yet never manifoldwise distinguishable.
PureState make_xi();

/// Maps a state satisfying the orthogonality condition under the profile to
/// a vacuum-plus-one-manifold state that still satisfies it and whose mean
/// photon number is no larger. Requires every occupied manifold's sigma to
/// be real (within 1e-9). When several manifolds tie for the largest
/// (1 - sigma_k)/k the smallest photon number wins.
PureState reduce_to_vacuum_plus_manifold(const PureState& state,
                                         const PhaseProfile& profile);

/// Diagnostics for the energy-minimization stationarity condition
/// r_k (k - alpha + beta sigma_k) = 0 over the occupied manifolds.
struct StationarityReport {
    int occupied_count = 0;
    double max_sigma_imag = 0.0;
    double fit_residual = 0.0;  // RMS of k - alpha + beta sigma_k
    double alpha = 0.0;
    double beta = 0.0;
    bool trivial = false;  // one or fewer occupied manifolds
    bool stationary = false;
};

StationarityReport check_stationarity(const PureState& state, const PhaseProfile& profile);

}  // namespace phaselim
