// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace phaselim {

enum class BoundKind {
    nphoton_phi,
    nphoton_phitot,
    general_phi,
    general_phitot,
    single_mode_phi,
    single_mode_phitot,
    manifold_max,
};

std::string to_string(BoundKind kind);

/// One evaluated lower limit together with its saturating construction.
struct BoundReport {
    BoundKind kind;
    double value;        // radians
    double energy;       // mean photon number the bound was evaluated at
    std::string recipe;  // saturating state construction, textual
    bool attainable;     // exact saturation is possible at this energy
};

/// pi/2N: smallest phi an N-photon state can detect with certainty.
double nphoton_phi_bound(int photon_number);

/// pi/N: smallest total phase an N-photon state can detect with certainty.
double nphoton_phitot_bound(int photon_number);

/// Residual arccos(1 - eta) - sqrt(eta / (2 - eta)); strictly decreasing on
/// (1, 2) with a sign change, so bisection is safe.
double eta_opt_residual(double eta);

/// Bisection root of the residual on (1, 2) to the given bracket width.
/// tolerance must lie in (0, 1e-6].
double solve_eta_opt(double tolerance);

/// Memoized high-precision root, approximately 1.6891577.
double eta_opt();

/// arccos(1 - eta_opt) / eta_opt, approximately 1.38005: the dimensionless
/// constant of the general phi bound.
double general_phi_constant();

/// general_phi_constant() / <N>.
double general_phi_bound(double mean_photons);

/// pi / (2 <N>): the mean-energy orthogonalization limit on total phase.
double general_phitot_bound(double mean_photons);

/// (pi/2N_max, pi/N_max) for states whose manifolds must all be
/// orthogonalized simultaneously; N_max is the highest excited manifold.
std::pair<double, double> manifold_bounds(int n_max);

/// lambda_0 / N for an N-photon cluster.
double de_broglie_wavelength(double optical_wavelength, int photon_number);

/// Evaluates one bound kind at the given energy. manifold_max is excluded
/// (use manifold_bounds; its argument is a manifold index, not an energy).
BoundReport make_bound_report(BoundKind kind, double energy);

/// One row of the limits table: a state class and accuracy measure with the
/// single-mode and multimode entries. A missing one_mode entry means the
/// limit is not applicable (single-mode photon number states cannot be made
/// orthogonal by a phase shift).
struct LimitsRow {
    std::string state_class;  // "arbitrary" or "n-photon"
    std::string entity;       // "phi" or "phi_tot"
    std::optional<BoundReport> one_mode;
    BoundReport multimode;
};

/// All lower limits evaluated at the given mean photon number: six finite
/// entries plus the two not-applicable cells.
std::vector<LimitsRow> limits_table(double energy);

}  // namespace phaselim
