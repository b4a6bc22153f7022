// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "phaselim/bounds.hpp"
#include "phaselim/fock.hpp"

namespace phaselim {

struct PhiGrid {
    double min = 0.0;
    double max = std::numbers::pi;
    int steps = 4096;  // grid points, endpoints included

    double step() const { return (max - min) / (steps - 1); }
};

enum class LambdaScheme { extremal, linear, free_grid };

/// One brute-force certification run. Samples are drawn from a flat simplex
/// over |c_j|^2 across the restricted Fock space with uniform phases; the
/// analytic saturating state is injected as sample 0. Identical spec and
/// seed give a bit-identical report, also under parallel evaluation
/// (per-sample seeds derive from the spec seed; results reduce by min).
struct SearchSpec {
    int mode_count = 2;
    int photon_cap = 4;                   // highest manifold sampled
    std::optional<int> exact_n;           // restrict to one manifold
    std::optional<double> energy_target;  // fix the mean photon number
    PhiGrid phi_grid;
    LambdaScheme lambda_scheme = LambdaScheme::extremal;
    int sample_count = 1000;
    std::uint64_t seed = 0;
    double tolerance = 1e-6;  // |overlap| threshold for "detected"
};

struct ScanRecord {
    double phi;
    double overlap_re;
    double overlap_im;
    double overlap_abs;
};

struct CertificateReport {
    BoundKind bound_kind;
    double analytic_value;
    double best_found_phi;  // energy-scaled product phi * <N> in free-energy mode
    std::string best_state_digest;
    bool violation;
    int samples;
    std::uint64_t seed;
    double tolerance;

    std::string to_json() const;
};

/// Smallest detectable phi over the sampled states. With exact_n the report
/// compares against pi/2N; with an energy target against the general bound
/// at that energy; otherwise best_found_phi is the smallest product
/// phi * <N> and the analytic value is the dimensionless constant.
CertificateReport min_phi_search(const SearchSpec& spec);

/// As min_phi_search but minimizing the total phase sum |phi_m| over the
/// scheme's per-mode allocations (signs free).
CertificateReport min_phitot_search(const SearchSpec& spec);

/// (phi, Re overlap, Im overlap, |overlap|) per grid point.
std::vector<ScanRecord> overlap_scan(const PureState& state,
                                     const std::vector<double>& lambdas,
                                     const PhiGrid& grid);

/// Smallest phi with |overlap| <= tol, scanning the grid and refining each
/// candidate minimum locally so saturation points between grid nodes are
/// still found. Empty when no grid phi detects the state.
std::optional<double> first_distinguishable_phi(const PureState& state,
                                                const std::vector<double>& lambdas,
                                                const PhiGrid& grid, double tol);

/// Deterministic random state over the kets of the given manifolds.
PureState sample_state(int mode_count, const std::vector<int>& manifolds,
                       std::uint64_t seed);

/// Comparison of the ramp profile phi_m = m phi against a two-mode
/// interferometer operated at the same largest relative shift (M-1) phi.
/// The two minima agree: the apparent M-fold gain of the ramp is profile
/// bookkeeping, not extra sensitivity.
struct LinearProfileReport {
    int mode_count;
    int photon_number;
    double ramp_min_phi;      // min detectable phi under phi_m = m phi
    double two_mode_min_phi;  // min detectable phi at relative shift (M-1) phi
    double ratio;             // ramp_min_phi / two_mode_min_phi
    double grid_step;
};

LinearProfileReport linear_profile_demo(int mode_count, int photon_number);

}  // namespace phaselim
