// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#include "phaselim/bounds.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace phaselim {

namespace {

constexpr double kPi = std::numbers::pi;

double bisect_eta(double tolerance) {
    // residual(1) = pi/2 - 1 > 0 and residual -> -inf as eta -> 2.
    double lo = 1.0;
    double hi = 2.0;
    for (int i = 0; i < 200 && hi - lo > tolerance; ++i) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) {
            break;
        }
        if (eta_opt_residual(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return lo + (hi - lo) / 2.0;
}

bool near_positive_integer(double x) {
    return x >= 0.5 && std::abs(x - std::round(x)) < 1e-9;
}

std::string itoa_round(double x) { return std::to_string(static_cast<long long>(std::llround(x))); }

}  // namespace

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::nphoton_phi: return "nphoton_phi";
        case BoundKind::nphoton_phitot: return "nphoton_phitot";
        case BoundKind::general_phi: return "general_phi";
        case BoundKind::general_phitot: return "general_phitot";
        case BoundKind::single_mode_phi: return "single_mode_phi";
        case BoundKind::single_mode_phitot: return "single_mode_phitot";
        case BoundKind::manifold_max: return "manifold_max";
    }
    throw std::invalid_argument("unknown bound kind");
}

double nphoton_phi_bound(int photon_number) {
    if (photon_number < 1) {
        throw std::invalid_argument("no bound exists for N < 1: the vacuum cannot be made orthogonal");
    }
    return kPi / (2.0 * photon_number);
}

double nphoton_phitot_bound(int photon_number) {
    if (photon_number < 1) {
        throw std::invalid_argument("no bound exists for N < 1: the vacuum cannot be made orthogonal");
    }
    return kPi / photon_number;
}

double eta_opt_residual(double eta) {
    if (eta >= 2.0) {
        return -std::numeric_limits<double>::infinity();
    }
    return std::acos(1.0 - eta) - std::sqrt(eta / (2.0 - eta));
}

double solve_eta_opt(double tolerance) {
    if (!(tolerance > 0.0) || tolerance > 1e-6) {
        throw std::invalid_argument("tolerance must lie in (0, 1e-6]");
    }
    return bisect_eta(tolerance);
}

double eta_opt() {
    static const double value = bisect_eta(4e-16);
    return value;
}

double general_phi_constant() {
    static const double value = std::acos(1.0 - eta_opt()) / eta_opt();
    return value;
}

double general_phi_bound(double mean_photons) {
    if (!(mean_photons > 0.0)) {
        throw std::invalid_argument("no bound exists for a nonpositive mean photon number");
    }
    return general_phi_constant() / mean_photons;
}

double general_phitot_bound(double mean_photons) {
    if (!(mean_photons > 0.0)) {
        throw std::invalid_argument("no bound exists for a nonpositive mean photon number");
    }
    return kPi / (2.0 * mean_photons);
}

std::pair<double, double> manifold_bounds(int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("no bound exists without an excited manifold");
    }
    return {kPi / (2.0 * n_max), kPi / n_max};
}

double de_broglie_wavelength(double optical_wavelength, int photon_number) {
    if (!(optical_wavelength > 0.0)) {
        throw std::invalid_argument("optical wavelength must be positive");
    }
    if (photon_number < 1) {
        throw std::invalid_argument("photon number must be at least 1");
    }
    return optical_wavelength / photon_number;
}

BoundReport make_bound_report(BoundKind kind, double energy) {
    if (!(energy > 0.0)) {
        throw std::invalid_argument("no bound exists for a nonpositive mean photon number");
    }
    BoundReport report{kind, 0.0, energy, "", false};
    switch (kind) {
        case BoundKind::nphoton_phi:
            // Applies at integer energies; evaluated as written in the table.
            report.value = kPi / (2.0 * energy);
            report.attainable = near_positive_integer(energy);
            report.recipe = "phi_N:" + itoa_round(energy) + ":2:0 with lambdas (1,-1) at phi = pi/2N";
            break;
        case BoundKind::nphoton_phitot:
            report.value = kPi / energy;
            report.attainable = near_positive_integer(energy);
            report.recipe = "phi_N:" + itoa_round(energy) + ":2:0 with shifts (pi/2N, -pi/2N)";
            break;
        case BoundKind::general_phi:
            report.value = general_phi_bound(energy);
            report.attainable = near_positive_integer(energy * eta_opt());
            report.recipe = "upsilon_N:" + itoa_round(energy * eta_opt()) +
                            ":2:0 with lambdas (1,-1), needs <N> = N/eta_opt";
            break;
        case BoundKind::general_phitot:
            report.value = general_phitot_bound(energy);
            report.attainable = near_positive_integer(2.0 * energy);
            report.recipe = "omega_N:" + itoa_round(2.0 * energy) +
                            ":1:0 with the single shift phi_1 = pi/N, needs <N> = N/2";
            break;
        case BoundKind::single_mode_phi:
            report.value = kPi / (2.0 * energy);
            report.attainable = near_positive_integer(2.0 * energy);
            report.recipe = "omega_N:" + itoa_round(2.0 * energy) + ":1:0 at phi = pi/N";
            break;
        case BoundKind::single_mode_phitot:
            report.value = kPi / (2.0 * energy);
            report.attainable = near_positive_integer(2.0 * energy);
            report.recipe = "omega_N:" + itoa_round(2.0 * energy) + ":1:0 at phi = pi/N";
            break;
        case BoundKind::manifold_max:
            throw std::invalid_argument("manifold_max takes a manifold index; use manifold_bounds");
    }
    return report;
}

std::vector<LimitsRow> limits_table(double energy) {
    if (!(energy > 0.0)) {
        throw std::invalid_argument("no bound exists for a nonpositive mean photon number");
    }
    std::vector<LimitsRow> rows;
    rows.push_back({"arbitrary", "phi", make_bound_report(BoundKind::single_mode_phi, energy),
                    make_bound_report(BoundKind::general_phi, energy)});
    rows.push_back({"arbitrary", "phi_tot",
                    make_bound_report(BoundKind::single_mode_phitot, energy),
                    make_bound_report(BoundKind::general_phitot, energy)});
    // Single-mode photon number states cannot be made orthogonal by a phase
    // shift, so the one-mode cells of the fixed-N rows are not applicable.
    rows.push_back({"n-photon", "phi", std::nullopt,
                    make_bound_report(BoundKind::nphoton_phi, energy)});
    rows.push_back({"n-photon", "phi_tot", std::nullopt,
                    make_bound_report(BoundKind::nphoton_phitot, energy)});
    return rows;
}

}  // namespace phaselim
