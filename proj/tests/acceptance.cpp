// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance suite: reproduces the published constants and certifies the
// bounds numerically, one pass/fail line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "phaselim/bounds.hpp"
#include "phaselim/certify.hpp"
#include "phaselim/fock.hpp"
#include "phaselim/phase_shift.hpp"
#include "phaselim/states.hpp"
#include "support/helpers.hpp"

using namespace phaselim;
namespace pt = phaselim::test;

namespace {

constexpr double kPi = std::numbers::pi;

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d %-38s %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
                detail.c_str());
    if (!pass) {
        ++failures;
    }
}

std::string fmt(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.9g", x);
    return buffer;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

// 1. The transcendental root matches the published 1.6891577 and is cheap.
void criterion_eta_root() {
    const auto start = std::chrono::steady_clock::now();
    const double eta = solve_eta_opt(1e-12);
    const double ms = elapsed_ms(start);
    const bool pass = std::abs(eta - 1.6891577) < 5e-7 && ms < 1.0;
    report(1, "eta_opt root", pass, "eta = " + fmt(eta) + ", " + fmt(ms) + " ms");
}

// 2. The dimensionless bound constant.
void criterion_bound_constant() {
    const double value = general_phi_bound(1.0);
    report(2, "phi bound constant at <N> = 1", std::abs(value - 1.38005) <= 5e-6,
           "value = " + fmt(value));
}

// 3. Coefficients of the optimal vacuum-plus-NOON state.
void criterion_state_amplitudes() {
    const PureState upsilon = make_upsilon_n(2, 2);
    const double vacuum = std::abs(upsilon.amplitude(OccupationVector{0, 0}));
    const double noon = std::sqrt(2.0) * std::abs(upsilon.amplitude(OccupationVector{2, 0}));
    const bool pass = std::abs(vacuum - 0.638740) <= 1e-6 && std::abs(noon - 0.769423) <= 1e-6;
    report(3, "optimal state amplitudes", pass,
           "vacuum = " + fmt(vacuum) + ", excited = " + fmt(noon));
}

// 4. NOON orthogonality at pi/2N for N up to 12 and 2..4 modes.
void criterion_noon_orthogonality() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int modes = 2; modes <= 4; ++modes) {
        std::vector<double> lambdas(static_cast<std::size_t>(modes), 0.0);
        lambdas[0] = 1.0;
        lambdas[1] = -1.0;  // sorted to the extremal profile by construction
        for (int n = 1; n <= 12; ++n) {
            const PhaseProfile profile(lambdas, kPi / (2.0 * n));
            const double overlap = std::abs(overlap_after_shift(make_phi_n(n, modes), profile));
            worst = std::max(worst, overlap);
        }
    }
    const double ms = elapsed_ms(start);
    report(4, "NOON orthogonality at pi/2N", worst < 1e-12 && ms < 1000.0,
           "max |overlap| = " + fmt(worst) + ", " + fmt(ms) + " ms");
}

// 5. Omega_N saturates the total-phase bound exactly.
void criterion_omega_saturation() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    bool totals_exact = true;
    for (int n = 1; n <= 12; ++n) {
        const PureState omega = make_omega_n(n, 1);
        const PhaseProfile profile({1.0}, kPi / n);
        worst = std::max(worst, std::abs(overlap_after_shift(omega, profile)));
        totals_exact =
            totals_exact && profile.total_phase() == general_phitot_bound(n / 2.0);

        const PureState omega2 = make_omega_n(n, 2);
        const PhaseProfile profile2({1.0, 0.0}, kPi / n);
        worst = std::max(worst, std::abs(overlap_after_shift(omega2, profile2)));
        totals_exact =
            totals_exact && profile2.total_phase() == general_phitot_bound(n / 2.0);
    }
    const double ms = elapsed_ms(start);
    report(5, "Omega_N total-phase saturation", worst < 1e-12 && totals_exact && ms < 1000.0,
           "max |overlap| = " + fmt(worst) + ", totals exact = " +
               (totals_exact ? "yes" : "no"));
}

// 6 and 7. Brute-force certification at four mode/photon configurations,
// saturator recovery, and mode-count irrelevance.
void criterion_brute_force() {
    const auto start = std::chrono::steady_clock::now();
    struct Config {
        int modes;
        int n;
    };
    const Config configs[] = {{2, 2}, {2, 3}, {3, 2}, {4, 2}};
    bool no_violation = true;
    bool recovered = true;
    std::vector<double> best(4, 0.0);
    double step = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        SearchSpec spec;
        spec.mode_count = configs[i].modes;
        spec.exact_n = configs[i].n;
        spec.sample_count = 10000;
        spec.seed = 20260810;
        step = spec.phi_grid.step();
        const CertificateReport result = min_phi_search(spec);
        no_violation = no_violation && !result.violation &&
                       result.best_found_phi >= nphoton_phi_bound(configs[i].n) - step;
        recovered = recovered &&
                    std::abs(result.best_found_phi - nphoton_phi_bound(configs[i].n)) <= step;
        best[i] = result.best_found_phi;
    }
    const double ms = elapsed_ms(start);
    report(6, "brute-force certification", no_violation && recovered && ms < 60000.0,
           "recovered = " + std::string(recovered ? "yes" : "no") + ", " + fmt(ms) + " ms");

    const bool modes_irrelevant =
        std::abs(best[2] - best[0]) <= 2.0 * step && std::abs(best[3] - best[0]) <= 2.0 * step;
    report(7, "mode-count irrelevance", modes_irrelevant,
           "spread = " + fmt(std::max(std::abs(best[2] - best[0]), std::abs(best[3] - best[0]))));
}

// 8. The vacuum-plus-manifold reduction on sampled stationary states.
void criterion_reduction() {
    const auto start = std::chrono::steady_clock::now();
    double worst_overlap = 0.0;
    double worst_energy_gain = -1.0;
    bool all_stationary = true;
    for (int i = 0; i < 1000; ++i) {
        const auto [state, profile] = pt::sample_vacuum_plus_noon(0xfeed0000u + i);
        all_stationary = all_stationary && check_stationarity(state, profile).stationary;
        const PureState reduced = reduce_to_vacuum_plus_manifold(state, profile);
        worst_overlap =
            std::max(worst_overlap, std::abs(overlap_after_shift(reduced, profile)));
        worst_energy_gain = std::max(
            worst_energy_gain, mean_photon_number(reduced) - mean_photon_number(state));
    }
    const double ms = elapsed_ms(start);
    const bool pass =
        worst_overlap <= 1e-10 && worst_energy_gain <= 1e-10 && all_stationary && ms < 10000.0;
    report(8, "vacuum-plus-manifold reduction", pass,
           "max |overlap| = " + fmt(worst_overlap) +
               ", max energy gain = " + fmt(worst_energy_gain) + ", " + fmt(ms) + " ms");
}

// 9. xi is globally distinguishable at 2 pi but never per manifold.
void criterion_relative_phase_counterexample() {
    const PureState xi = make_xi();
    const double at_two_pi =
        std::abs(overlap_after_shift(xi, PhaseProfile({0.5, -0.5}, 2.0 * kPi)));
    double worst_deviation = 0.0;
    for (int k = 0; k < 512; ++k) {
        const double phi = 2.0 * kPi * k / 511.0;
        const double term =
            std::abs(manifold_overlap_term(xi, PhaseProfile({0.5, -0.5}, phi), 0));
        worst_deviation = std::max(worst_deviation, std::abs(term - 0.5));
    }
    const bool pass = at_two_pi < 1e-12 && worst_deviation <= 1e-12;
    report(9, "relative-phase counterexample", pass,
           "|overlap(2pi)| = " + fmt(at_two_pi) +
               ", vacuum-term deviation = " + fmt(worst_deviation));
}

// 10. The rendered limits table matches its golden file.
void criterion_table_render() {
    const std::string cmd = std::string(PHASELIM_CLI_PATH) + " bounds --energy 1 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    if (pipe != nullptr) {
        char buffer[4096];
        std::size_t n = 0;
        while ((n = std::fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
            out.append(buffer, n);
        }
        pclose(pipe);
    }
    std::ifstream golden_file(std::string(PHASELIM_GOLDEN_DIR) + "/bounds_energy1.txt",
                              std::ios::binary);
    std::ostringstream golden;
    golden << golden_file.rdbuf();

    std::size_t na_count = 0;
    for (std::size_t pos = out.find("NA"); pos != std::string::npos;
         pos = out.find("NA", pos + 2)) {
        ++na_count;
    }
    const bool pass = !out.empty() && out == golden.str() && na_count == 2 &&
                      out.find("1.570796") != std::string::npos &&
                      out.find("3.14159") != std::string::npos &&
                      out.find("1.38005") != std::string::npos;
    report(10, "limits table rendering", pass,
           "golden match = " + std::string(out == golden.str() ? "yes" : "no"));
}

// 11. Detection floor of a vacuum+3 superposition family sits at the
// highest-manifold bound, not at the mean-energy bound.
void criterion_manifold_floor() {
    const auto start = std::chrono::steady_clock::now();
    const double bound = manifold_bounds(3).first;
    const PhiGrid grid;
    double best = grid.max;
    for (int i = 0; i < 1000; ++i) {
        const PureState state =
            i == 0 ? make_phi_n(3, 2) : sample_state(2, {0, 3}, 0xabc000u + i);
        const auto zero = first_distinguishable_phi(state, {1.0, -1.0}, grid, 1e-6);
        if (zero && *zero < best) {
            best = *zero;
        }
    }
    const double ms = elapsed_ms(start);
    const bool pass =
        best >= bound - grid.step() && std::abs(best - bound) <= grid.step() && ms < 5000.0;
    report(11, "highest-manifold detection floor", pass,
           "min phi = " + fmt(best) + " vs bound " + fmt(bound) + ", " + fmt(ms) + " ms");
}

}  // namespace

int main() {
    criterion_eta_root();
    criterion_bound_constant();
    criterion_state_amplitudes();
    criterion_noon_orthogonality();
    criterion_omega_saturation();
    criterion_brute_force();
    criterion_reduction();
    criterion_relative_phase_counterexample();
    criterion_table_render();
    criterion_manifold_floor();
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
