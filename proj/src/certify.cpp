// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#include "phaselim/certify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "phaselim/states.hpp"

namespace phaselim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t spec_seed, int index) {
    return splitmix64(spec_seed ^ (0xA5A5A5A5ull + static_cast<std::uint64_t>(index)));
}

// Uniform in (0, 1]; avoids the distribution classes so the stream is pinned
// to the mt19937_64 specification.
double next_unit(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

/// State reduced to (weight, exponent coefficient) pairs for one multiplier
/// assignment; the overlap is then sum_g w_g exp(i phi s_g).
struct CollapsedState {
    std::vector<std::pair<double, double>> terms;
    double slope_bound = 0.0;  // sum w |s| >= |d overlap / d phi|
    double mean_energy = 0.0;
};

CollapsedState collapse(const PureState& state, const std::vector<double>& multipliers) {
    if (static_cast<int>(multipliers.size()) != state.mode_count()) {
        throw std::invalid_argument("multiplier count does not match the state");
    }
    std::map<double, double> by_exponent;
    CollapsedState out;
    for (const auto& [ket, amp] : state.amplitudes()) {
        const double w = std::norm(amp);
        double s = 0.0;
        for (int m = 0; m < ket.mode_count(); ++m) {
            s += multipliers[static_cast<std::size_t>(m)] * ket[m];
        }
        by_exponent[s] += w;
        out.mean_energy += w * ket.total();
    }
    out.terms.reserve(by_exponent.size());
    for (const auto& [s, w] : by_exponent) {
        out.terms.emplace_back(w, s);
        out.slope_bound += w * std::abs(s);
    }
    return out;
}

Complex overlap_at(const CollapsedState& c, double phi) {
    Complex sum{0.0, 0.0};
    for (const auto& [w, s] : c.terms) {
        sum += w * std::polar(1.0, phi * s);
    }
    return sum;
}

// Ternary search for the minimum of |overlap|^2 on [lo, hi]. The bracket is
// at most two grid steps wide, far below the oscillation scale of the terms.
std::pair<double, double> refine_minimum(const CollapsedState& c, double lo, double hi) {
    const auto f = [&](double phi) { return std::norm(overlap_at(c, phi)); };
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) <= f(m2)) {
            hi = m2;
        } else {
            lo = m1;
        }
    }
    const double phi = lo + (hi - lo) / 2.0;
    return {phi, std::abs(overlap_at(c, phi))};
}

// Smallest phi with |overlap| <= tol. Grid values below the slope-derived
// threshold mark candidate zeros, which are refined locally; a true zero
// always leaves a grid neighbor below the threshold. Scanning stops once phi
// exceeds stop_above by a step.
std::optional<double> first_zero(const CollapsedState& c, const PhiGrid& grid, double tol,
                                 double stop_above = kInf) {
    const double h = grid.step();
    const double thresh = std::max(tol, 0.75 * c.slope_bound * h);

    const std::size_t n = c.terms.size();
    std::vector<Complex> z(n), rot(n);
    for (std::size_t g = 0; g < n; ++g) {
        z[g] = std::polar(1.0, grid.min * c.terms[g].second);
        rot[g] = std::polar(1.0, h * c.terms[g].second);
    }
    for (int k = 0; k < grid.steps; ++k) {
        const double phi_k = grid.min + k * h;
        if (phi_k > stop_above + h) {
            break;
        }
        Complex acc{0.0, 0.0};
        for (std::size_t g = 0; g < n; ++g) {
            acc += c.terms[g].first * z[g];
        }
        if (std::abs(acc) <= thresh) {
            const double lo = std::max(grid.min, phi_k - h);
            const double hi = std::min(grid.max, phi_k + h);
            const auto [phi_min, value] = refine_minimum(c, lo, hi);
            if (value <= tol) {
                return phi_min;
            }
        }
        for (std::size_t g = 0; g < n; ++g) {
            z[g] *= rot[g];
        }
    }
    return std::nullopt;
}

std::vector<double> extremal_lambdas(int mode_count) {
    std::vector<double> lambdas(static_cast<std::size_t>(mode_count), 0.0);
    lambdas.front() = 1.0;
    if (mode_count > 1) {
        lambdas.back() = -1.0;
    }
    return lambdas;
}

std::vector<double> first_mode_lambdas(int mode_count) {
    std::vector<double> lambdas(static_cast<std::size_t>(mode_count), 0.0);
    lambdas.front() = 1.0;
    return lambdas;
}

std::vector<double> ramp_lambdas(int mode_count) {
    std::vector<double> lambdas(static_cast<std::size_t>(mode_count));
    for (int m = 0; m < mode_count; ++m) {
        lambdas[static_cast<std::size_t>(m)] = static_cast<double>(m + 1) / mode_count;
    }
    return lambdas;
}

std::vector<std::vector<double>> free_grid_lambdas(int mode_count) {
    static const double kLevels[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
    std::vector<std::vector<double>> combos;
    std::vector<int> idx(static_cast<std::size_t>(mode_count), 0);
    while (true) {
        std::vector<double> lambdas(static_cast<std::size_t>(mode_count));
        bool all_zero = true;
        for (int m = 0; m < mode_count; ++m) {
            lambdas[static_cast<std::size_t>(m)] = kLevels[idx[static_cast<std::size_t>(m)]];
            all_zero = all_zero && lambdas[static_cast<std::size_t>(m)] == 0.0;
        }
        if (!all_zero) {
            combos.push_back(std::move(lambdas));
        }
        int m = 0;
        while (m < mode_count && ++idx[static_cast<std::size_t>(m)] == 5) {
            idx[static_cast<std::size_t>(m)] = 0;
            ++m;
        }
        if (m == mode_count) {
            break;
        }
    }
    return combos;
}

std::vector<std::vector<double>> phi_lambda_sets(const SearchSpec& spec) {
    switch (spec.lambda_scheme) {
        case LambdaScheme::extremal: return {extremal_lambdas(spec.mode_count)};
        case LambdaScheme::linear: return {ramp_lambdas(spec.mode_count)};
        case LambdaScheme::free_grid: return free_grid_lambdas(spec.mode_count);
    }
    throw std::invalid_argument("unknown lambda scheme");
}

std::vector<std::vector<double>> phitot_lambda_sets(const SearchSpec& spec) {
    switch (spec.lambda_scheme) {
        case LambdaScheme::extremal: {
            std::vector<std::vector<double>> sets{extremal_lambdas(spec.mode_count)};
            if (spec.mode_count > 1) {
                sets.push_back(first_mode_lambdas(spec.mode_count));
            }
            return sets;
        }
        case LambdaScheme::linear: return {ramp_lambdas(spec.mode_count)};
        case LambdaScheme::free_grid: return free_grid_lambdas(spec.mode_count);
    }
    throw std::invalid_argument("unknown lambda scheme");
}

void validate_spec(const SearchSpec& spec) {
    if (spec.mode_count < 1) {
        throw std::invalid_argument("search needs at least one mode");
    }
    if (spec.photon_cap < 1) {
        throw std::invalid_argument("empty search space: photon cap below 1");
    }
    if (spec.sample_count < 1) {
        throw std::invalid_argument("empty search space: no samples requested");
    }
    if (!(spec.tolerance > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (spec.phi_grid.steps < 2 || !(spec.phi_grid.min >= 0.0) ||
        !(spec.phi_grid.max > spec.phi_grid.min)) {
        throw std::invalid_argument("empty search space: invalid phi grid");
    }
    if (spec.exact_n && spec.energy_target) {
        throw std::invalid_argument("exact-N and an energy target are mutually exclusive");
    }
    if (spec.exact_n && *spec.exact_n < 1) {
        throw std::invalid_argument("empty search space: exact N below 1");
    }
    if (spec.exact_n && spec.mode_count == 1) {
        throw std::invalid_argument(
            "single-mode fixed-N states cannot be made orthogonal by a phase shift");
    }
    if (spec.energy_target && !(*spec.energy_target > 0.0)) {
        throw std::invalid_argument("energy target must be positive");
    }
    if (spec.energy_target && *spec.energy_target > spec.photon_cap) {
        throw std::invalid_argument(
            "empty search space: energy target above the photon cap");
    }
    if (spec.lambda_scheme == LambdaScheme::free_grid && spec.mode_count > 5) {
        throw std::invalid_argument("the free-grid lambda scheme is limited to 5 modes");
    }
}

std::string ket_string(const OccupationVector& ket) {
    std::string out = "(";
    for (int m = 0; m < ket.mode_count(); ++m) {
        if (m > 0) {
            out += ",";
        }
        out += std::to_string(ket[m]);
    }
    out += ")";
    return out;
}

std::string state_digest(const PureState& state, int sample_index) {
    // The two heaviest kets identify the sample well enough for reports.
    std::vector<std::pair<double, const OccupationVector*>> heavy;
    for (const auto& [ket, amp] : state.amplitudes()) {
        heavy.emplace_back(std::norm(amp), &ket);
    }
    std::stable_sort(heavy.begin(), heavy.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    std::string out = "sample:" + std::to_string(sample_index);
    char buffer[64];
    for (std::size_t i = 0; i < heavy.size() && i < 2; ++i) {
        std::snprintf(buffer, sizeof(buffer), " %s:w=%.6f", ket_string(*heavy[i].second).c_str(),
                      heavy[i].first);
        out += buffer;
    }
    return out;
}

struct Injection {
    PureState state;
    std::string digest;
};

// Vacuum mixed with one N-manifold component so the mean photon number hits
// the target exactly.
std::optional<Injection> energy_target_injection(int mode_count, int photon_cap, double energy) {
    int best_n = 0;
    double best_gap = kInf;
    for (int n = 1; n <= photon_cap; ++n) {
        const double eta = n / energy;
        if (eta < 1.0 - 1e-12 || eta > 2.0 + 1e-12) {
            continue;
        }
        if (mode_count == 1 && std::abs(eta - 2.0) > 1e-9) {
            continue;  // a single-mode mix is orthogonal only at eta = 2
        }
        const double gap = std::abs(eta - eta_opt());
        if (gap < best_gap) {
            best_gap = gap;
            best_n = n;
        }
    }
    if (best_n == 0) {
        return std::nullopt;
    }
    const double w = energy / best_n;
    PureState excited = mode_count >= 2 ? make_phi_n(best_n, mode_count, 0.0)
                                        : make_omega_n(best_n, 1);
    PureState state(mode_count);
    if (mode_count >= 2) {
        for (const auto& [ket, amp] : excited.amplitudes()) {
            state.set_amplitude(ket, amp * std::sqrt(w));
        }
        state.set_amplitude(OccupationVector(std::vector<int>(mode_count, 0)),
                            std::sqrt(1.0 - w));
    } else {
        state = excited;  // make_omega_n already carries the vacuum at weight 1/2
    }
    state.normalize();
    return Injection{state, "vacuum+manifold:" + std::to_string(best_n) + " at <N>=" +
                                std::to_string(energy) + " (injected)"};
}

std::optional<Injection> make_injection(const SearchSpec& spec, bool phitot) {
    if (spec.exact_n) {
        PureState state = make_phi_n(*spec.exact_n, spec.mode_count, 0.0);
        StateRecipe recipe{RecipeKind::phi_n, *spec.exact_n, spec.mode_count, 0.0};
        return Injection{std::move(state), recipe.to_string() + " (injected)"};
    }
    if (spec.energy_target) {
        return energy_target_injection(spec.mode_count, spec.photon_cap, *spec.energy_target);
    }
    if (phitot || spec.mode_count == 1) {
        PureState state = make_omega_n(spec.photon_cap, spec.mode_count);
        StateRecipe recipe{RecipeKind::omega_n, spec.photon_cap, spec.mode_count, 0.0};
        return Injection{std::move(state), recipe.to_string() + " (injected)"};
    }
    PureState state = make_upsilon_n(spec.photon_cap, spec.mode_count, 0.0);
    StateRecipe recipe{RecipeKind::upsilon_n, spec.photon_cap, spec.mode_count, 0.0};
    return Injection{std::move(state), recipe.to_string() + " (injected)"};
}

// Remixes a sampled state with the vacuum so its mean photon number equals
// the target. Returns false when the excited part is too weak to reach it.
bool remix_to_energy(PureState& state, double energy) {
    const int modes = state.mode_count();
    const OccupationVector vac(std::vector<int>(modes, 0));
    const double vacuum_w = std::norm(state.amplitude(vac));
    const double excited_w = 1.0 - vacuum_w;
    if (excited_w < 1e-12) {
        return false;
    }
    double excited_mean = 0.0;
    for (const auto& [ket, amp] : state.amplitudes()) {
        excited_mean += std::norm(amp) * ket.total();
    }
    excited_mean /= excited_w;
    if (excited_mean < energy) {
        return false;
    }
    const double w = energy / excited_mean;
    const double scale = std::sqrt(w / excited_w);
    PureState out(modes);
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.total() > 0) {
            out.set_amplitude(ket, amp * scale);
        }
    }
    const Complex vac_amp = state.amplitude(vac);
    const Complex phase = std::abs(vac_amp) > 1e-15 ? vac_amp / std::abs(vac_amp) : Complex{1.0, 0.0};
    out.set_amplitude(vac, std::sqrt(1.0 - w) * phase);
    out.normalize();
    state = std::move(out);
    return true;
}

struct SearchSetup {
    BoundKind kind;
    double analytic;
    bool product_mode;  // compare phi * <N> against a dimensionless constant
    std::vector<int> manifolds;
};

SearchSetup prepare(const SearchSpec& spec, bool phitot) {
    SearchSetup setup{BoundKind::general_phi, 0.0, false, {}};
    if (spec.exact_n) {
        setup.kind = phitot ? BoundKind::nphoton_phitot : BoundKind::nphoton_phi;
        setup.analytic =
            phitot ? nphoton_phitot_bound(*spec.exact_n) : nphoton_phi_bound(*spec.exact_n);
        setup.manifolds = {*spec.exact_n};
        return setup;
    }
    for (int n = 0; n <= spec.photon_cap; ++n) {
        setup.manifolds.push_back(n);
    }
    if (phitot) {
        setup.kind =
            spec.mode_count == 1 ? BoundKind::single_mode_phitot : BoundKind::general_phitot;
        setup.analytic = spec.energy_target ? general_phitot_bound(*spec.energy_target)
                                            : std::numbers::pi / 2.0;
    } else {
        setup.kind = spec.mode_count == 1 ? BoundKind::single_mode_phi : BoundKind::general_phi;
        const double constant = spec.mode_count == 1 ? std::numbers::pi / 2.0 : general_phi_constant();
        setup.analytic = spec.energy_target ? constant / *spec.energy_target : constant;
    }
    setup.product_mode = !spec.energy_target.has_value();
    return setup;
}

CertificateReport run_search(const SearchSpec& spec, bool phitot) {
    validate_spec(spec);
    const SearchSetup setup = prepare(spec, phitot);
    const auto lambda_sets = phitot ? phitot_lambda_sets(spec) : phi_lambda_sets(spec);
    const auto injection = make_injection(spec, phitot);

    double best_value = kInf;
    std::string best_digest;

    for (int idx = 0; idx < spec.sample_count; ++idx) {
        PureState state(spec.mode_count);
        std::string digest;
        if (idx == 0 && injection) {
            state = injection->state;
            digest = injection->digest;
        } else {
            state = sample_state(spec.mode_count, setup.manifolds, sample_seed(spec.seed, idx));
            if (spec.energy_target && !remix_to_energy(state, *spec.energy_target)) {
                continue;
            }
            digest = state_digest(state, idx);
        }

        for (const auto& lambdas : lambda_sets) {
            const CollapsedState collapsed = collapse(state, lambdas);
            if (setup.product_mode && collapsed.mean_energy < 1e-12) {
                continue;
            }
            double lambda_sum = 0.0;
            for (double l : lambdas) {
                lambda_sum += std::abs(l);
            }
            // Scale back from the candidate value to a cutoff on the raw phi scan.
            double phi_cutoff = best_value;
            if (phitot) {
                phi_cutoff /= lambda_sum;
            }
            if (setup.product_mode) {
                phi_cutoff /= collapsed.mean_energy;
            }
            const auto zero = first_zero(collapsed, spec.phi_grid, spec.tolerance, phi_cutoff);
            if (!zero) {
                continue;
            }
            double value = *zero;
            if (phitot) {
                value *= lambda_sum;
            }
            if (setup.product_mode) {
                value *= collapsed.mean_energy;
            }
            if (value < best_value) {
                best_value = value;
                best_digest = digest;
            }
        }
    }

    CertificateReport report{};
    report.bound_kind = setup.kind;
    report.analytic_value = setup.analytic;
    report.samples = spec.sample_count;
    report.seed = spec.seed;
    report.tolerance = spec.tolerance;
    if (std::isinf(best_value)) {
        report.best_found_phi = -1.0;
        report.best_state_digest = "none detected within the phi grid";
        report.violation = false;
    } else {
        report.best_found_phi = best_value;
        report.best_state_digest = best_digest;
        report.violation = best_value < setup.analytic - spec.phi_grid.step() - 1e-12;
    }
    return report;
}

}  // namespace

std::string CertificateReport::to_json() const {
    nlohmann::ordered_json j;
    j["bound_kind"] = phaselim::to_string(bound_kind);
    j["analytic_value"] = analytic_value;
    j["best_found_phi"] = best_found_phi;
    j["best_state_digest"] = best_state_digest;
    j["violation"] = violation;
    j["samples"] = samples;
    j["seed"] = seed;
    j["tolerance"] = tolerance;
    return j.dump(2);
}

CertificateReport min_phi_search(const SearchSpec& spec) { return run_search(spec, false); }

CertificateReport min_phitot_search(const SearchSpec& spec) { return run_search(spec, true); }

std::vector<ScanRecord> overlap_scan(const PureState& state, const std::vector<double>& lambdas,
                                     const PhiGrid& grid) {
    if (static_cast<int>(lambdas.size()) != state.mode_count()) {
        throw std::invalid_argument("lambda count does not match the state");
    }
    for (double l : lambdas) {
        if (!(std::abs(l) <= 1.0 + 1e-12)) {
            throw std::invalid_argument("lambda coefficients must lie in [-1, 1]");
        }
    }
    if (grid.steps < 2 || !(grid.min >= 0.0) || !(grid.max > grid.min)) {
        throw std::invalid_argument("invalid phi grid");
    }
    const CollapsedState collapsed = collapse(state, lambdas);
    std::vector<ScanRecord> records;
    records.reserve(static_cast<std::size_t>(grid.steps));
    const double h = grid.step();
    for (int k = 0; k < grid.steps; ++k) {
        const double phi = grid.min + k * h;
        const Complex overlap = overlap_at(collapsed, phi);
        records.push_back({phi, overlap.real(), overlap.imag(), std::abs(overlap)});
    }
    return records;
}

std::optional<double> first_distinguishable_phi(const PureState& state,
                                                const std::vector<double>& lambdas,
                                                const PhiGrid& grid, double tol) {
    if (static_cast<int>(lambdas.size()) != state.mode_count()) {
        throw std::invalid_argument("lambda count does not match the state");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (grid.steps < 2 || !(grid.min >= 0.0) || !(grid.max > grid.min)) {
        throw std::invalid_argument("invalid phi grid");
    }
    return first_zero(collapse(state, lambdas), grid, tol);
}

PureState sample_state(int mode_count, const std::vector<int>& manifolds, std::uint64_t seed) {
    if (mode_count < 1) {
        throw std::invalid_argument("state needs at least one mode");
    }
    if (manifolds.empty()) {
        throw std::invalid_argument("at least one manifold is required");
    }
    std::vector<OccupationVector> kets;
    for (int n : manifolds) {
        const auto manifold = enumerate_manifold(mode_count, n);
        kets.insert(kets.end(), manifold.begin(), manifold.end());
    }
    std::mt19937_64 rng(seed);
    // Flat simplex over |c|^2: exponential weights normalized; phases uniform.
    std::vector<double> weights(kets.size());
    double total = 0.0;
    for (double& w : weights) {
        w = -std::log(next_unit(rng));
        total += w;
    }
    PureState state(mode_count);
    for (std::size_t i = 0; i < kets.size(); ++i) {
        const double phase = 2.0 * std::numbers::pi * next_unit(rng);
        state.set_amplitude(kets[i], std::polar(std::sqrt(weights[i] / total), phase));
    }
    state.normalize();
    return state;
}

LinearProfileReport linear_profile_demo(int mode_count, int photon_number) {
    if (mode_count < 2) {
        throw std::invalid_argument("the comparison needs at least two modes");
    }
    if (photon_number < 1) {
        throw std::invalid_argument("photon number must be at least 1");
    }
    const PhiGrid grid{};
    const double tol = 1e-6;
    const std::uint64_t seed = 0x11d5eedull;
    const int samples = 256;

    std::vector<double> ramp(static_cast<std::size_t>(mode_count));
    for (int m = 0; m < mode_count; ++m) {
        ramp[static_cast<std::size_t>(m)] = static_cast<double>(m + 1);
    }
    double ramp_best = kInf;
    for (int idx = 0; idx < samples; ++idx) {
        const PureState state = idx == 0
                                    ? make_phi_n(photon_number, mode_count, 0.0)
                                    : sample_state(mode_count, {photon_number},
                                                   sample_seed(seed, idx));
        const auto zero = first_zero(collapse(state, ramp), grid, tol, ramp_best);
        if (zero && *zero < ramp_best) {
            ramp_best = *zero;
        }
    }

    // Two modes driven at the ramp's largest relative shift (M-1) phi.
    const std::vector<double> two_mode{static_cast<double>(mode_count - 1), 0.0};
    double two_mode_best = kInf;
    for (int idx = 0; idx < samples; ++idx) {
        const PureState state = idx == 0 ? make_phi_n(photon_number, 2, 0.0)
                                         : sample_state(2, {photon_number},
                                                        sample_seed(seed ^ 0xbeefull, idx));
        const auto zero = first_zero(collapse(state, two_mode), grid, tol, two_mode_best);
        if (zero && *zero < two_mode_best) {
            two_mode_best = *zero;
        }
    }

    LinearProfileReport report{};
    report.mode_count = mode_count;
    report.photon_number = photon_number;
    report.ramp_min_phi = ramp_best;
    report.two_mode_min_phi = two_mode_best;
    report.ratio = ramp_best / two_mode_best;
    report.grid_step = grid.step();
    return report;
}

}  // namespace phaselim
