// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#include "phaselim/states.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <vector>

#include "phaselim/bounds.hpp"

namespace phaselim {

namespace {

constexpr double kOrthogonalityTol = 1e-10;
constexpr double kSigmaImagTol = 1e-9;
constexpr double kWeightTol = 1e-12;

OccupationVector vacuum_ket(int mode_count) {
    return OccupationVector(std::vector<int>(static_cast<std::size_t>(mode_count), 0));
}

OccupationVector single_mode_ket(int mode_count, int mode, int photons) {
    std::vector<int> counts(static_cast<std::size_t>(mode_count), 0);
    counts[static_cast<std::size_t>(mode)] = photons;
    return OccupationVector(std::move(counts));
}

int parse_int_token(const std::string& token, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw std::invalid_argument(std::string("invalid ") + what + " token '" + token + "'");
    }
    return value;
}

double parse_double_token(const std::string& token, const char* what) {
    if (token.empty()) {
        throw std::invalid_argument(std::string("invalid ") + what + " token ''");
    }
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || !std::isfinite(value)) {
        throw std::invalid_argument(std::string("invalid ") + what + " token '" + token + "'");
    }
    return value;
}

}  // namespace

StateRecipe StateRecipe::parse(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
        const std::size_t colon = text.find(':', start);
        if (colon == std::string::npos) {
            tokens.push_back(text.substr(start));
            break;
        }
        tokens.push_back(text.substr(start, colon - start));
        start = colon + 1;
    }

    StateRecipe recipe;
    const std::string& kind = tokens.front();
    if (kind == "xi") {
        if (tokens.size() != 1) {
            throw std::invalid_argument("xi takes no parameters; bad token '" + tokens[1] + "'");
        }
        recipe.kind = RecipeKind::xi;
        recipe.mode_count = 2;
        return recipe;
    }
    if (kind == "phi_N") {
        recipe.kind = RecipeKind::phi_n;
    } else if (kind == "upsilon_N") {
        recipe.kind = RecipeKind::upsilon_n;
    } else if (kind == "omega_N") {
        recipe.kind = RecipeKind::omega_n;
    } else {
        throw std::invalid_argument("unknown state kind '" + kind + "'");
    }
    if (tokens.size() != 4) {
        throw std::invalid_argument("recipe must be kind:N:M:theta, got '" + text + "'");
    }
    recipe.photon_number = parse_int_token(tokens[1], "photon number");
    recipe.mode_count = parse_int_token(tokens[2], "mode count");
    recipe.theta = parse_double_token(tokens[3], "theta");
    return recipe;
}

std::string StateRecipe::to_string() const {
    const char* name = nullptr;
    switch (kind) {
        case RecipeKind::phi_n: name = "phi_N"; break;
        case RecipeKind::upsilon_n: name = "upsilon_N"; break;
        case RecipeKind::omega_n: name = "omega_N"; break;
        case RecipeKind::xi: return "xi";
        case RecipeKind::custom:
            throw std::invalid_argument("custom recipes have no textual form");
    }
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", theta);
    return std::string(name) + ":" + std::to_string(photon_number) + ":" +
           std::to_string(mode_count) + ":" + buffer;
}

PureState StateRecipe::build() const {
    switch (kind) {
        case RecipeKind::phi_n: return make_phi_n(photon_number, mode_count, theta);
        case RecipeKind::upsilon_n: return make_upsilon_n(photon_number, mode_count, theta);
        case RecipeKind::omega_n: return make_omega_n(photon_number, mode_count);
        case RecipeKind::xi: return make_xi();
        case RecipeKind::custom: break;
    }
    throw std::invalid_argument("custom recipes have no canonical constructor");
}

PureState make_phi_n(int photon_number, int mode_count, double theta) {
    if (photon_number < 1) {
        throw std::invalid_argument("photon number must be at least 1");
    }
    if (mode_count < 2) {
        throw std::invalid_argument("the NOON construction needs at least two modes");
    }
    const double amp = 1.0 / std::sqrt(2.0);
    PureState state(mode_count);
    state.set_amplitude(single_mode_ket(mode_count, 0, photon_number), amp);
    state.set_amplitude(single_mode_ket(mode_count, mode_count - 1, photon_number),
                        std::polar(amp, theta));
    state.normalize();
    return state;
}

PureState make_upsilon_n(int photon_number, int mode_count, double theta) {
    if (photon_number < 1) {
        throw std::invalid_argument("photon number must be at least 1");
    }
    if (mode_count < 2) {
        throw std::invalid_argument("the vacuum-plus-NOON construction needs at least two modes");
    }
    const double eta = eta_opt();
    const double vac = std::sqrt((eta - 1.0) / eta);
    const double ket = 1.0 / std::sqrt(2.0 * eta);
    PureState state(mode_count);
    state.set_amplitude(vacuum_ket(mode_count), vac);
    state.set_amplitude(single_mode_ket(mode_count, 0, photon_number), ket);
    state.set_amplitude(single_mode_ket(mode_count, mode_count - 1, photon_number),
                        std::polar(ket, theta));
    state.normalize();
    return state;
}

PureState make_omega_n(int photon_number, int mode_count) {
    if (photon_number < 1) {
        throw std::invalid_argument("photon number must be at least 1");
    }
    if (mode_count < 1) {
        throw std::invalid_argument("state needs at least one mode");
    }
    const double amp = 1.0 / std::sqrt(2.0);
    PureState state(mode_count);
    state.set_amplitude(vacuum_ket(mode_count), amp);
    state.set_amplitude(single_mode_ket(mode_count, 0, photon_number), amp);
    state.normalize();
    return state;
}

PureState make_xi() {
    const double amp = 1.0 / std::sqrt(2.0);
    PureState state(2);
    state.set_amplitude(OccupationVector{0, 0}, amp);
    state.set_amplitude(OccupationVector{0, 1}, amp);
    state.normalize();
    return state;
}

PureState reduce_to_vacuum_plus_manifold(const PureState& state, const PhaseProfile& profile) {
    if (state.mode_count() != profile.mode_count()) {
        throw std::invalid_argument("profile mode count does not match the state");
    }
    const Complex overlap = overlap_after_shift(state, profile);
    if (std::abs(overlap) > kOrthogonalityTol) {
        throw std::invalid_argument(
            "state does not satisfy the orthogonality condition under this profile");
    }

    const auto occupied = occupied_manifolds(state, kWeightTol);
    std::vector<double> sigmas(occupied.size());
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        const Complex sigma = sigma_of_manifold(state, profile, occupied[i]);
        if (std::abs(sigma.imag()) > kSigmaImagTol) {
            throw std::domain_error(
                "non-optimal input: an occupied manifold has a non-real phase factor");
        }
        sigmas[i] = sigma.real();
    }

    // Pick the excited manifold with the largest (1 - sigma_k)/k; ties (to
    // rounding noise) go to the smallest photon number.
    int target = -1;
    double target_sigma = 1.0;
    double best_ratio = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        if (occupied[i] == 0) {
            continue;
        }
        const double ratio = (1.0 - sigmas[i]) / occupied[i];
        if (ratio > best_ratio + 1e-12) {
            best_ratio = ratio;
            target = occupied[i];
            target_sigma = sigmas[i];
        }
    }
    if (target < 0 || 1.0 - target_sigma < 1e-12) {
        throw std::domain_error("degenerate reduction: the selected manifold has sigma = 1");
    }

    double delta = 0.0;
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        if (occupied[i] == 0 || occupied[i] == target) {
            continue;
        }
        delta += manifold_weight(state, occupied[i]) * (1.0 - sigmas[i]) / (1.0 - target_sigma);
    }

    const double target_weight = manifold_weight(state, target) + delta;
    if (target_weight > 1.0 + 1e-10) {
        throw std::domain_error(
            "non-optimal input: the reduction would need a negative vacuum weight");
    }
    const double vacuum_weight = std::max(0.0, 1.0 - target_weight);

    PureState projected = manifold_projection(state, target);
    const double projected_norm = projected.norm();
    const double scale = std::sqrt(std::min(target_weight, 1.0)) / projected_norm;

    PureState out(state.mode_count());
    for (const auto& [ket, amp] : projected.amplitudes()) {
        out.set_amplitude(ket, amp * scale);
    }
    if (vacuum_weight > 0.0) {
        const Complex in_vac = state.amplitude(vacuum_ket(state.mode_count()));
        const Complex phase =
            std::abs(in_vac) > 1e-15 ? in_vac / std::abs(in_vac) : Complex{1.0, 0.0};
        out.set_amplitude(vacuum_ket(state.mode_count()), std::sqrt(vacuum_weight) * phase);
    }
    out.normalize();
    return out;
}

StationarityReport check_stationarity(const PureState& state, const PhaseProfile& profile) {
    if (state.mode_count() != profile.mode_count()) {
        throw std::invalid_argument("profile mode count does not match the state");
    }
    StationarityReport report;
    const auto occupied = occupied_manifolds(state, kWeightTol);
    report.occupied_count = static_cast<int>(occupied.size());

    std::vector<double> sigmas(occupied.size());
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        const Complex sigma = sigma_of_manifold(state, profile, occupied[i]);
        report.max_sigma_imag = std::max(report.max_sigma_imag, std::abs(sigma.imag()));
        sigmas[i] = sigma.real();
    }

    if (occupied.size() <= 1) {
        report.trivial = true;
        report.stationary = report.max_sigma_imag < kSigmaImagTol;
        if (occupied.size() == 1) {
            // One equation, underdetermined: alpha = k + beta sigma with beta = 0.
            report.alpha = occupied.front();
        }
        return report;
    }

    // Least squares for alpha - beta sigma_k = k over the occupied manifolds.
    const double n = static_cast<double>(occupied.size());
    double s_sigma = 0.0, s_sigma2 = 0.0, s_k = 0.0, s_ksigma = 0.0;
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        s_sigma += sigmas[i];
        s_sigma2 += sigmas[i] * sigmas[i];
        s_k += occupied[i];
        s_ksigma += occupied[i] * sigmas[i];
    }
    const double det = n * s_sigma2 - s_sigma * s_sigma;
    if (det > 1e-14 * n * std::max(1.0, s_sigma2)) {
        report.beta = (s_sigma * s_k - n * s_ksigma) / det;
        report.alpha = (s_k + report.beta * s_sigma) / n;
    } else {
        // All sigmas equal: beta is unidentifiable, fall back to beta = 0.
        report.beta = 0.0;
        report.alpha = s_k / n;
    }

    double rss = 0.0;
    for (std::size_t i = 0; i < occupied.size(); ++i) {
        const double r = occupied[i] - report.alpha + report.beta * sigmas[i];
        rss += r * r;
    }
    report.fit_residual = std::sqrt(rss / n);
    report.stationary =
        report.max_sigma_imag < kSigmaImagTol && report.fit_residual < kSigmaImagTol;
    return report;
}

}  // namespace phaselim
