// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#include "phaselim/phase_shift.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phaselim {

namespace {

constexpr double kLambdaSlack = 1e-12;
constexpr double kManifoldWeightTol = 1e-12;

double exponent_sum(const std::vector<double>& coeffs, const OccupationVector& ket) {
    double s = 0.0;
    for (int m = 0; m < ket.mode_count(); ++m) {
        s += coeffs[static_cast<std::size_t>(m)] * ket[m];
    }
    return s;
}

void require_same_modes(const PureState& state, int profile_modes) {
    if (state.mode_count() != profile_modes) {
        throw std::invalid_argument("profile mode count does not match the state");
    }
}

Complex overlap_sum(const PureState& state, const std::vector<double>& coeffs, double phi) {
    Complex sum{0.0, 0.0};
    for (const auto& [ket, amp] : state.amplitudes()) {
        sum += std::norm(amp) * std::polar(1.0, phi * exponent_sum(coeffs, ket));
    }
    return sum;
}

Complex manifold_sum(const PureState& state, const std::vector<double>& coeffs, double phi,
                     int photon_number, double& weight) {
    Complex sum{0.0, 0.0};
    weight = 0.0;
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.total() != photon_number) {
            continue;
        }
        const double w = std::norm(amp);
        weight += w;
        sum += w * std::polar(1.0, phi * exponent_sum(coeffs, ket));
    }
    return sum;
}

}  // namespace

PhaseProfile::PhaseProfile(std::vector<double> lambdas, double phi) {
    if (lambdas.empty()) {
        throw std::invalid_argument("profile needs at least one mode");
    }
    if (!(phi >= 0.0)) {
        throw std::invalid_argument("phi must be nonnegative");
    }
    for (double& l : lambdas) {
        if (!(std::abs(l) <= 1.0 + kLambdaSlack)) {
            throw std::invalid_argument("lambda coefficients must lie in [-1, 1]");
        }
        l = std::clamp(l, -1.0, 1.0);
    }
    mode_order_.resize(lambdas.size());
    std::iota(mode_order_.begin(), mode_order_.end(), 0);
    std::stable_sort(mode_order_.begin(), mode_order_.end(), [&](int a, int b) {
        return lambdas[static_cast<std::size_t>(a)] > lambdas[static_cast<std::size_t>(b)];
    });
    lambdas_.reserve(lambdas.size());
    for (int idx : mode_order_) {
        lambdas_.push_back(lambdas[static_cast<std::size_t>(idx)]);
    }
    phi_ = phi;
}

PhaseProfile PhaseProfile::from_phase_shifts(const std::vector<double>& shifts) {
    if (shifts.empty()) {
        throw std::invalid_argument("profile needs at least one mode");
    }
    double peak = 0.0;
    for (double s : shifts) {
        peak = std::max(peak, std::abs(s));
    }
    if (peak == 0.0) {
        return PhaseProfile(std::vector<double>(shifts.size(), 0.0), 0.0);
    }
    std::vector<double> lambdas(shifts.size());
    for (std::size_t m = 0; m < shifts.size(); ++m) {
        lambdas[m] = shifts[m] / peak;
    }
    return PhaseProfile(std::move(lambdas), peak);
}

double PhaseProfile::phase_shift(int mode) const {
    if (mode < 0 || mode >= mode_count()) {
        throw std::out_of_range("mode index out of range");
    }
    return lambdas_[static_cast<std::size_t>(mode)] * phi_;
}

double PhaseProfile::total_phase() const {
    double sum = 0.0;
    for (double l : lambdas_) {
        sum += std::abs(l);
    }
    return sum * phi_;
}

ReducedProfile::ReducedProfile(std::vector<double> mus, double phi)
    : mus_(std::move(mus)), phi_(phi) {
    if (mus_.empty()) {
        throw std::invalid_argument("profile needs at least one mode");
    }
    if (!(phi >= 0.0)) {
        throw std::invalid_argument("phi must be nonnegative");
    }
    for (std::size_t m = 0; m < mus_.size(); ++m) {
        if (mus_[m] < -kLambdaSlack || mus_[m] > 2.0 + kLambdaSlack) {
            throw std::invalid_argument("mu coefficients must lie in [0, 2]");
        }
        if (m + 1 < mus_.size() && mus_[m] < mus_[m + 1] - kLambdaSlack) {
            throw std::invalid_argument("mu coefficients must be non-increasing");
        }
    }
    if (std::abs(mus_.back()) > kLambdaSlack) {
        throw std::invalid_argument("the last mu coefficient must be zero");
    }
    mus_.back() = 0.0;
}

ReducedProfile reduce_profile(const PhaseProfile& profile) {
    const auto& lambdas = profile.lambdas();
    std::vector<double> mus(lambdas.size());
    const double floor = lambdas.back();
    for (std::size_t m = 0; m < lambdas.size(); ++m) {
        mus[m] = lambdas[m] - floor;
    }
    return ReducedProfile(std::move(mus), profile.phi());
}

PureState apply_phase_shift(const PureState& state, const PhaseProfile& profile) {
    require_same_modes(state, profile.mode_count());
    PureState out(state.mode_count());
    for (const auto& [ket, amp] : state.amplitudes()) {
        out.set_amplitude(ket,
                          amp * std::polar(1.0, profile.phi() * exponent_sum(profile.lambdas(), ket)));
    }
    return out;
}

Complex overlap_after_shift(const PureState& state, const PhaseProfile& profile) {
    require_same_modes(state, profile.mode_count());
    return overlap_sum(state, profile.lambdas(), profile.phi());
}

Complex overlap_after_shift(const PureState& state, const ReducedProfile& profile) {
    require_same_modes(state, profile.mode_count());
    return overlap_sum(state, profile.mus(), profile.phi());
}

Complex sigma_of_manifold(const PureState& state, const PhaseProfile& profile,
                          int photon_number) {
    require_same_modes(state, profile.mode_count());
    double weight = 0.0;
    const Complex sum = manifold_sum(state, profile.lambdas(), profile.phi(), photon_number, weight);
    if (weight < kManifoldWeightTol) {
        throw std::domain_error("sigma is undefined for a manifold with no weight");
    }
    return sum / weight;
}

Complex sigma_of_manifold(const PureState& state, const ReducedProfile& profile,
                          int photon_number) {
    require_same_modes(state, profile.mode_count());
    double weight = 0.0;
    const Complex sum = manifold_sum(state, profile.mus(), profile.phi(), photon_number, weight);
    if (weight < kManifoldWeightTol) {
        throw std::domain_error("sigma is undefined for a manifold with no weight");
    }
    return sum / weight;
}

Complex manifold_overlap_term(const PureState& state, const PhaseProfile& profile,
                              int photon_number) {
    require_same_modes(state, profile.mode_count());
    double weight = 0.0;
    return manifold_sum(state, profile.lambdas(), profile.phi(), photon_number, weight);
}

bool is_distinguishable(const PureState& state, const PhaseProfile& profile, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    return std::abs(overlap_after_shift(state, profile)) <= tol;
}

bool is_manifoldwise_distinguishable(const PureState& state, const PhaseProfile& profile,
                                     double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("tolerance must be positive");
    }
    for (int n : occupied_manifolds(state)) {
        if (std::abs(manifold_overlap_term(state, profile, n)) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace phaselim
