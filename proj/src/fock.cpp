// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#include "phaselim/fock.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace phaselim {

OccupationVector::OccupationVector(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) {
        throw std::invalid_argument("occupation vector needs at least one mode");
    }
    for (int n : counts_) {
        if (n < 0) {
            throw std::invalid_argument("photon counts must be nonnegative");
        }
    }
}

OccupationVector::OccupationVector(std::initializer_list<int> counts)
    : OccupationVector(std::vector<int>(counts)) {}

int OccupationVector::total() const {
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

PureState::PureState(int mode_count) : mode_count_(mode_count) {
    if (mode_count < 1) {
        throw std::invalid_argument("state needs at least one mode");
    }
}

Complex PureState::amplitude(const OccupationVector& ket) const {
    auto it = amplitudes_.find(ket);
    return it == amplitudes_.end() ? Complex{0.0, 0.0} : it->second;
}

void PureState::set_amplitude(const OccupationVector& ket, Complex value) {
    if (ket.mode_count() != mode_count_) {
        throw std::invalid_argument("ket mode count does not match the state");
    }
    if (value == Complex{0.0, 0.0}) {
        amplitudes_.erase(ket);
    } else {
        amplitudes_[ket] = value;
    }
}

double PureState::squared_norm() const {
    double sum = 0.0;
    for (const auto& [ket, amp] : amplitudes_) {
        sum += std::norm(amp);
    }
    return sum;
}

double PureState::norm() const { return std::sqrt(squared_norm()); }

bool PureState::is_normalized(double tol) const {
    return std::abs(norm() - 1.0) <= tol;
}

void PureState::normalize() {
    const double n = norm();
    if (n < 1e-12) {
        throw std::invalid_argument("cannot normalize a zero state");
    }
    for (auto it = amplitudes_.begin(); it != amplitudes_.end();) {
        it->second /= n;
        if (std::abs(it->second) < kAmplitudePrune) {
            it = amplitudes_.erase(it);
        } else {
            ++it;
        }
    }
}

std::vector<OccupationVector> enumerate_manifold(int mode_count, int photon_number) {
    if (mode_count < 1) {
        throw std::invalid_argument("mode count must be at least 1");
    }
    if (photon_number < 0) {
        throw std::invalid_argument("photon number must be nonnegative");
    }
    std::vector<OccupationVector> result;
    std::vector<int> v(static_cast<std::size_t>(mode_count), 0);
    v.front() = photon_number;
    const int last = mode_count - 1;
    while (true) {
        result.emplace_back(v);
        if (v[static_cast<std::size_t>(last)] == photon_number) {
            break;
        }
        // Descending lexicographic successor: move one photon from the
        // rightmost nonempty non-last slot and sweep the tail back.
        int k = last - 1;
        while (v[static_cast<std::size_t>(k)] == 0) {
            --k;
        }
        const int tail = v[static_cast<std::size_t>(last)];
        v[static_cast<std::size_t>(last)] = 0;
        v[static_cast<std::size_t>(k)] -= 1;
        v[static_cast<std::size_t>(k) + 1] = tail + 1;
    }
    return result;
}

double mean_photon_number(const PureState& state) {
    if (!state.is_normalized(1e-9)) {
        throw std::invalid_argument("mean photon number requires a normalized state");
    }
    double sum = 0.0;
    for (const auto& [ket, amp] : state.amplitudes()) {
        sum += std::norm(amp) * ket.total();
    }
    return sum;
}

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.mode_count() != b.mode_count()) {
        throw std::invalid_argument("inner product needs matching mode counts");
    }
    Complex sum{0.0, 0.0};
    for (const auto& [ket, amp] : a.amplitudes()) {
        sum += std::conj(amp) * b.amplitude(ket);
    }
    return sum;
}

PureState manifold_projection(const PureState& state, int photon_number) {
    if (photon_number < 0) {
        throw std::invalid_argument("photon number must be nonnegative");
    }
    PureState out(state.mode_count());
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.total() == photon_number) {
            out.set_amplitude(ket, amp);
        }
    }
    return out;
}

double manifold_weight(const PureState& state, int photon_number) {
    double sum = 0.0;
    for (const auto& [ket, amp] : state.amplitudes()) {
        if (ket.total() == photon_number) {
            sum += std::norm(amp);
        }
    }
    return sum;
}

std::vector<int> occupied_manifolds(const PureState& state, double weight_tol) {
    std::map<int, double> weights;
    for (const auto& [ket, amp] : state.amplitudes()) {
        weights[ket.total()] += std::norm(amp);
    }
    std::vector<int> result;
    for (const auto& [n, w] : weights) {
        if (w > weight_tol) {
            result.push_back(n);
        }
    }
    return result;
}

int highest_occupied_manifold(const PureState& state, double weight_tol) {
    const auto occupied = occupied_manifolds(state, weight_tol);
    if (occupied.empty()) {
        throw std::invalid_argument("state has no occupied manifold");
    }
    return occupied.back();
}

}  // namespace phaselim
