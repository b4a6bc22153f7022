// Copyright 2026 The Phaselim Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "phaselim/bounds.hpp"
#include "phaselim/certify.hpp"
#include "phaselim/phase_shift.hpp"
#include "phaselim/states.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::string fmt12(double x) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", x);
    return buffer;
}

std::vector<double> parse_lambda_list(const std::string& csv) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const std::size_t comma = csv.find(',', start);
        const std::string token =
            csv.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (token.empty()) {
            throw std::invalid_argument("invalid lambda token ''");
        }
        char* end = nullptr;
        const double value = std::strtod(token.c_str(), &end);
        if (end != token.c_str() + token.size() || !std::isfinite(value)) {
            throw std::invalid_argument("invalid lambda token '" + token + "'");
        }
        values.push_back(value);
        if (comma == std::string::npos) {
            break;
        }
        start = comma + 1;
    }
    return values;
}

int run_bounds(double energy, const std::string& format) {
    const auto rows = phaselim::limits_table(energy);
    if (format == "table") {
        std::printf("lower limits on distinguishable phase shifts at mean photon number %s\n",
                    fmt12(energy).c_str());
        std::printf("%-12s %-8s %-15s %s\n", "state_class", "entity", "one_mode",
                    "two_or_more_modes");
        for (const auto& row : rows) {
            const std::string one =
                row.one_mode ? fmt12(row.one_mode->value) : std::string("NA");
            std::printf("%-12s %-8s %-15s %s\n", row.state_class.c_str(), row.entity.c_str(),
                        one.c_str(), fmt12(row.multimode.value).c_str());
        }
    } else if (format == "csv") {
        std::printf("state_class,entity,one_mode,two_or_more_modes\n");
        for (const auto& row : rows) {
            const std::string one =
                row.one_mode ? fmt12(row.one_mode->value) : std::string("NA");
            std::printf("%s,%s,%s,%s\n", row.state_class.c_str(), row.entity.c_str(), one.c_str(),
                        fmt12(row.multimode.value).c_str());
        }
    } else {
        nlohmann::ordered_json doc;
        doc["energy"] = energy;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json entry;
            entry["state_class"] = row.state_class;
            entry["entity"] = row.entity;
            if (row.one_mode) {
                entry["one_mode"] = row.one_mode->value;
            } else {
                entry["one_mode"] = "NA";
            }
            entry["two_or_more_modes"] = row.multimode.value;
            entry["recipe"] = row.multimode.recipe;
            entry["attainable"] = row.multimode.attainable;
            doc["rows"].push_back(std::move(entry));
        }
        std::printf("%s\n", doc.dump(2).c_str());
    }
    return kExitOk;
}

int run_scan(const std::string& recipe_text, const std::string& lambda_csv,
             const phaselim::PhiGrid& grid) {
    const auto recipe = phaselim::StateRecipe::parse(recipe_text);
    const phaselim::PureState state = recipe.build();
    const auto lambdas = parse_lambda_list(lambda_csv);
    if (static_cast<int>(lambdas.size()) != state.mode_count()) {
        throw std::invalid_argument("lambda count does not match the recipe's mode count");
    }
    const auto records = phaselim::overlap_scan(state, lambdas, grid);
    std::printf("phi,overlap_re,overlap_im,overlap_abs\n");
    for (const auto& rec : records) {
        std::printf("%s,%s,%s,%s\n", fmt12(rec.phi).c_str(), fmt12(rec.overlap_re).c_str(),
                    fmt12(rec.overlap_im).c_str(), fmt12(rec.overlap_abs).c_str());
    }
    return kExitOk;
}

int run_certify(const phaselim::SearchSpec& spec, const std::string& objective) {
    const phaselim::CertificateReport report = objective == "phitot"
                                                   ? phaselim::min_phitot_search(spec)
                                                   : phaselim::min_phi_search(spec);
    std::printf("%s\n", report.to_json().c_str());
    return report.violation ? kExitViolation : kExitOk;
}

int run_wdrp(const std::string& recipe_text, const std::string& lambda_csv, double phi,
             double tol) {
    const auto recipe = phaselim::StateRecipe::parse(recipe_text);
    const phaselim::PureState state = recipe.build();
    const auto lambdas = parse_lambda_list(lambda_csv);
    const phaselim::PhaseProfile profile(lambdas, phi);
    if (profile.mode_count() != state.mode_count()) {
        throw std::invalid_argument("lambda count does not match the recipe's mode count");
    }

    std::printf("state: %s\n", recipe_text.c_str());
    std::printf("lambdas: %s\n", lambda_csv.c_str());
    std::printf("phi: %s\n", fmt12(phi).c_str());
    for (int n : phaselim::occupied_manifolds(state)) {
        const double term = std::abs(phaselim::manifold_overlap_term(state, profile, n));
        std::printf("manifold %d |term| = %s\n", n, fmt12(term).c_str());
    }
    const bool global_ok = phaselim::is_distinguishable(state, profile, tol);
    const bool manifold_ok = phaselim::is_manifoldwise_distinguishable(state, profile, tol);
    std::printf("global_orthogonality: %s\n", global_ok ? "PASS" : "FAIL");
    std::printf("manifoldwise_orthogonality: %s\n", manifold_ok ? "PASS" : "FAIL");
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quantum limits on perfectly distinguishable phase shifts in multimode interferometers"};
    app.require_subcommand(1);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate the lower-limit table at one energy");
    double energy = 1.0;
    std::string format = "table";
    bounds_cmd->add_option("--energy", energy, "mean photon number")->required();
    bounds_cmd->add_option("--format", format, "table, json, or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));

    // scan
    auto* scan_cmd = app.add_subcommand("scan", "emit (phi, overlap) records as CSV");
    std::string scan_recipe;
    std::string scan_lambda;
    phaselim::PhiGrid scan_grid;
    scan_cmd->add_option("recipe", scan_recipe, "state recipe kind:N:M:theta (or xi)")->required();
    scan_cmd->add_option("--lambda", scan_lambda, "comma-separated per-mode coefficients")
        ->required();
    scan_cmd->add_option("--grid-min", scan_grid.min, "first phi (radians)");
    scan_cmd->add_option("--grid-max", scan_grid.max, "last phi (radians)");
    scan_cmd->add_option("--grid-steps", scan_grid.steps, "number of grid points");

    // certify
    auto* certify_cmd =
        app.add_subcommand("certify", "brute-force check that a bound cannot be beaten");
    phaselim::SearchSpec spec;
    int exact_n = 0;
    double energy_target = 0.0;
    std::string scheme = "extremal";
    std::string objective = "phi";
    certify_cmd->add_option("--modes", spec.mode_count, "number of interferometer modes");
    auto* exact_opt = certify_cmd->add_option("--exact-n", exact_n, "restrict to one manifold");
    auto* target_opt =
        certify_cmd->add_option("--energy", energy_target, "fix the mean photon number");
    certify_cmd->add_option("--photon-cap", spec.photon_cap, "highest manifold sampled");
    certify_cmd->add_option("--samples", spec.sample_count, "number of sampled states");
    certify_cmd->add_option("--seed", spec.seed, "search seed");
    certify_cmd->add_option("--grid-steps", spec.phi_grid.steps, "phi grid points");
    certify_cmd->add_option("--grid-min", spec.phi_grid.min, "first phi (radians)");
    certify_cmd->add_option("--grid-max", spec.phi_grid.max, "last phi (radians)");
    certify_cmd->add_option("--tol", spec.tolerance, "|overlap| threshold for detection");
    certify_cmd->add_option("--lambda-scheme", scheme, "extremal, linear, or free-grid")
        ->check(CLI::IsMember({"extremal", "linear", "free-grid"}));
    certify_cmd->add_option("--objective", objective, "phi or phitot")
        ->check(CLI::IsMember({"phi", "phitot"}));

    // wdrp
    auto* wdrp_cmd =
        app.add_subcommand("wdrp", "well-defined relative phase: per-manifold orthogonality");
    std::string wdrp_recipe;
    std::string wdrp_lambda;
    double wdrp_phi = 0.0;
    double wdrp_tol = 1e-10;
    wdrp_cmd->add_option("recipe", wdrp_recipe, "state recipe kind:N:M:theta (or xi)")->required();
    wdrp_cmd->add_option("--lambda", wdrp_lambda, "comma-separated per-mode coefficients")
        ->required();
    wdrp_cmd->add_option("--phi", wdrp_phi, "phase shift magnitude (radians)")->required();
    wdrp_cmd->add_option("--tol", wdrp_tol, "orthogonality tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (bounds_cmd->parsed()) {
            return run_bounds(energy, format);
        }
        if (scan_cmd->parsed()) {
            return run_scan(scan_recipe, scan_lambda, scan_grid);
        }
        if (certify_cmd->parsed()) {
            if (exact_opt->count() > 0) {
                spec.exact_n = exact_n;
            }
            if (target_opt->count() > 0) {
                spec.energy_target = energy_target;
            }
            spec.lambda_scheme = scheme == "linear"      ? phaselim::LambdaScheme::linear
                                 : scheme == "free-grid" ? phaselim::LambdaScheme::free_grid
                                                         : phaselim::LambdaScheme::extremal;
            return run_certify(spec, objective);
        }
        if (wdrp_cmd->parsed()) {
            return run_wdrp(wdrp_recipe, wdrp_lambda, wdrp_phi, wdrp_tol);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
