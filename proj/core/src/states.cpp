#include "accelent/states.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "accelent/errors.hpp"

namespace accelent {
namespace {

SubModeLabel particle(Mode m) { return {m, Species::Particle}; }
SubModeLabel antiparticle(Mode m) { return {m, Species::Antiparticle}; }

void check_scalar_args(double r, std::size_t cutoff, const char* who) {
    if (!std::isfinite(r) || r < 0.0) {
        throw DomainError(std::string(who) + ": squeeze r must be finite and >= 0");
    }
    if (cutoff < 1) {
        throw DomainError(std::string(who) + ": cutoff must be >= 1");
    }
}

void check_fermion_squeeze(double r_f) {
    if (!std::isfinite(r_f) || r_f < 0.0 || r_f > std::numbers::pi / 2.0) {
        throw DomainError("fermionic squeeze r_f must lie in [0, pi/2], got " + std::to_string(r_f));
    }
}

TruncatedKet truncated(Ket raw) {
    auto [ket, deficit] = normalize(raw);
    return {std::move(ket), std::max(0.0, deficit)};
}

// In-vacuum and in-one-particle kets of one accelerated mode, before any
// renormalisation: the raw truncated sums.
struct ModeKets {
    Ket vacuum;
    Ket one;
};

ModeKets scalar_raw(double r, std::size_t cutoff, Mode mode) {
    const SubsystemLayout layout = scalar_mode_layout(mode, cutoff);
    const double t = std::tanh(r);
    const double c = std::cosh(r);
    std::vector<Ket::Entry> vac, one;
    double tn = 1.0;
    for (std::size_t n = 0; n <= cutoff; ++n) {
        const std::array<std::size_t, 2> nn{n, n};
        const std::array<std::size_t, 2> n1n{n + 1, n};
        vac.push_back({layout.index(nn), tn / c});
        one.push_back({layout.index(n1n), std::sqrt(static_cast<double>(n + 1)) * tn / (c * c)});
        tn *= t;
    }
    return {Ket(layout, std::move(vac)), Ket(layout, std::move(one))};
}

ModeKets unaccelerated(Statistics statistics, Mode mode) {
    const SubModeLabel label = particle(mode);
    const SubsystemLayout layout({statistics == Statistics::Fermion
                                      ? SubModeSpec::fermion(label)
                                      : SubModeSpec::boson(label, 1)});
    const std::array<std::size_t, 1> zero{0}, one{1};
    return {Ket::basis(layout, zero), Ket::basis(layout, one)};
}

ModeKets accelerated(const Scenario& sc, Mode mode) {
    if (sc.statistics == Statistics::Fermion) {
        return {fermion_out_vacuum(sc.squeeze, sc.phase, mode), fermion_out_one(mode)};
    }
    return scalar_raw(sc.squeeze, sc.cutoff, mode);
}

}  // namespace

void Scenario::validate() const {
    if (statistics == Statistics::Fermion) {
        check_fermion_squeeze(squeeze);
    } else {
        check_scalar_args(squeeze, cutoff, "scenario");
        if (cutoff < kMinScalarCutoff) {
            throw DomainError("scalar scenario cutoff must be >= " +
                              std::to_string(kMinScalarCutoff));
        }
    }
    if (!std::isfinite(phase)) {
        throw DomainError("scenario phase must be finite");
    }
}

SubsystemLayout scalar_mode_layout(Mode mode, std::size_t cutoff) {
    return SubsystemLayout({SubModeSpec::boson(particle(mode), cutoff + 1),
                            SubModeSpec::boson(antiparticle(mode), cutoff)});
}

SubsystemLayout fermion_mode_layout(Mode mode) {
    return SubsystemLayout(
        {SubModeSpec::fermion(particle(mode)), SubModeSpec::fermion(antiparticle(mode))});
}

TruncatedKet scalar_out_vacuum(double r, std::size_t cutoff, Mode mode) {
    check_scalar_args(r, cutoff, "scalar_out_vacuum");
    return truncated(scalar_raw(r, cutoff, mode).vacuum);
}

TruncatedKet scalar_out_one(double r, std::size_t cutoff, Mode mode) {
    check_scalar_args(r, cutoff, "scalar_out_one");
    return truncated(scalar_raw(r, cutoff, mode).one);
}

Ket fermion_out_vacuum(double r_f, double phase, Mode mode) {
    check_fermion_squeeze(r_f);
    if (!std::isfinite(phase)) {
        throw DomainError("fermion_out_vacuum: phase must be finite");
    }
    const SubsystemLayout layout = fermion_mode_layout(mode);
    const std::array<std::size_t, 2> empty{0, 0}, pair{1, 1};
    return Ket(layout, {{layout.index(empty), std::cos(r_f) * std::polar(1.0, -phase)},
                        {layout.index(pair), -std::sin(r_f)}});
}

Ket fermion_out_one(Mode mode) {
    const std::array<std::size_t, 2> occ{1, 0};
    return Ket::basis(fermion_mode_layout(mode), occ);
}

TruncatedKet build_final_state(const Scenario& scenario) {
    scenario.validate();
    const ModeKets s = scenario.accelerated == Acceleration::Both
                           ? accelerated(scenario, Mode::S)
                           : unaccelerated(scenario.statistics, Mode::S);
    const ModeKets w = accelerated(scenario, Mode::Omega);

    const Ket raw = (tensor(s.vacuum, w.vacuum) + tensor(s.one, w.one)) * Complex(1.0 / std::numbers::sqrt2);
    if (scenario.statistics == Statistics::Fermion) {
        // No truncation: the expansions are exact and unit norm.
        return {normalize(raw).ket, 0.0};
    }
    return truncated(raw);
}

}  // namespace accelent
