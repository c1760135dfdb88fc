#pragma once

#include <cstddef>

#include "accelent/bogoliubov.hpp"
#include "accelent/ket.hpp"
#include "accelent/layout.hpp"

namespace accelent {

enum class Acceleration { One, Both };

/// Which field, which modes are accelerated and how strongly.
///
/// `squeeze` is r for scalars and r_f ∈ [0, π/2] for fermions. `phase` is the
/// phase of the cos r_f term of a fermionic out-vacuum; scalars ignore it.
/// `cutoff` is the bosonic truncation (ignored for fermions).
struct Scenario {
    Statistics statistics = Statistics::Fermion;
    Acceleration accelerated = Acceleration::One;
    double squeeze = 0.0;
    double phase = 0.0;
    std::size_t cutoff = 30;

    /// Throws DomainError when the invariants above are violated.
    void validate() const;
};

inline constexpr std::size_t kMinScalarCutoff = 4;

/// A ket normalised after truncation, with the weight that was lost.
struct TruncatedKet {
    Ket ket;
    double deficit = 0.0;
};

/// Particle (dimension cutoff+2) and antiparticle (dimension cutoff+1)
/// sub-modes of one accelerated scalar mode.
SubsystemLayout scalar_mode_layout(Mode mode, std::size_t cutoff);

/// Particle and antiparticle sub-modes of one accelerated fermionic mode.
SubsystemLayout fermion_mode_layout(Mode mode);

/// In-vacuum of a scalar mode in the out basis:
/// Σ_n tanhⁿr / cosh r |n_p, n_a⟩, n = 0..cutoff.
TruncatedKet scalar_out_vacuum(double r, std::size_t cutoff, Mode mode);

/// One-particle in-state of a scalar mode in the out basis:
/// Σ_n √(n+1) tanhⁿr / cosh²r |(n+1)_p, n_a⟩, n = 0..cutoff.
TruncatedKet scalar_out_one(double r, std::size_t cutoff, Mode mode);

/// cos r_f e^{-iφ} |0_p, 0_a⟩ - sin r_f |1_p, 1_a⟩.
Ket fermion_out_vacuum(double r_f, double phase, Mode mode);

/// |1_p, 0_a⟩.
Ket fermion_out_one(Mode mode);

/// Bell pair (|0_s 0_ω⟩ + |1_s 1_ω⟩)/√2 with each accelerated mode's in-kets
/// replaced by their out-basis expansions. An unaccelerated mode is a single
/// two-level particle sub-mode. Sub-mode order: (s,p) (s,a) (ω,p) (ω,a),
/// absent ones omitted.
TruncatedKet build_final_state(const Scenario& scenario);

}  // namespace accelent
