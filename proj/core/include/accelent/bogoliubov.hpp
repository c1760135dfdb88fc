#pragma once

#include <complex>

namespace accelent {

enum class Statistics { Boson, Fermion };

/// Rest mass and uniform electric field strength, natural units.
struct FieldParams {
    double mass = 0.0;
    double field = 1.0;
};

/// Magnitudes of the scalar-field Bogoliubov pair, |α| = cosh r, |β| = sinh r.
struct ScalarCoefficients {
    double mu2 = 0.0;
    double alpha_mag = 1.0;
    double beta_mag = 0.0;
    double r = 0.0;
};

/// Magnitudes of the Dirac-field Bogoliubov pair, |α_f| = cos r_f, |β_f| = sin r_f.
struct FermionCoefficients {
    double mu2 = 0.0;
    double alpha_mag = 1.0;
    double beta_mag = 0.0;
    double r_f = 0.0;
};

/// μ² = m² / 2E. Throws DomainError for E <= 0, m < 0 or non-finite input.
double mu2_from_field(const FieldParams& params);

/// |β| = exp(-π μ²), |α| = sqrt(1 + |β|²), r = asinh |β|. Requires μ² > 0.
ScalarCoefficients scalar_coefficients(double mu2);

/// |β_f| = exp(-π μ²), |α_f| = sqrt(1 - |β_f|²), r_f = asin |β_f|. Requires μ² >= 0;
/// μ² = 0 is the infinite-acceleration limit r_f = π/2.
FermionCoefficients fermion_coefficients(double mu2);

/// Gamma function for complex argument.
///
/// Lanczos approximation (g = 7, nine coefficients) evaluated in log form,
/// with the reflection formula Γ(z)Γ(1-z) = π / sin(πz) for Re z < 1/2.
/// Relative error is below 1e-13 for |Im z| <= 100 near Re z ∈ {0, 1/2}.
/// Throws DomainError at the poles z = 0, -1, -2, ...
std::complex<double> complex_gamma(std::complex<double> z);

/// Evaluates α directly from its gamma-function expression and returns
/// | |α|² ∓ |β|² - 1 | (minus for bosons, plus for fermions).
double verify_unitarity(double mu2, Statistics statistics);

}  // namespace accelent
