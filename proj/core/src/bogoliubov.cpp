#include "accelent/bogoliubov.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "accelent/errors.hpp"

namespace accelent {

double mu2_from_field(const FieldParams& params) {
    if (!std::isfinite(params.mass) || !std::isfinite(params.field)) {
        throw DomainError("mu2_from_field: mass and field must be finite");
    }
    if (params.field <= 0.0) {
        throw DomainError("mu2_from_field: field strength E must be > 0, got " +
                          std::to_string(params.field));
    }
    if (params.mass < 0.0) {
        throw DomainError("mu2_from_field: mass must be >= 0");
    }
    return params.mass * params.mass / (2.0 * params.field);
}

ScalarCoefficients scalar_coefficients(double mu2) {
    if (!std::isfinite(mu2) || mu2 <= 0.0) {
        throw DomainError("scalar_coefficients: requires mu^2 > 0 (mu^2 = 0 is the unbounded "
                          "acceleration limit), got " + std::to_string(mu2));
    }
    ScalarCoefficients c;
    c.mu2 = mu2;
    c.beta_mag = std::exp(-std::numbers::pi * mu2);
    c.alpha_mag = std::sqrt(1.0 + c.beta_mag * c.beta_mag);
    c.r = std::asinh(c.beta_mag);
    return c;
}

FermionCoefficients fermion_coefficients(double mu2) {
    if (!std::isfinite(mu2) || mu2 < 0.0) {
        throw DomainError("fermion_coefficients: requires mu^2 >= 0, got " + std::to_string(mu2));
    }
    FermionCoefficients c;
    c.mu2 = mu2;
    c.beta_mag = std::exp(-std::numbers::pi * mu2);
    // 1 - e^{-2πμ²} loses digits for small μ²; -expm1 does not.
    c.alpha_mag = std::sqrt(-std::expm1(-2.0 * std::numbers::pi * mu2));
    c.r_f = std::atan2(c.beta_mag, c.alpha_mag);
    return c;
}

double verify_unitarity(double mu2, Statistics statistics) {
    using std::numbers::pi;
    using namespace std::complex_literals;
    if (statistics == Statistics::Boson) {
        if (!std::isfinite(mu2) || mu2 <= 0.0) {
            throw DomainError("verify_unitarity: scalar field requires mu^2 > 0");
        }
        const std::complex<double> alpha = std::sqrt(2.0 * pi) * std::exp(-1i * (pi / 4.0)) *
                                           std::exp(-pi * mu2 / 2.0) /
                                           complex_gamma({0.5, mu2});
        const std::complex<double> beta = 1i * std::exp(-pi * mu2);
        return std::abs(std::norm(alpha) - std::norm(beta) - 1.0);
    }
    if (!std::isfinite(mu2) || mu2 < 0.0) {
        throw DomainError("verify_unitarity: fermion field requires mu^2 >= 0");
    }
    const double beta = std::exp(-pi * mu2);
    if (mu2 == 0.0) {
        // α_f vanishes: Γ(iμ²) has its pole at the origin.
        return std::abs(beta * beta - 1.0);
    }
    const std::complex<double> alpha_conj = -1i * std::sqrt(2.0 * pi / mu2) *
                                            std::exp(-pi * mu2 / 2.0) /
                                            complex_gamma({0.0, mu2});
    return std::abs(std::norm(alpha_conj) + beta * beta - 1.0);
}

}  // namespace accelent
