#include <array>
#include <cmath>
#include <complex>
#include <numbers>

#include "accelent/bogoliubov.hpp"
#include "accelent/errors.hpp"

namespace accelent {
namespace {

// Lanczos coefficients for g = 7, n = 9 (Godfrey).
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// log Γ(z) for Re z >= 1/2. Evaluating in log form keeps |Im z| ~ 100 from
// overflowing t^(z+1/2) or underflowing e^(-t) separately.
std::complex<double> log_gamma_right(std::complex<double> z) {
    z -= 1.0;
    std::complex<double> series = kLanczos[0];
    for (std::size_t i = 1; i < kLanczos.size(); ++i) {
        series += kLanczos[i] / (z + static_cast<double>(i));
    }
    const std::complex<double> t = z + kLanczosG + 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
           std::log(series);
}

}  // namespace

std::complex<double> complex_gamma(std::complex<double> z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError("complex_gamma: non-finite argument");
    }
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
        throw DomainError("complex_gamma: pole at non-positive integer");
    }
    if (z.real() < 0.5) {
        // Γ(z) = π / (sin(πz) Γ(1 - z))
        const std::complex<double> s = std::sin(std::numbers::pi * z);
        return std::numbers::pi / (s * std::exp(log_gamma_right(1.0 - z)));
    }
    return std::exp(log_gamma_right(z));
}

}  // namespace accelent
