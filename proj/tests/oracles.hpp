#pragma once

// Test-only reference implementations. Nothing here calls into the library's
// eigen-solver, partial-trace or partial-transpose code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace accelent::oracle {

using Complex = std::complex<double>;
using Dims = std::vector<std::size_t>;

inline std::size_t product(const Dims& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}

inline std::vector<std::size_t> decode(std::size_t index, const Dims& dims) {
    std::vector<std::size_t> occ(dims.size());
    for (std::size_t i = dims.size(); i-- > 0;) {
        occ[i] = index % dims[i];
        index /= dims[i];
    }
    return occ;
}

inline std::size_t encode(const std::vector<std::size_t>& occ, const Dims& dims) {
    std::size_t index = 0;
    for (std::size_t i = 0; i < dims.size(); ++i) index = index * dims[i] + occ[i];
    return index;
}

/// Cyclic Jacobi on the real symmetric embedding [[Re, -Im], [Im, Re]] of a
/// complex Hermitian matrix. Each eigenvalue of H appears twice in the
/// embedding; every second one is returned, ascending.
inline std::vector<double> jacobi_eigenvalues(const Eigen::MatrixXcd& h) {
    const std::size_t n = static_cast<std::size_t>(h.rows());
    const std::size_t m = 2 * n;
    std::vector<double> a(m * m);
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * m + j]; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Complex z = h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            at(i, j) = z.real();
            at(i + n, j + n) = z.real();
            at(i, j + n) = -z.imag();
            at(i + n, j) = z.imag();
        }
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                if (std::abs(at(p, q)) < 1e-300) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * at(p, q));
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(m);
    for (std::size_t i = 0; i < m; ++i) ev[i] = at(i, i);
    std::sort(ev.begin(), ev.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < m; i += 2) out.push_back(0.5 * (ev[i] + ev[i + 1]));
    return out;
}

/// Swaps the row/column occupations of the sub-systems flagged in `party`.
inline Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd& rho, const Dims& dims,
                                          const std::vector<bool>& party) {
    const std::size_t d = product(dims);
    Eigen::MatrixXcd out(rho.rows(), rho.cols());
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            auto ri = decode(i, dims);
            auto cj = decode(j, dims);
            for (std::size_t k = 0; k < dims.size(); ++k) {
                if (party[k]) std::swap(ri[k], cj[k]);
            }
            out(static_cast<Eigen::Index>(encode(ri, dims)),
                static_cast<Eigen::Index>(encode(cj, dims))) =
                rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

/// Sums over the sub-systems not flagged in `keep`.
inline Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho, const Dims& dims,
                                      const std::vector<bool>& keep) {
    Dims kept;
    for (std::size_t k = 0; k < dims.size(); ++k)
        if (keep[k]) kept.push_back(dims[k]);
    const std::size_t d = product(dims);
    const std::size_t dk = product(kept);
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dk),
                                                  static_cast<Eigen::Index>(dk));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            const auto ri = decode(i, dims);
            const auto cj = decode(j, dims);
            bool same = true;
            std::vector<std::size_t> rk, ck;
            for (std::size_t k = 0; k < dims.size(); ++k) {
                if (keep[k]) {
                    rk.push_back(ri[k]);
                    ck.push_back(cj[k]);
                } else if (ri[k] != cj[k]) {
                    same = false;
                }
            }
            if (!same) continue;
            out(static_cast<Eigen::Index>(encode(rk, kept)),
                static_cast<Eigen::Index>(encode(ck, kept))) +=
                rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

inline Eigen::VectorXcd random_state(std::size_t dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(g(rng), g(rng));
    return v / v.norm();
}

inline Eigen::MatrixXcd random_hermitian(std::size_t n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex(g(rng), g(rng));
    return 0.5 * (a + a.adjoint());
}

/// Tail weight Σ_{n>N} tanh^{2n} r / cosh² r of the two-mode squeezed vacuum.
inline double squeezed_vacuum_tail(double r, std::size_t cutoff) {
    return std::pow(std::tanh(r), 2.0 * static_cast<double>(cutoff + 1));
}

}  // namespace accelent::oracle
