#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "accelent/layout.hpp"
#include "accelent/linalg.hpp"

namespace accelent {

/// Pure state on a SubsystemLayout. Amplitudes are addressed by the
/// row-major basis index of the layout; only nonzero amplitudes are stored,
/// sorted by index.
class Ket {
public:
    struct Entry {
        std::uint64_t index = 0;
        Complex amplitude;
    };

    Ket() = default;
    explicit Ket(SubsystemLayout layout);
    /// Duplicated indices are summed; non-finite amplitudes throw DomainError.
    Ket(SubsystemLayout layout, std::vector<Entry> entries);

    static Ket basis(SubsystemLayout layout, std::span<const std::size_t> occupations,
                     Complex amplitude = 1.0);
    static Ket from_dense(SubsystemLayout layout, const Eigen::VectorXcd& amplitudes);

    const SubsystemLayout& layout() const { return layout_; }
    std::span<const Entry> entries() const { return entries_; }
    std::size_t nonzeros() const { return entries_.size(); }

    Complex amplitude(std::uint64_t index) const;
    Complex amplitude(std::span<const std::size_t> occupations) const;

    double squared_norm() const;
    double norm() const;

    Eigen::VectorXcd to_dense(std::uint64_t limit = kDenseAmplitudeLimit) const;

    /// Requires identical layouts.
    Ket& operator+=(const Ket& other);
    Ket& operator*=(Complex factor);

    friend Ket operator+(Ket a, const Ket& b) { return a += b; }
    friend Ket operator*(Ket k, Complex factor) { return k *= factor; }
    friend Ket operator*(Complex factor, Ket k) { return k *= factor; }

private:
    void canonicalize();

    SubsystemLayout layout_;
    std::vector<Entry> entries_;
};

/// |a⟩ ⊗ |b⟩ on the concatenated layout. Throws LayoutError if the label
/// sets overlap.
Ket tensor(const Ket& a, const Ket& b);

struct NormalizedKet {
    Ket ket;
    /// 1 - ‖input‖²: amplitude weight lost to truncation.
    double deficit = 0.0;
};

/// Throws DomainError on the zero ket.
NormalizedKet normalize(const Ket& k);

/// ⟨bra|ket⟩; layouts must match.
Complex inner_product(const Ket& bra, const Ket& ket);

/// ⟨n⟩ of one sub-mode.
double occupation_expectation(const Ket& k, SubModeLabel label);

}  // namespace accelent
