#pragma once

#include <span>

#include <Eigen/Dense>

#include "accelent/ket.hpp"
#include "accelent/layout.hpp"
#include "accelent/linalg.hpp"

namespace accelent {

/// Hermitian operator on a layout, stored sparsely.
class DensityMatrix {
public:
    DensityMatrix() = default;
    DensityMatrix(SubsystemLayout layout, SparseMatrix entries);

    static DensityMatrix from_dense(SubsystemLayout layout, const Eigen::MatrixXcd& m);

    const SubsystemLayout& layout() const { return layout_; }
    const SparseMatrix& entries() const { return entries_; }
    std::uint64_t dimension() const { return entries_.rows(); }

    double trace() const { return entries_.trace().real(); }
    Eigen::MatrixXcd to_dense(std::uint64_t limit = kDenseAmplitudeLimit) const {
        return entries_.to_dense(limit);
    }

private:
    SubsystemLayout layout_;
    SparseMatrix entries_;
};

/// |k⟩⟨k|. The ket must be normalised to within 1e-10.
DensityMatrix outer_product(const Ket& k);

/// Traces out every sub-mode not listed in `keep`; the result keeps the
/// original sub-mode order.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const SubModeLabel> keep);

/// tr_{not keep} |k⟩⟨k| evaluated directly from the amplitudes, without
/// forming the full outer product. Same normalisation precondition as
/// outer_product.
DensityMatrix reduce_pure(const Ket& k, std::span<const SubModeLabel> keep);

}  // namespace accelent
