#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "accelent/layout.hpp"

namespace accelent {

using Complex = std::complex<double>;

struct MatrixEntry {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    Complex value;
};

/// Coordinate-format complex matrix with 64-bit indices. Entries are kept
/// sorted by (row, col) with duplicates summed, so the dimension can be far
/// larger than anything that could be allocated densely.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::uint64_t rows, std::uint64_t cols);
    SparseMatrix(std::uint64_t rows, std::uint64_t cols, std::vector<MatrixEntry> entries);

    static SparseMatrix from_dense(const Eigen::MatrixXcd& m);

    std::uint64_t rows() const { return rows_; }
    std::uint64_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    std::span<const MatrixEntry> entries() const { return entries_; }
    std::size_t nonzeros() const { return entries_.size(); }

    Complex value(std::uint64_t row, std::uint64_t col) const;
    Complex trace() const;
    /// max |M_ij - conj(M_ji)| over all stored pairs.
    double hermiticity_defect() const;
    double max_abs() const;

    Eigen::MatrixXcd to_dense(std::uint64_t limit = kDenseAmplitudeLimit) const;

private:
    std::uint64_t rows_ = 0;
    std::uint64_t cols_ = 0;
    std::vector<MatrixEntry> entries_;
};

/// Eigenvalues of a Hermitian matrix, ascending. The input is symmetrised as
/// (M + M†)/2 first; a defect above 1e-10 (relative to max(1, max|M_ij|))
/// throws DomainError.
std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& matrix);

/// Sparse variant. The matrix is split into the connected components of its
/// nonzero pattern and each block is diagonalised densely; rows and columns
/// with no entries contribute zero eigenvalues. Returns `rows()` values.
std::vector<double> hermitian_eigenvalues(const SparseMatrix& matrix);

/// Nonzero-pattern blocks of a rectangular matrix; singular values of every
/// block, descending within the returned vector. Zero singular values from
/// empty rows/columns are omitted.
std::vector<double> singular_values(const SparseMatrix& matrix);

/// Sum of singular values.
double trace_norm(const Eigen::MatrixXcd& matrix);

}  // namespace accelent
