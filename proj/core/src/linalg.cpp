#include "accelent/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "accelent/errors.hpp"

namespace accelent {
namespace {

constexpr double kHermitianGate = 1e-10;

void canonicalize(std::vector<MatrixEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < entries.size();) {
        MatrixEntry merged = entries[i];
        std::size_t j = i + 1;
        for (; j < entries.size() && entries[j].row == merged.row && entries[j].col == merged.col;
             ++j) {
            merged.value += entries[j].value;
        }
        if (merged.value != Complex{}) entries[out++] = merged;
        i = j;
    }
    entries.resize(out);
}

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::size_t> parent_;
};

// Compresses the touched indices of one axis into 0..n-1.
struct IndexMap {
    std::vector<std::uint64_t> values;

    void build() {
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
    }
    std::size_t at(std::uint64_t v) const {
        return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), v) -
                                        values.begin());
    }
};

void check_hermitian(double defect, double scale) {
    if (defect > kHermitianGate * std::max(1.0, scale)) {
        throw DomainError("matrix is not Hermitian within tolerance (defect " +
                          std::to_string(defect) + ")");
    }
}

}  // namespace

SparseMatrix::SparseMatrix(std::uint64_t rows, std::uint64_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix::SparseMatrix(std::uint64_t rows, std::uint64_t cols,
                           std::vector<MatrixEntry> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    for (const auto& e : entries_) {
        if (e.row >= rows_ || e.col >= cols_) {
            throw IndexError("matrix entry (" + std::to_string(e.row) + ", " +
                             std::to_string(e.col) + ") out of range");
        }
        if (!std::isfinite(e.value.real()) || !std::isfinite(e.value.imag())) {
            throw DomainError("matrix entry is not finite");
        }
    }
    canonicalize(entries_);
}

SparseMatrix SparseMatrix::from_dense(const Eigen::MatrixXcd& m) {
    std::vector<MatrixEntry> entries;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) != Complex{}) {
                entries.push_back({static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j),
                                   m(i, j)});
            }
        }
    }
    return SparseMatrix(static_cast<std::uint64_t>(m.rows()),
                        static_cast<std::uint64_t>(m.cols()), std::move(entries));
}

Complex SparseMatrix::value(std::uint64_t row, std::uint64_t col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), MatrixEntry{row, col, {}},
                               [](const MatrixEntry& a, const MatrixEntry& b) {
                                   return a.row != b.row ? a.row < b.row : a.col < b.col;
                               });
    if (it != entries_.end() && it->row == row && it->col == col) return it->value;
    return {};
}

Complex SparseMatrix::trace() const {
    Complex t{};
    for (const auto& e : entries_) {
        if (e.row == e.col) t += e.value;
    }
    return t;
}

double SparseMatrix::hermiticity_defect() const {
    double defect = 0.0;
    for (const auto& e : entries_) {
        defect = std::max(defect, std::abs(e.value - std::conj(value(e.col, e.row))));
    }
    return defect;
}

double SparseMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e.value));
    return m;
}

Eigen::MatrixXcd SparseMatrix::to_dense(std::uint64_t limit) const {
    if (rows_ > limit || cols_ > limit) {
        throw DomainError("matrix too large to materialise densely");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(rows_),
                                                static_cast<Eigen::Index>(cols_));
    for (const auto& e : entries_) {
        m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) = e.value;
    }
    return m;
}

std::vector<double> hermitian_eigenvalues(const Eigen::MatrixXcd& matrix) {
    if (matrix.rows() != matrix.cols()) {
        throw DomainError("hermitian_eigenvalues: matrix is not square");
    }
    if (matrix.size() == 0) return {};
    const double defect = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
    check_hermitian(defect, matrix.cwiseAbs().maxCoeff());
    const Eigen::MatrixXcd sym = 0.5 * (matrix + matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw DomainError("hermitian_eigenvalues: eigensolver did not converge");
    }
    const auto& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> hermitian_eigenvalues(const SparseMatrix& matrix) {
    if (!matrix.is_square()) {
        throw DomainError("hermitian_eigenvalues: matrix is not square");
    }
    check_hermitian(matrix.hermiticity_defect(), matrix.max_abs());

    IndexMap nodes;
    for (const auto& e : matrix.entries()) {
        nodes.values.push_back(e.row);
        nodes.values.push_back(e.col);
    }
    nodes.build();
    const std::size_t n = nodes.values.size();

    DisjointSets sets(n);
    for (const auto& e : matrix.entries()) sets.unite(nodes.at(e.row), nodes.at(e.col));

    std::unordered_map<std::size_t, std::vector<std::size_t>> members;
    for (std::size_t i = 0; i < n; ++i) members[sets.find(i)].push_back(i);
    std::vector<std::size_t> block_of(n), slot(n);
    std::vector<std::vector<std::size_t>> blocks;
    for (auto& [root, list] : members) {
        for (std::size_t k = 0; k < list.size(); ++k) {
            block_of[list[k]] = blocks.size();
            slot[list[k]] = k;
        }
        blocks.push_back(std::move(list));
    }

    std::vector<Eigen::MatrixXcd> dense(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto size = static_cast<Eigen::Index>(blocks[b].size());
        if (static_cast<std::uint64_t>(size) > kDenseAmplitudeLimit / 64) {
            throw DomainError("hermitian_eigenvalues: connected block too large for dense solve");
        }
        dense[b] = Eigen::MatrixXcd::Zero(size, size);
    }
    for (const auto& e : matrix.entries()) {
        const std::size_t r = nodes.at(e.row);
        const std::size_t c = nodes.at(e.col);
        dense[block_of[r]](static_cast<Eigen::Index>(slot[r]), static_cast<Eigen::Index>(slot[c])) =
            e.value;
    }

    std::vector<double> eigenvalues;
    eigenvalues.reserve(static_cast<std::size_t>(matrix.rows()));
    for (const auto& block : dense) {
        const Eigen::MatrixXcd sym = 0.5 * (block + block.adjoint());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(sym, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw DomainError("hermitian_eigenvalues: eigensolver did not converge");
        }
        const auto& ev = solver.eigenvalues();
        eigenvalues.insert(eigenvalues.end(), ev.data(), ev.data() + ev.size());
    }
    eigenvalues.resize(static_cast<std::size_t>(matrix.rows()), 0.0);
    std::sort(eigenvalues.begin(), eigenvalues.end());
    return eigenvalues;
}

std::vector<double> singular_values(const SparseMatrix& matrix) {
    IndexMap rows, cols;
    for (const auto& e : matrix.entries()) {
        rows.values.push_back(e.row);
        cols.values.push_back(e.col);
    }
    rows.build();
    cols.build();
    const std::size_t nr = rows.values.size();
    // Bipartite graph: row nodes 0..nr-1, column nodes nr..nr+nc-1.
    DisjointSets sets(nr + cols.values.size());
    for (const auto& e : matrix.entries()) sets.unite(rows.at(e.row), nr + cols.at(e.col));

    struct Block {
        std::vector<std::size_t> rows, cols;
    };
    std::unordered_map<std::size_t, Block> grouped;
    for (std::size_t i = 0; i < nr; ++i) grouped[sets.find(i)].rows.push_back(i);
    for (std::size_t j = 0; j < cols.values.size(); ++j) grouped[sets.find(nr + j)].cols.push_back(j);

    std::vector<double> values;
    std::vector<std::size_t> row_slot(nr), col_slot(cols.values.size());
    std::unordered_map<std::size_t, Eigen::MatrixXcd> dense;
    for (auto& [root, block] : grouped) {
        for (std::size_t k = 0; k < block.rows.size(); ++k) row_slot[block.rows[k]] = k;
        for (std::size_t k = 0; k < block.cols.size(); ++k) col_slot[block.cols[k]] = k;
        dense[root] = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(block.rows.size()),
                                             static_cast<Eigen::Index>(block.cols.size()));
    }
    for (const auto& e : matrix.entries()) {
        const std::size_t r = rows.at(e.row);
        const std::size_t c = cols.at(e.col);
        dense[sets.find(r)](static_cast<Eigen::Index>(row_slot[r]),
                            static_cast<Eigen::Index>(col_slot[c])) = e.value;
    }
    for (const auto& [root, block] : dense) {
        Eigen::BDCSVD<Eigen::MatrixXcd> svd(block);
        const auto& sv = svd.singularValues();
        values.insert(values.end(), sv.data(), sv.data() + sv.size());
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

double trace_norm(const Eigen::MatrixXcd& matrix) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(matrix);
    return svd.singularValues().sum();
}

}  // namespace accelent
