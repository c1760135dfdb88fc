#include "accelent/density.hpp"

#include <algorithm>
#include <cmath>

#include "accelent/errors.hpp"
#include "index_split.hpp"

namespace accelent {
namespace {

constexpr double kNormTolerance = 1e-10;

void require_unit_norm(const Ket& k, const char* who) {
    if (std::abs(k.squared_norm() - 1.0) > kNormTolerance) {
        throw DomainError(std::string(who) + ": ket is not normalised; normalize() it first");
    }
}

}  // namespace

DensityMatrix::DensityMatrix(SubsystemLayout layout, SparseMatrix entries)
    : layout_(std::move(layout)), entries_(std::move(entries)) {
    if (!entries_.is_square() || entries_.rows() != layout_.total_dimension()) {
        throw LayoutError("density matrix side does not match layout dimension");
    }
}

DensityMatrix DensityMatrix::from_dense(SubsystemLayout layout, const Eigen::MatrixXcd& m) {
    return DensityMatrix(std::move(layout), SparseMatrix::from_dense(m));
}

DensityMatrix outer_product(const Ket& k) {
    require_unit_norm(k, "outer_product");
    std::vector<MatrixEntry> entries;
    entries.reserve(k.nonzeros() * k.nonzeros());
    for (const auto& a : k.entries()) {
        for (const auto& b : k.entries()) {
            entries.push_back({a.index, b.index, a.amplitude * std::conj(b.amplitude)});
        }
    }
    const std::uint64_t d = k.layout().total_dimension();
    return DensityMatrix(k.layout(), SparseMatrix(d, d, std::move(entries)));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const SubModeLabel> keep) {
    if (keep.empty()) {
        throw LayoutError("partial_trace: keep set must be non-empty");
    }
    detail::IndexSplitter rows(rho.layout(), keep);
    detail::IndexSplitter cols(rho.layout(), keep);
    std::vector<MatrixEntry> reduced;
    for (const auto& e : rho.entries().entries()) {
        const auto [kr, tr] = rows.split(e.row);
        const auto [kc, tc] = cols.split(e.col);
        if (tr == tc) reduced.push_back({kr, kc, e.value});
    }
    const std::uint64_t d = rows.kept().total_dimension();
    return DensityMatrix(rows.kept(), SparseMatrix(d, d, std::move(reduced)));
}

DensityMatrix reduce_pure(const Ket& k, std::span<const SubModeLabel> keep) {
    if (keep.empty()) {
        throw LayoutError("reduce_pure: keep set must be non-empty");
    }
    require_unit_norm(k, "reduce_pure");
    detail::IndexSplitter splitter(k.layout(), keep);

    struct Split {
        std::uint64_t traced, kept;
        Complex amplitude;
    };
    std::vector<Split> split;
    split.reserve(k.nonzeros());
    for (const auto& e : k.entries()) {
        const auto [kept, traced] = splitter.split(e.index);
        split.push_back({traced, kept, e.amplitude});
    }
    std::sort(split.begin(), split.end(), [](const Split& a, const Split& b) {
        return a.traced != b.traced ? a.traced < b.traced : a.kept < b.kept;
    });

    // ρ = Σ_t ψ(·, t) ψ(·, t)†, one outer product per traced multi-index.
    std::vector<MatrixEntry> entries;
    for (std::size_t i = 0; i < split.size();) {
        std::size_t j = i;
        while (j < split.size() && split[j].traced == split[i].traced) ++j;
        for (std::size_t a = i; a < j; ++a) {
            for (std::size_t b = i; b < j; ++b) {
                entries.push_back(
                    {split[a].kept, split[b].kept, split[a].amplitude * std::conj(split[b].amplitude)});
            }
        }
        i = j;
    }
    const std::uint64_t d = splitter.kept().total_dimension();
    return DensityMatrix(splitter.kept(), SparseMatrix(d, d, std::move(entries)));
}

}  // namespace accelent
