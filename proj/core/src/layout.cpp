#include "accelent/layout.hpp"

#include <algorithm>
#include <limits>

#include "accelent/errors.hpp"

namespace accelent {

std::string to_string(SubModeLabel label) {
    std::string s = label.mode == Mode::S ? "s" : "w";
    s += label.species == Species::Particle ? ".p" : ".a";
    return s;
}

SubModeSpec SubModeSpec::boson(SubModeLabel label, std::size_t cutoff) {
    if (cutoff < 1) {
        throw LayoutError("boson sub-mode " + to_string(label) + " needs cutoff >= 1");
    }
    return {label, Statistics::Boson, cutoff};
}

SubModeSpec SubModeSpec::fermion(SubModeLabel label) { return {label, Statistics::Fermion, 1}; }

SubsystemLayout::SubsystemLayout(std::vector<SubModeSpec> modes, std::uint64_t max_dimension)
    : modes_(std::move(modes)), max_dimension_(max_dimension) {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        const auto& m = modes_[i];
        if (m.statistics == Statistics::Fermion && m.max_occupation != 1) {
            throw LayoutError("fermion sub-mode " + to_string(m.label) + " must have dimension 2");
        }
        if (m.statistics == Statistics::Boson && m.max_occupation < 1) {
            throw LayoutError("boson sub-mode " + to_string(m.label) + " needs cutoff >= 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (modes_[j].label == m.label) {
                throw LayoutError("duplicate sub-mode label " + to_string(m.label));
            }
        }
    }
    strides_.assign(modes_.size(), 1);
    total_ = 1;
    for (std::size_t i = modes_.size(); i-- > 0;) {
        strides_[i] = total_;
        const std::uint64_t d = modes_[i].dimension();
        if (total_ > max_dimension_ / d) {
            throw LayoutError("layout dimension exceeds safety limit of " +
                              std::to_string(max_dimension_));
        }
        total_ *= d;
    }
}

LabelSet SubsystemLayout::labels() const {
    LabelSet out;
    out.reserve(modes_.size());
    for (const auto& m : modes_) out.push_back(m.label);
    return out;
}

std::optional<std::size_t> SubsystemLayout::find(SubModeLabel label) const {
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i].label == label) return i;
    }
    return std::nullopt;
}

std::size_t SubsystemLayout::position(SubModeLabel label) const {
    if (auto p = find(label)) return *p;
    throw LayoutError("sub-mode " + to_string(label) + " is not part of the layout");
}

std::uint64_t SubsystemLayout::index(std::span<const std::size_t> occupations) const {
    if (occupations.size() != modes_.size()) {
        throw IndexError("expected " + std::to_string(modes_.size()) + " occupations, got " +
                         std::to_string(occupations.size()));
    }
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (occupations[i] >= modes_[i].dimension()) {
            throw IndexError("occupation " + std::to_string(occupations[i]) + " out of range for " +
                             to_string(modes_[i].label));
        }
        idx += occupations[i] * strides_[i];
    }
    return idx;
}

void SubsystemLayout::occupations(std::uint64_t index, std::span<std::size_t> out) const {
    if (index >= total_) {
        throw IndexError("basis index " + std::to_string(index) + " out of range");
    }
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        out[i] = static_cast<std::size_t>(index / strides_[i]);
        index %= strides_[i];
    }
}

std::vector<std::size_t> SubsystemLayout::occupations(std::uint64_t index) const {
    std::vector<std::size_t> occ(modes_.size());
    occupations(index, occ);
    return occ;
}

SubsystemLayout SubsystemLayout::select(std::span<const SubModeLabel> keep) const {
    for (const auto& label : keep) position(label);
    std::vector<SubModeSpec> picked;
    for (const auto& m : modes_) {
        if (std::find(keep.begin(), keep.end(), m.label) != keep.end()) picked.push_back(m);
    }
    return SubsystemLayout(std::move(picked), max_dimension_);
}

SubsystemLayout SubsystemLayout::concat(const SubsystemLayout& other) const {
    std::vector<SubModeSpec> joined = modes_;
    joined.insert(joined.end(), other.modes_.begin(), other.modes_.end());
    return SubsystemLayout(std::move(joined), std::max(max_dimension_, other.max_dimension_));
}

}  // namespace accelent
