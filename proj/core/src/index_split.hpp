#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "accelent/layout.hpp"

namespace accelent::detail {

// Maps a basis index of `layout` onto (index within the kept sub-layout,
// index within the complementary sub-layout).
class IndexSplitter {
public:
    IndexSplitter(const SubsystemLayout& layout, std::span<const SubModeLabel> keep)
        : layout_(layout), kept_(layout.select(keep)) {
        LabelSet rest;
        for (const auto& m : layout.modes()) {
            if (!kept_.contains(m.label)) rest.push_back(m.label);
        }
        rest_ = layout.select(rest);
        for (std::size_t i = 0; i < layout.size(); ++i) {
            is_kept_.push_back(kept_.contains(layout.mode(i).label));
        }
        scratch_.resize(layout.size());
    }

    const SubsystemLayout& kept() const { return kept_; }
    const SubsystemLayout& rest() const { return rest_; }

    std::pair<std::uint64_t, std::uint64_t> split(std::uint64_t index) {
        layout_.occupations(index, scratch_);
        std::uint64_t k = 0, r = 0;
        for (std::size_t i = 0; i < scratch_.size(); ++i) {
            const std::uint64_t d = layout_.dimension(i);
            if (is_kept_[i]) {
                k = k * d + scratch_[i];
            } else {
                r = r * d + scratch_[i];
            }
        }
        return {k, r};
    }

private:
    const SubsystemLayout& layout_;
    SubsystemLayout kept_;
    SubsystemLayout rest_;
    std::vector<bool> is_kept_;
    std::vector<std::size_t> scratch_;
};

}  // namespace accelent::detail
