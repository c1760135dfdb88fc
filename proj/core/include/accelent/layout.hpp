#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "accelent/bogoliubov.hpp"

namespace accelent {

enum class Mode : std::uint8_t { S, Omega };
enum class Species : std::uint8_t { Particle, Antiparticle };

struct SubModeLabel {
    Mode mode = Mode::S;
    Species species = Species::Particle;

    auto operator<=>(const SubModeLabel&) const = default;
};

/// "s.p", "s.a", "w.p", "w.a".
std::string to_string(SubModeLabel label);

using LabelSet = std::vector<SubModeLabel>;

/// One sub-mode of the Fock space: a boson truncated at `max_occupation`
/// or a fermion (max_occupation = 1).
struct SubModeSpec {
    SubModeLabel label;
    Statistics statistics = Statistics::Fermion;
    std::size_t max_occupation = 1;

    static SubModeSpec boson(SubModeLabel label, std::size_t cutoff);
    static SubModeSpec fermion(SubModeLabel label);

    std::size_t dimension() const { return max_occupation + 1; }

    bool operator==(const SubModeSpec&) const = default;
};

/// Largest number of amplitudes any dense vector or matrix side may have.
inline constexpr std::uint64_t kDenseAmplitudeLimit = std::uint64_t{1} << 20;

/// Ordered product of sub-modes. Basis states are indexed row-major by the
/// occupation numbers in declaration order (last sub-mode varies fastest).
class SubsystemLayout {
public:
    static constexpr std::uint64_t kDefaultMaxDimension = std::uint64_t{1} << 40;

    SubsystemLayout() = default;
    explicit SubsystemLayout(std::vector<SubModeSpec> modes,
                             std::uint64_t max_dimension = kDefaultMaxDimension);

    std::size_t size() const { return modes_.size(); }
    std::span<const SubModeSpec> modes() const { return modes_; }
    const SubModeSpec& mode(std::size_t i) const { return modes_.at(i); }
    std::size_t dimension(std::size_t i) const { return modes_.at(i).dimension(); }
    std::uint64_t total_dimension() const { return total_; }
    LabelSet labels() const;

    bool contains(SubModeLabel label) const { return find(label).has_value(); }
    std::optional<std::size_t> find(SubModeLabel label) const;
    /// Throws LayoutError if absent.
    std::size_t position(SubModeLabel label) const;

    /// Throws IndexError on wrong arity or an occupation >= local dimension.
    std::uint64_t index(std::span<const std::size_t> occupations) const;
    std::vector<std::size_t> occupations(std::uint64_t index) const;
    void occupations(std::uint64_t index, std::span<std::size_t> out) const;

    /// Sub-layout containing `keep`, in this layout's order.
    SubsystemLayout select(std::span<const SubModeLabel> keep) const;
    /// Concatenation; throws LayoutError on a label collision.
    SubsystemLayout concat(const SubsystemLayout& other) const;

    bool operator==(const SubsystemLayout& other) const { return modes_ == other.modes_; }

private:
    std::vector<SubModeSpec> modes_;
    std::vector<std::uint64_t> strides_;
    std::uint64_t total_ = 1;
    std::uint64_t max_dimension_ = kDefaultMaxDimension;
};

}  // namespace accelent
