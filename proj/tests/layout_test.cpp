#include "accelent/layout.hpp"

#include <array>
#include <vector>

#include <gtest/gtest.h>

#include "accelent/errors.hpp"

using namespace accelent;

namespace {

constexpr SubModeLabel kSP{Mode::S, Species::Particle};
constexpr SubModeLabel kSA{Mode::S, Species::Antiparticle};
constexpr SubModeLabel kWP{Mode::Omega, Species::Particle};
constexpr SubModeLabel kWA{Mode::Omega, Species::Antiparticle};

SubsystemLayout qubits2() {
    return SubsystemLayout({SubModeSpec::fermion(kSP), SubModeSpec::fermion(kWP)});
}

}  // namespace

TEST(Layout, ZeroOccupationsMapToZero) {
    const SubsystemLayout layout({SubModeSpec::boson(kSP, 3), SubModeSpec::fermion(kWP),
                                  SubModeSpec::boson(kWA, 2)});
    const std::array<std::size_t, 3> zero{0, 0, 0};
    EXPECT_EQ(layout.index(zero), 0u);
    EXPECT_EQ(layout.total_dimension(), 4u * 2u * 3u);
}

TEST(Layout, RowMajor) {
    const std::array<std::size_t, 2> occ{1, 0};
    EXPECT_EQ(qubits2().index(occ), 2u);
}

TEST(Layout, IndexIsBijection) {
    const SubsystemLayout layout({SubModeSpec::boson(kSP, 2), SubModeSpec::fermion(kSA),
                                  SubModeSpec::boson(kWP, 3), SubModeSpec::fermion(kWA)});
    std::vector<bool> seen(layout.total_dimension(), false);
    for (std::uint64_t i = 0; i < layout.total_dimension(); ++i) {
        const auto occ = layout.occupations(i);
        EXPECT_EQ(layout.index(occ), i);
        for (std::size_t k = 0; k < occ.size(); ++k) EXPECT_LT(occ[k], layout.dimension(k));
        seen[i] = true;
    }
    for (bool s : seen) EXPECT_TRUE(s);
}

TEST(Layout, OutOfRange) {
    const std::array<std::size_t, 2> bad{2, 0};
    EXPECT_THROW(qubits2().index(bad), IndexError);
    const std::array<std::size_t, 1> short_occ{0};
    EXPECT_THROW(qubits2().index(short_occ), IndexError);
    EXPECT_THROW(qubits2().occupations(4), IndexError);
}

TEST(Layout, Validation) {
    EXPECT_THROW(SubsystemLayout({SubModeSpec::fermion(kSP), SubModeSpec::fermion(kSP)}), LayoutError);
    EXPECT_THROW(SubModeSpec::boson(kSP, 0), LayoutError);
    EXPECT_THROW(SubsystemLayout({SubModeSpec{kSP, Statistics::Fermion, 2}}), LayoutError);
    EXPECT_EQ(SubModeSpec::boson(kSP, 5).dimension(), 6u);
    EXPECT_EQ(SubModeSpec::fermion(kSP).dimension(), 2u);
}

TEST(Layout, SafetyLimit) {
    EXPECT_THROW(SubsystemLayout({SubModeSpec::boson(kSP, 1023), SubModeSpec::boson(kWP, 1024)},
                                 std::uint64_t{1} << 20),
                 LayoutError);
    EXPECT_NO_THROW(SubsystemLayout({SubModeSpec::boson(kSP, 1023), SubModeSpec::boson(kWP, 1023)},
                                    std::uint64_t{1} << 20));
}

TEST(Layout, SelectKeepsDeclaredOrder) {
    const SubsystemLayout layout({SubModeSpec::fermion(kSP), SubModeSpec::fermion(kSA),
                                  SubModeSpec::fermion(kWP), SubModeSpec::fermion(kWA)});
    const std::array keep{kWA, kSP};
    const auto sub = layout.select(keep);
    ASSERT_EQ(sub.size(), 2u);
    EXPECT_EQ(sub.mode(0).label, kSP);
    EXPECT_EQ(sub.mode(1).label, kWA);
    const std::array unknown{SubModeLabel{Mode::Omega, Species::Antiparticle}};
    EXPECT_THROW(qubits2().select(unknown), LayoutError);
}

TEST(Layout, ConcatRejectsCollision) {
    EXPECT_THROW(qubits2().concat(qubits2()), LayoutError);
    const SubsystemLayout a({SubModeSpec::fermion(kSP)});
    const SubsystemLayout b({SubModeSpec::fermion(kWP)});
    EXPECT_EQ(a.concat(b), qubits2());
}

TEST(Layout, LabelNames) {
    EXPECT_EQ(to_string(kSP), "s.p");
    EXPECT_EQ(to_string(kWA), "w.a");
}
