#include "accelent/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "accelent/errors.hpp"
#include "oracles.hpp"

using namespace accelent;

TEST(HermitianEigenvalues, Identity) {
    const auto ev = hermitian_eigenvalues(Eigen::MatrixXcd::Identity(3, 3));
    ASSERT_EQ(ev.size(), 3u);
    for (double v : ev) EXPECT_NEAR(v, 1.0, 1e-15);
}

TEST(HermitianEigenvalues, Diagonal) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = 2.0;
    m(1, 1) = -1.0;
    const auto ev = hermitian_eigenvalues(m);
    EXPECT_NEAR(ev[0], -1.0, 1e-15);
    EXPECT_NEAR(ev[1], 2.0, 1e-15);
}

TEST(HermitianEigenvalues, MatchesJacobiOracle) {
    std::mt19937_64 rng(2024);
    for (int t = 0; t < 25; ++t) {
        const Eigen::MatrixXcd h = oracle::random_hermitian(6, rng);
        const auto ev = hermitian_eigenvalues(h);
        const auto want = oracle::jacobi_eigenvalues(h);
        ASSERT_EQ(ev.size(), 6u);
        for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(ev[i], want[i], 1e-8);
        EXPECT_NEAR(std::accumulate(ev.begin(), ev.end(), 0.0), h.trace().real(), 1e-10);
        EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
    }
}

TEST(HermitianEigenvalues, RejectsNonHermitian) {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(hermitian_eigenvalues(m), DomainError);
    EXPECT_THROW(hermitian_eigenvalues(SparseMatrix::from_dense(m)), DomainError);
    // Round-off-sized asymmetry is symmetrised away.
    m(1, 0) = 1.0 + 1e-13;
    EXPECT_NO_THROW(hermitian_eigenvalues(m));
}

TEST(HermitianEigenvalues, SparseBlocksMatchDense) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 10; ++t) {
        // Three Hermitian blocks scattered over a 20-dimensional space by a
        // random permutation, plus empty rows.
        const int n = 20;
        Eigen::MatrixXcd dense = Eigen::MatrixXcd::Zero(n, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        int offset = 0;
        for (int size : {4, 6, 5}) {
            const Eigen::MatrixXcd b = oracle::random_hermitian(static_cast<std::size_t>(size), rng);
            for (int i = 0; i < size; ++i)
                for (int j = 0; j < size; ++j) dense(perm[offset + i], perm[offset + j]) = b(i, j);
            offset += size;
        }
        const auto sparse_ev = hermitian_eigenvalues(SparseMatrix::from_dense(dense));
        const auto dense_ev = hermitian_eigenvalues(dense);
        ASSERT_EQ(sparse_ev.size(), dense_ev.size());
        for (std::size_t i = 0; i < dense_ev.size(); ++i) EXPECT_NEAR(sparse_ev[i], dense_ev[i], 1e-12);
    }
}

TEST(SingularValues, MatchDenseSvd) {
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(7, 5);
    for (auto [i, j] : {std::pair{0, 1}, {0, 3}, {2, 1}, {4, 4}, {6, 0}, {6, 2}, {5, 2}, {2, 3}}) {
        m(i, j) = Complex(g(rng), g(rng));
    }
    auto got = singular_values(SparseMatrix::from_dense(m));
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    std::vector<double> want(svd.singularValues().data(),
                             svd.singularValues().data() + svd.singularValues().size());
    want.erase(std::remove_if(want.begin(), want.end(), [](double v) { return v < 1e-14; }), want.end());
    got.erase(std::remove_if(got.begin(), got.end(), [](double v) { return v < 1e-14; }), got.end());
    ASSERT_EQ(got.size(), want.size());
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-12);
    EXPECT_NEAR(trace_norm(m), std::accumulate(want.begin(), want.end(), 0.0), 1e-12);
}

TEST(SparseMatrix, CanonicalForm) {
    const SparseMatrix m(3, 3, {{2, 1, {1.0, 0.0}}, {0, 0, {0.5, 0.0}}, {2, 1, {1.0, 1.0}},
                                {1, 1, {1.0, 0.0}}, {1, 1, {-1.0, 0.0}}});
    EXPECT_EQ(m.nonzeros(), 2u);
    EXPECT_EQ(m.value(2, 1), Complex(2.0, 1.0));
    EXPECT_EQ(m.value(1, 1), Complex());
    EXPECT_EQ(m.trace(), Complex(0.5));
    EXPECT_THROW(SparseMatrix(2, 2, {{2, 0, {1.0, 0.0}}}), IndexError);
}
