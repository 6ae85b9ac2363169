#include <doctest.h>

#include <tproduct/dft.hpp>
#include <tproduct/reference.hpp>
#include <tproduct/structure.hpp>
#include <tproduct/tprod_ops.hpp>

#include "test_helpers.hpp"

#include <chrono>

using namespace tproduct;
using tproduct::testing::from_matrix;
using tproduct::testing::tube;

TEST_SUITE("reference-oracle") {

TEST_CASE("dft_matrix is unitary up to n") {
    for (std::size_t n = 1; n <= 7; ++n) {
        const Eigen::MatrixXcd f = verify::dft_matrix(n);
        const auto size = static_cast<Eigen::Index>(n);
        CHECK((f.adjoint() * f - static_cast<double>(n) * Eigen::MatrixXcd::Identity(size, size)).norm() <= 1e-12);
        CHECK((f * f.adjoint() - static_cast<double>(n) * Eigen::MatrixXcd::Identity(size, size)).norm() <= 1e-12);
    }
}

TEST_CASE("tprod_naive examples") {
    Rng rng(1);
    const Tensor3 a = random_tensor(Shape{3, 2, 4}, rng);
    const Tensor3 b = random_tensor(Shape{2, 5, 4}, rng);
    CHECK(verify::relative_error(tprod(a, b), verify::tprod_naive(a, b)) <= 1e-10);
    CHECK(verify::tprod_naive(a, teye(2, 4)) == a);

    Eigen::MatrixXd m(2, 2), v(2, 1), expected(2, 1);
    m << 1, 2, 3, 4;
    v << 5, 6;
    expected << 17, 39;
    CHECK(verify::tprod_naive(from_matrix(m), from_matrix(v)) == from_matrix(expected));
    CHECK_THROWS_AS(verify::tprod_naive(a, a), ShapeMismatch);
}

TEST_CASE("tsn_naive and tnn_naive examples") {
    CHECK(verify::tsn_naive(teye(2, 3)) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(verify::tnn_naive(teye(2, 3)) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(verify::tsn_naive(Tensor3(Shape{2, 2, 3})) == 0.0);
    CHECK(verify::tnn_naive(Tensor3(Shape{2, 2, 3})) == 0.0);
}

TEST_CASE("block_diagonalize_naive examples") {
    CHECK((verify::block_diagonalize_naive(teye(2, 2)) - Eigen::MatrixXcd::Identity(4, 4)).norm() <= 1e-15);

    const Tensor3 t = tube({1.0, 2.0, 3.0});
    const Eigen::VectorXcd spectrum = verify::dft_matrix(3) * Eigen::Vector3d(1.0, 2.0, 3.0).cast<Complex>();
    const Eigen::MatrixXcd expected = spectrum.asDiagonal();
    CHECK((verify::block_diagonalize_naive(t) - expected).norm() <= 1e-13);

    Rng rng(2);
    const Tensor3 a = random_tensor(Shape{2, 3, 4}, rng);
    const Eigen::MatrixXcd oracle = verify::block_diagonalize_naive(a);
    CHECK((oracle - bdiag(dft_mode3(a))).norm() <= 1e-10 * oracle.norm());
}

TEST_CASE("block diagonalization holds for all small shapes") {
    Rng rng(3);
    double worst = 0.0;
    for (std::size_t n1 = 1; n1 <= 4; ++n1)
        for (std::size_t n2 = 1; n2 <= 4; ++n2)
            for (std::size_t n3 = 1; n3 <= 4; ++n3) {
                const Tensor3 a = random_tensor(Shape{n1, n2, n3}, rng);
                const Eigen::MatrixXcd oracle = verify::block_diagonalize_naive(a);
                worst = std::max(worst, (oracle - bdiag(dft_mode3(a))).norm() / oracle.norm());
            }
    CHECK(worst <= 1e-10);
}

TEST_CASE("literal and fast DFT agree") {
    Rng rng(4);
    for (std::size_t n3 = 1; n3 <= 9; ++n3) {
        const Tensor3 a = random_tensor(Shape{3, 2, n3}, rng);
        const auto fast = dft_mode3(a);
        const auto slow = verify::dft_mode3_naive(a);
        double worst = 0.0;
        for (std::size_t e = 0; e < fast.size(); ++e) worst = std::max(worst, std::abs(fast.data()[e] - slow.data()[e]));
        CHECK(worst <= 1e-12 * frobenius_norm(a) * static_cast<double>(n3));
        CHECK(verify::imaginary_residue(slow) <= 1e-12 * frobenius_norm(a));
    }
    SpectralTensor3 bad(Shape{1, 1, 2}, {Complex(0.0, 1.0), Complex(0.0, 0.0)});
    CHECK(verify::imaginary_residue(bad) == doctest::Approx(0.5));
}

TEST_CASE("oracles finish quickly at 6x6x6") {
    Rng rng(5);
    const Tensor3 a = random_tensor(Shape{6, 6, 6}, rng);
    const Tensor3 b = random_tensor(Shape{6, 6, 6}, rng);
    for (int op = 0; op < 4; ++op) {
        const auto start = std::chrono::steady_clock::now();
        switch (op) {
            case 0: (void)verify::tprod_naive(a, b); break;
            case 1: (void)verify::tsn_naive(a); break;
            case 2: (void)verify::tnn_naive(a); break;
            default: (void)verify::block_diagonalize_naive(a); break;
        }
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        CHECK(elapsed.count() < 1.0);
    }
}

}
