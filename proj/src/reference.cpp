#include <tproduct/reference.hpp>

#include <tproduct/structure.hpp>

#include <cmath>
#include <numbers>

namespace tproduct::verify {

namespace {

Eigen::MatrixXcd kron_identity(const Eigen::MatrixXcd& f, Eigen::Index n) {
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(f.rows() * n, f.cols() * n);
    for (Eigen::Index r = 0; r < f.rows(); ++r)
        for (Eigen::Index c = 0; c < f.cols(); ++c)
            out.block(r * n, c * n, n, n) = f(r, c) * Eigen::MatrixXcd::Identity(n, n);
    return out;
}

}  // namespace

Eigen::MatrixXcd dft_matrix(std::size_t n) {
    const auto size = static_cast<Eigen::Index>(n);
    Eigen::MatrixXcd f(size, size);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
            // reduce the exponent first so the angle stays in [0, 2*pi)
            const double angle = -2.0 * std::numbers::pi * static_cast<double>((j * k) % n) / static_cast<double>(n);
            f(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) = std::polar(1.0, angle);
        }
    return f;
}

Tensor3 tprod_naive(const Tensor3& a, const Tensor3& b) {
    if (a.n2() != b.n1() || a.n3() != b.n3())
        throw ShapeMismatch("tprod_naive: cannot multiply " + to_string(a.shape()) + " by " +
                            to_string(b.shape()));
    const Eigen::MatrixXd product = bcirc(a) * unfold(b);
    return fold(product, Shape{a.n1(), b.n2(), a.n3()});
}

double tsn_naive(const Tensor3& a) {
    return Eigen::JacobiSVD<Eigen::MatrixXd>(bcirc(a)).singularValues()(0);
}

double tnn_naive(const Tensor3& a) {
    return Eigen::JacobiSVD<Eigen::MatrixXd>(bcirc(a)).singularValues().sum() / static_cast<double>(a.n3());
}

Eigen::MatrixXcd block_diagonalize_naive(const Tensor3& a) {
    const Eigen::MatrixXcd f = dft_matrix(a.n3());
    const Eigen::MatrixXcd f_inv = f.adjoint() / static_cast<double>(a.n3());
    const Eigen::MatrixXcd left = kron_identity(f, static_cast<Eigen::Index>(a.n1()));
    const Eigen::MatrixXcd right = kron_identity(f_inv, static_cast<Eigen::Index>(a.n2()));
    return left * bcirc(a).cast<Complex>() * right;
}

SpectralTensor3 dft_mode3_naive(const Tensor3& a) {
    const std::size_t n3 = a.n3();
    const Eigen::MatrixXcd f = dft_matrix(n3);
    SpectralTensor3 s(a.shape());
    for (std::size_t k = 0; k < n3; ++k)
        for (std::size_t j = 0; j < n3; ++j)
            s.slice(k) += f(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) * a.slice(j).cast<Complex>();
    return s;
}

double imaginary_residue(const SpectralTensor3& s) {
    const std::size_t n3 = s.n3();
    const Eigen::MatrixXcd f_inv = dft_matrix(n3).adjoint() / static_cast<double>(n3);
    double worst = 0.0;
    for (std::size_t j = 0; j < n3; ++j) {
        Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(s.n1()), static_cast<Eigen::Index>(s.n2()));
        for (std::size_t k = 0; k < n3; ++k)
            x += f_inv(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) * s.slice(k);
        worst = std::max(worst, x.imag().cwiseAbs().maxCoeff());
    }
    return worst;
}

double relative_error(const Tensor3& x, const Tensor3& ref) {
    const double diff = frobenius_norm(x - ref);
    const double scale = frobenius_norm(ref);
    return scale > 0.0 ? diff / scale : diff;
}

}  // namespace tproduct::verify
