#include <tproduct/tprod_ops.hpp>

#include <tproduct/dft.hpp>

#include "slice_linalg.hpp"

#include <algorithm>
#include <cmath>

namespace tproduct {

Tensor3 tprod(const Tensor3& a, const Tensor3& b) {
    if (a.n2() != b.n1() || a.n3() != b.n3())
        throw ShapeMismatch("tprod: cannot multiply " + to_string(a.shape()) + " by " +
                            to_string(b.shape()));
    const SpectralTensor3 a_hat = dft_mode3(a);
    const SpectralTensor3 b_hat = dft_mode3(b);
    SpectralTensor3 c_hat(Shape{a.n1(), b.n2(), a.n3()});
    for (std::size_t k = 0; k < half_spectrum_size(a.n3()); ++k)
        c_hat.slice(k).noalias() = a_hat.slice(k) * b_hat.slice(k);
    c_hat.conjugate_fill();
    return idft_mode3(c_hat);
}

Tensor3 tran(const Tensor3& a) {
    const std::size_t n3 = a.n3();
    Tensor3 t(Shape{a.n2(), a.n1(), n3});
    for (std::size_t k = 0; k < n3; ++k) t.slice(k) = a.slice(conjugate_partner(k, n3)).transpose();
    return t;
}

Tensor3 teye(std::size_t n, std::size_t n3) {
    Tensor3 t(Shape{n, n, n3});
    t.slice(0).setIdentity();
    return t;
}

Tensor3 tinv(const Tensor3& a, const Tolerance& tol) {
    if (a.n1() != a.n2())
        throw ShapeMismatch("tinv: frontal slices must be square, got " + to_string(a.shape()));
    const std::size_t n3 = a.n3();
    const std::size_t half = half_spectrum_size(n3);
    const SpectralTensor3 a_hat = dft_mode3(a);

    std::vector<detail::SliceSvd> svds;
    svds.reserve(half);
    double spectral_norm = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
        svds.push_back(detail::slice_svd(a_hat, k));
        spectral_norm = std::max(spectral_norm, svds.back().sigma(0));
    }

    const double threshold = tol.inv_rtol() * spectral_norm;
    SpectralTensor3 inv_hat(a.shape());
    for (std::size_t k = 0; k < half; ++k) {
        const auto& [u, sigma, v] = svds[k];
        const double smallest = sigma(sigma.size() - 1);
        if (!(smallest > threshold))
            throw SingularTensor("tinv: spectral slice " + std::to_string(k + 1) +
                                 " is singular (smallest singular value " + std::to_string(smallest) +
                                 ", threshold " + std::to_string(threshold) + ")");
        inv_hat.slice(k).noalias() = v * sigma.cwiseInverse().asDiagonal() * u.adjoint();
    }
    inv_hat.conjugate_fill();
    return idft_mode3(inv_hat, tol.sym_tol());
}

Tensor3 tinv(const Tensor3& a) { return tinv(a, Tolerance::defaults(a.shape())); }

double default_predicate_tol(std::size_t n, std::size_t n3) {
    return 1e-8 * static_cast<double>(n) * std::sqrt(static_cast<double>(n3));
}

double orthogonality_residual(const Tensor3& q) {
    if (q.n1() != q.n2())
        throw ShapeMismatch("orthogonality_residual: frontal slices must be square, got " +
                            to_string(q.shape()));
    const Tensor3 eye = teye(q.n1(), q.n3());
    const Tensor3 qt = tran(q);
    return std::max(frobenius_norm(tprod(qt, q) - eye), frobenius_norm(tprod(q, qt) - eye));
}

bool is_orthogonal(const Tensor3& q, std::optional<double> tol) {
    if (q.n1() != q.n2()) return false;
    return orthogonality_residual(q) <= tol.value_or(default_predicate_tol(q.n1(), q.n3()));
}

double off_diagonal_norm(const Tensor3& a) {
    double sq = 0.0;
    for (std::size_t k = 0; k < a.n3(); ++k)
        for (std::size_t j = 0; j < a.n2(); ++j)
            for (std::size_t i = 0; i < a.n1(); ++i)
                if (i != j) sq += a(i, j, k) * a(i, j, k);
    return std::sqrt(sq);
}

bool is_fdiagonal(const Tensor3& a, std::optional<double> tol) {
    return off_diagonal_norm(a) <= tol.value_or(default_predicate_tol(std::max(a.n1(), a.n2()), a.n3()));
}

double lower_triangle_max(const Tensor3& a) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.n3(); ++k)
        for (std::size_t j = 0; j < a.n2(); ++j)
            for (std::size_t i = j + 1; i < a.n1(); ++i) worst = std::max(worst, std::abs(a(i, j, k)));
    return worst;
}

bool is_fupper_triangular(const Tensor3& a, double tol) { return lower_triangle_max(a) <= tol; }

}  // namespace tproduct
