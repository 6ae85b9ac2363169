#include <tproduct/norms_prox.hpp>

#include <tproduct/dft.hpp>
#include <tproduct/factorizations.hpp>

#include "slice_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace tproduct {

double tsn(const Tensor3& a) {
    const SpectralTensor3 a_hat = dft_mode3(a);
    double norm = 0.0;
    for (std::size_t k = 0; k < half_spectrum_size(a.n3()); ++k)
        norm = std::max(norm, detail::slice_singular_values(a_hat, k)(0));
    return norm;
}

double tnn(const Tensor3& a) {
    const auto sv = singular_values(a);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

SpectralTensor3 prox_tnn_spectral(const Tensor3& y, double tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau))
        throw InvalidTau("prox_tnn: tau must be a finite nonnegative number, got " + std::to_string(tau));
    const SpectralTensor3 y_hat = dft_mode3(y);
    SpectralTensor3 w_hat(y.shape());
    for (std::size_t k = 0; k < half_spectrum_size(y.n3()); ++k) {
        const auto [u, sigma, v] = detail::slice_svd(y_hat, k);
        const Eigen::VectorXd shrunk = (sigma.array() - tau).max(0.0);
        const Eigen::Index r = shrunk.size();
        w_hat.slice(k).noalias() = u.leftCols(r) * shrunk.asDiagonal() * v.leftCols(r).adjoint();
    }
    w_hat.conjugate_fill();
    return w_hat;
}

Tensor3 prox_tnn(const Tensor3& y, double tau) {
    if (tau == 0.0) return y;  // prox of the zero function
    return idft_mode3(prox_tnn_spectral(y, tau));
}

}  // namespace tproduct
