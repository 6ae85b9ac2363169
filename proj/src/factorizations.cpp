#include <tproduct/factorizations.hpp>

#include <tproduct/dft.hpp>

#include "slice_linalg.hpp"

#include <algorithm>

namespace tproduct {

namespace {

// Mean over all n3 spectral slices of the per-slice singular values, using
// only the explicitly computed half: non-self-conjugate slices count twice
// because their partners share singular values. Each partial sum is a sum of
// nonincreasing sequences, so the result is nonincreasing after rounding too.
std::vector<double> average_singular_values(const std::vector<Eigen::VectorXd>& half_sigmas,
                                            std::size_t n3) {
    const auto len = half_sigmas.front().size();
    std::vector<double> avg(static_cast<std::size_t>(len), 0.0);
    for (std::size_t k = 0; k < half_sigmas.size(); ++k) {
        const double weight = detail::is_self_conjugate(k, n3) ? 1.0 : 2.0;
        for (Eigen::Index i = 0; i < len; ++i) avg[static_cast<std::size_t>(i)] += weight * half_sigmas[k](i);
    }
    for (auto& x : avg) x /= static_cast<double>(n3);
    return avg;
}

struct SpectralTSvdWithSigmas {
    SpectralTSvd factors;
    std::vector<Eigen::VectorXd> sigmas;
};

SpectralTSvdWithSigmas compute_tsvd_spectral(const Tensor3& a) {
    const std::size_t n1 = a.n1(), n2 = a.n2(), n3 = a.n3();
    const SpectralTensor3 a_hat = dft_mode3(a);
    SpectralTSvdWithSigmas out{
        {SpectralTensor3(Shape{n1, n1, n3}), SpectralTensor3(Shape{n1, n2, n3}), SpectralTensor3(Shape{n2, n2, n3})},
        {}};
    auto& [u_hat, s_hat, v_hat] = out.factors;
    for (std::size_t k = 0; k < half_spectrum_size(n3); ++k) {
        auto svd = detail::slice_svd(a_hat, k);
        u_hat.slice(k) = svd.u;
        v_hat.slice(k) = svd.v;
        auto s_slice = s_hat.slice(k);
        for (Eigen::Index i = 0; i < svd.sigma.size(); ++i) s_slice(i, i) = svd.sigma(i);
        out.sigmas.push_back(std::move(svd.sigma));
    }
    u_hat.conjugate_fill();
    s_hat.conjugate_fill();
    v_hat.conjugate_fill();
    return out;
}

std::vector<Eigen::VectorXd> half_spectrum_sigmas(const Tensor3& a) {
    const SpectralTensor3 a_hat = dft_mode3(a);
    std::vector<Eigen::VectorXd> sigmas;
    for (std::size_t k = 0; k < half_spectrum_size(a.n3()); ++k)
        sigmas.push_back(detail::slice_singular_values(a_hat, k));
    return sigmas;
}

}  // namespace

SpectralTSvd tsvd_spectral(const Tensor3& a) { return compute_tsvd_spectral(a).factors; }

TSvdFactors tsvd(const Tensor3& a) {
    const auto [spectral, sigmas] = compute_tsvd_spectral(a);
    TSvdFactors f{idft_mode3(spectral.u), idft_mode3(spectral.s), idft_mode3(spectral.v)};
    const auto diag = average_singular_values(sigmas, a.n3());
    for (std::size_t i = 0; i < diag.size(); ++i) f.s(i, i, 0) = diag[i];
    return f;
}

Eigen::MatrixXd spectral_singular_values(const Tensor3& a) {
    const std::size_t n3 = a.n3();
    const auto sigmas = half_spectrum_sigmas(a);
    Eigen::MatrixXd out(sigmas.front().size(), static_cast<Eigen::Index>(n3));
    for (std::size_t k = 0; k < n3; ++k)
        out.col(static_cast<Eigen::Index>(k)) = sigmas[std::min(k, conjugate_partner(k, n3))];
    return out;
}

std::vector<double> singular_values(const Tensor3& a) {
    return average_singular_values(half_spectrum_sigmas(a), a.n3());
}

std::size_t tubal_rank(const Tensor3& a, const Tolerance& tol) {
    const auto sv = singular_values(a);
    if (sv.empty() || sv.front() == 0.0) return 0;
    const double threshold = tol.rank_rtol() * sv.front();
    return static_cast<std::size_t>(std::count_if(sv.begin(), sv.end(), [&](double s) { return s > threshold; }));
}

std::size_t tubal_rank(const Tensor3& a) { return tubal_rank(a, Tolerance::defaults(a.shape())); }

SpectralTQr tqr_spectral(const Tensor3& a) {
    const std::size_t n1 = a.n1(), n2 = a.n2(), n3 = a.n3();
    const auto rows = static_cast<Eigen::Index>(n1);
    const SpectralTensor3 a_hat = dft_mode3(a);
    SpectralTQr out{SpectralTensor3(Shape{n1, n1, n3}), SpectralTensor3(Shape{n1, n2, n3})};
    for (std::size_t k = 0; k < half_spectrum_size(n3); ++k) {
        if (detail::is_self_conjugate(k, n3)) {
            const Eigen::MatrixXd slice = a_hat.slice(k).real();
            Eigen::HouseholderQR<Eigen::MatrixXd> qr(slice);
            const Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(rows, rows);
            const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
            out.q.slice(k) = detail::to_complex(q);
            out.r.slice(k) = detail::to_complex(r);
        } else {
            Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a_hat.slice(k));
            out.q.slice(k) = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, rows);
            out.r.slice(k) = qr.matrixQR().triangularView<Eigen::Upper>();
        }
    }
    out.q.conjugate_fill();
    out.r.conjugate_fill();
    return out;
}

TQrFactors tqr(const Tensor3& a) {
    const auto spectral = tqr_spectral(a);
    return {idft_mode3(spectral.q), idft_mode3(spectral.r)};
}

}  // namespace tproduct
