#include "slice_linalg.hpp"

namespace tproduct::detail {

namespace {

constexpr unsigned kFull = Eigen::ComputeFullU | Eigen::ComputeFullV;

}  // namespace

SliceSvd slice_svd(const SpectralTensor3& s, std::size_t k) {
    if (is_self_conjugate(k, s.n3())) {
        const Eigen::MatrixXd real = s.slice(k).real();
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(real, kFull);
        return {to_complex(svd.matrixU()), svd.singularValues(), to_complex(svd.matrixV())};
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s.slice(k), kFull);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

Eigen::VectorXd slice_singular_values(const SpectralTensor3& s, std::size_t k) {
    // Same factorization as slice_svd so thresholds against these values
    // agree bit for bit with the thresholding in prox_tnn.
    return slice_svd(s, k).sigma;
}

}  // namespace tproduct::detail
