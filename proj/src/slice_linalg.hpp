#pragma once

// Per-slice helpers shared by the Fourier-domain algorithms.

#include <tproduct/tensor3.hpp>

namespace tproduct::detail {

/// Slices 0 and n3/2 (even n3) of the spectrum of a real tensor are real.
constexpr bool is_self_conjugate(std::size_t k, std::size_t n3) { return k == 0 || 2 * k == n3; }

struct SliceSvd {
    Eigen::MatrixXcd u;
    Eigen::VectorXd sigma;
    Eigen::MatrixXcd v;
};

/// Full SVD of spectral slice k. Self-conjugate slices go through a real SVD of
/// the real part so their factors stay real.
SliceSvd slice_svd(const SpectralTensor3& s, std::size_t k);

/// Singular values only, same real/complex routing as slice_svd.
Eigen::VectorXd slice_singular_values(const SpectralTensor3& s, std::size_t k);

/// Entry-wise copy of a real matrix into a complex one.
inline Eigen::MatrixXcd to_complex(const Eigen::MatrixXd& m) { return m.cast<Complex>(); }

}  // namespace tproduct::detail
