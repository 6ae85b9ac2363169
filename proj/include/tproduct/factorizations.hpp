#pragma once

#include <tproduct/tensor3.hpp>

#include <vector>

namespace tproduct {

/// A = U * S * V^T with U (n1 x n1 x n3) and V (n2 x n2 x n3) orthogonal and
/// S (n1 x n2 x n3) f-diagonal.
struct TSvdFactors {
    Tensor3 u;
    Tensor3 s;
    Tensor3 v;
};

/// A = Q * R with Q (n1 x n1 x n3) orthogonal and every frontal slice of
/// R (n1 x n2 x n3) upper triangular.
struct TQrFactors {
    Tensor3 q;
    Tensor3 r;
};

/// Fourier-domain factors before the inverse DFT.
struct SpectralTSvd {
    SpectralTensor3 u;
    SpectralTensor3 s;
    SpectralTensor3 v;
};

struct SpectralTQr {
    SpectralTensor3 q;
    SpectralTensor3 r;
};

/// Full SVD of each spectral slice 0 .. n3/2, conjugate fill of the rest.
/// Slices that are real for real input (0, and n3/2 for even n3) are factored
/// with a real SVD so that the fill stays exactly conjugate-symmetric.
SpectralTSvd tsvd_spectral(const Tensor3& a);

/// t-SVD. No sign or phase canonicalization is applied to U and V.
///
/// The diagonal of S(:,:,1) is written from the averaged spectral singular
/// values, so it is nonincreasing exactly and equals singular_values(a).
TSvdFactors tsvd(const Tensor3& a);

/// min(n1,n2) x n3 matrix whose column k holds the singular values of spectral
/// slice k in nonincreasing order.
Eigen::MatrixXd spectral_singular_values(const Tensor3& a);

/// Diagonal of S(:,:,1), computed as the mean over the spectral slices of the
/// per-slice singular values, without forming U or V. Nonincreasing and
/// nonnegative; length min(n1,n2).
std::vector<double> singular_values(const Tensor3& a);

/// Number of singular values above tol.rank_rtol() times the largest one.
std::size_t tubal_rank(const Tensor3& a, const Tolerance& tol);
std::size_t tubal_rank(const Tensor3& a);

SpectralTQr tqr_spectral(const Tensor3& a);

/// t-QR through a full Householder QR of each spectral slice.
TQrFactors tqr(const Tensor3& a);

}  // namespace tproduct
