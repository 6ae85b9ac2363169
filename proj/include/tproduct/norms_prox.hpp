#pragma once

#include <tproduct/tensor3.hpp>

namespace tproduct {

/// Tensor spectral norm ||bcirc(A)||: the largest singular value over all
/// spectral slices.
double tsn(const Tensor3& a);

/// Tensor nuclear norm: sum of the diagonal of S(:,:,1) from the t-SVD, which
/// is (1/n3) times the nuclear norm of bdiag(dft_mode3(A)).
double tnn(const Tensor3& a);

/// Spectral image of prox_tnn(y, tau), before the inverse DFT.
SpectralTensor3 prox_tnn_spectral(const Tensor3& y, double tau);

/// Proximal operator of tau * tnn at y (tensor singular value thresholding).
///
/// Each spectral slice 0 .. n3/2 is replaced by U * max(S - tau, 0) * V^H and
/// the rest are conjugate filled. tau == 0 returns y unchanged; tau < 0 throws
/// InvalidTau.
Tensor3 prox_tnn(const Tensor3& y, double tau);

}  // namespace tproduct
