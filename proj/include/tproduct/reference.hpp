#pragma once

// Slow reference implementations. Nothing in here calls the FFT: transforms
// use the literal DFT matrix and products go through explicit bcirc matrices.
// Meant for verification on small inputs (all dims <= ~6).

#include <tproduct/tensor3.hpp>

namespace tproduct::verify {

/// The n x n DFT matrix F_n with entries exp(-2*pi*i*j*k/n).
Eigen::MatrixXcd dft_matrix(std::size_t n);

/// fold(bcirc(a) * unfold(b)).
Tensor3 tprod_naive(const Tensor3& a, const Tensor3& b);

/// Largest singular value of the dense bcirc(a).
double tsn_naive(const Tensor3& a);

/// (1/n3) times the sum of the singular values of the dense bcirc(a).
double tnn_naive(const Tensor3& a);

/// (F_n3 kron I_n1) * bcirc(a) * (F_n3^-1 kron I_n2), formed densely.
Eigen::MatrixXcd block_diagonalize_naive(const Tensor3& a);

/// Mode-3 DFT by multiplying every tube with dft_matrix(n3).
SpectralTensor3 dft_mode3_naive(const Tensor3& a);

/// Largest |imag| of the entries of the inverse mode-3 DFT of s, computed with
/// the literal inverse DFT matrix and without discarding anything.
double imaginary_residue(const SpectralTensor3& s);

/// ||x - ref||_F / ||ref||_F, or ||x||_F when ref is zero.
double relative_error(const Tensor3& x, const Tensor3& ref);

}  // namespace tproduct::verify
