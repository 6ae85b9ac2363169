#pragma once

#include <tproduct/tensor3.hpp>

namespace tproduct {

/// Unnormalized DFT of every tube A(i,j,:) with root exp(-2*pi*i/n3).
///
/// Only slices 0 .. n3/2 are transformed; the rest are filled by conjugation,
/// so the result is exactly conjugate-symmetric.
SpectralTensor3 dft_mode3(const Tensor3& a);

/// Inverse of dft_mode3, including the 1/n3 factor.
///
/// Throws SymmetryViolation when s.symmetry_defect() exceeds
/// sym_rtol * ||s||_F / sqrt(n3), i.e. sym_rtol times the Frobenius norm of the
/// real tensor the spectrum would map to.
Tensor3 idft_mode3(const SpectralTensor3& s, double sym_rtol = Tolerance::kDefaultSymTol);

/// Absolute symmetry bound idft_mode3 applies to `s`.
double symmetry_bound(const SpectralTensor3& s, double sym_rtol);

}  // namespace tproduct
