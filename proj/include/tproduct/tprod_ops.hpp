#pragma once

#include <tproduct/tensor3.hpp>

#include <optional>

namespace tproduct {

/// t-product of an n1 x n2 x n3 tensor with an n2 x l x n3 tensor.
///
/// Computed in the Fourier domain: one complex matrix product per slice for
/// slices 0 .. n3/2, conjugate fill for the rest, then an inverse DFT.
/// Throws ShapeMismatch when the inner dimensions or n3 disagree.
Tensor3 tprod(const Tensor3& a, const Tensor3& b);

/// Conjugate transpose: every frontal slice transposed, slices 2..n3 reversed.
Tensor3 tran(const Tensor3& a);

/// Identity tensor: first frontal slice I_n, all others zero.
Tensor3 teye(std::size_t n, std::size_t n3);

/// Inverse under the t-product.
///
/// Every spectral slice is inverted through its SVD. Throws SingularTensor when
/// some slice has smallest singular value <= tol.inv_rtol() * tsn(a), and
/// ShapeMismatch when the frontal slices are not square.
Tensor3 tinv(const Tensor3& a, const Tolerance& tol);
Tensor3 tinv(const Tensor3& a);

/// Default absolute Frobenius tolerance of the structural predicates,
/// 1e-8 * n * sqrt(n3).
double default_predicate_tol(std::size_t n, std::size_t n3);

/// max(||Q^T * Q - I||_F, ||Q * Q^T - I||_F). Slices must be square.
double orthogonality_residual(const Tensor3& q);

/// True when orthogonality_residual(q) <= tol. Non-square slices are never
/// orthogonal.
bool is_orthogonal(const Tensor3& q, std::optional<double> tol = std::nullopt);

/// Frobenius norm of all off-diagonal entries across frontal slices.
double off_diagonal_norm(const Tensor3& a);
bool is_fdiagonal(const Tensor3& a, std::optional<double> tol = std::nullopt);

/// Largest absolute entry strictly below the diagonal of any frontal slice.
double lower_triangle_max(const Tensor3& a);
bool is_fupper_triangular(const Tensor3& a, double tol);

}  // namespace tproduct
