#pragma once

#include <tproduct/tensor3.hpp>

namespace tproduct {

/// Block circulant matrix of size n1*n3 x n2*n3. Block (r, c) is frontal
/// slice (r - c) mod n3. Dense, O(n1*n2*n3^2) memory.
Eigen::MatrixXd bcirc(const Tensor3& a);

/// Block diagonal matrix with the spectral slices on the diagonal.
/// Dense, O(n1*n2*n3^2) memory.
Eigen::MatrixXcd bdiag(const SpectralTensor3& s);

/// Frontal slices stacked vertically: an n1*n3 x n2 matrix.
Eigen::MatrixXd unfold(const Tensor3& a);

/// Inverse of unfold. `m.rows()` must equal shape.n1 * shape.n3 and
/// `m.cols()` must equal shape.n2.
Tensor3 fold(const Eigen::MatrixXd& m, const Shape& shape);

}  // namespace tproduct
