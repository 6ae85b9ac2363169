#pragma once

#include <tproduct/errors.hpp>

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace tproduct {

using Complex = std::complex<double>;

/// Extents of a 3-way tensor. All three must be at least one.
struct Shape {
    std::size_t n1 = 1;
    std::size_t n2 = 1;
    std::size_t n3 = 1;

    std::size_t size() const { return n1 * n2 * n3; }
    std::size_t slice_size() const { return n1 * n2; }

    friend bool operator==(const Shape&, const Shape&) = default;
};

std::string to_string(const Shape& s);

/// Number of Fourier slices that are computed explicitly in the half-spectrum
/// scheme, ceil((n3 + 1) / 2) == floor(n3 / 2) + 1. The remaining slices are
/// complex conjugates of slices 1 .. n3 - half_spectrum_size(n3).
constexpr std::size_t half_spectrum_size(std::size_t n3) { return n3 / 2 + 1; }

/// Index (zero based) of the slice paired with `k` under conjugate symmetry.
constexpr std::size_t conjugate_partner(std::size_t k, std::size_t n3) {
    return k == 0 ? 0 : n3 - k;
}

namespace detail {

template <typename T>
class DenseTensor3 {
public:
    using value_type = T;
    using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    using SliceMap = Eigen::Map<Matrix>;
    using ConstSliceMap = Eigen::Map<const Matrix>;

    DenseTensor3() = default;

    std::size_t n1() const { return shape_.n1; }
    std::size_t n2() const { return shape_.n2; }
    std::size_t n3() const { return shape_.n3; }
    const Shape& shape() const { return shape_; }
    std::size_t size() const { return data_.size(); }

    // column-major inside a frontal slice, slices contiguous
    std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
        return i + shape_.n1 * (j + shape_.n2 * k);
    }

    const T& operator()(std::size_t i, std::size_t j, std::size_t k) const {
        return data_[index(i, j, k)];
    }
    T& operator()(std::size_t i, std::size_t j, std::size_t k) {
        return data_[index(i, j, k)];
    }

    std::span<const T> data() const { return data_; }
    std::span<T> data() { return data_; }

    /// Frontal slice k (zero based) as an n1 x n2 matrix view.
    ConstSliceMap slice(std::size_t k) const {
        return ConstSliceMap(data_.data() + k * shape_.slice_size(), rows(), cols());
    }
    SliceMap slice(std::size_t k) {
        return SliceMap(data_.data() + k * shape_.slice_size(), rows(), cols());
    }

protected:
    DenseTensor3(Shape shape, std::vector<T> data) : shape_(shape), data_(std::move(data)) {}

    Eigen::Index rows() const { return static_cast<Eigen::Index>(shape_.n1); }
    Eigen::Index cols() const { return static_cast<Eigen::Index>(shape_.n2); }

    Shape shape_;
    std::vector<T> data_;
};

void check_shape(const Shape& shape);

}  // namespace detail

/// Dense real n1 x n2 x n3 tensor in double precision.
///
/// Storage follows the Matlab layout: entry (i, j, k) lives at
/// i + n1 * (j + n2 * k), so each frontal slice is a contiguous column-major
/// matrix and unfold/fold are reinterpretations of the same buffer.
/// Constructors reject NaN and infinite entries.
class Tensor3 : public detail::DenseTensor3<double> {
public:
    Tensor3() : Tensor3(Shape{}) {}
    explicit Tensor3(Shape shape);
    Tensor3(Shape shape, std::vector<double> data);

    static Tensor3 zeros(Shape shape) { return Tensor3(shape); }

    /// Builds a tensor from its frontal slices, which must share one size.
    static Tensor3 from_slices(std::span<const Eigen::MatrixXd> slices);

    Tensor3& operator+=(const Tensor3& other);
    Tensor3& operator-=(const Tensor3& other);
    Tensor3& operator*=(double scale);

    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
    friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }
    friend Tensor3 operator*(Tensor3 a, double s) { return a *= s; }
    friend Tensor3 operator*(double s, Tensor3 a) { return a *= s; }

    friend bool operator==(const Tensor3& a, const Tensor3& b) {
        return a.shape_ == b.shape_ && a.data_ == b.data_;
    }
};

/// Complex image of a tensor under the mode-3 DFT. Frontal slice k holds the
/// k-th Fourier coefficient matrix.
///
/// Spectra of real tensors are conjugate-symmetric: slice 0 is real and slice
/// k is the conjugate of slice n3 - k. The type does not enforce this, since
/// callers may assemble arbitrary spectra; idft_mode3 checks it.
class SpectralTensor3 : public detail::DenseTensor3<Complex> {
public:
    SpectralTensor3() : SpectralTensor3(Shape{}) {}
    explicit SpectralTensor3(Shape shape);
    SpectralTensor3(Shape shape, std::vector<Complex> data);

    /// Largest absolute violation of conjugate symmetry over all entries.
    double symmetry_defect() const;
    bool is_conjugate_symmetric(double abs_tol) const { return symmetry_defect() <= abs_tol; }

    /// Overwrites slices half_spectrum_size(n3) .. n3-1 with the conjugates of
    /// their partners.
    void conjugate_fill();
};

/// Numerical thresholds used by rank, symmetry and invertibility decisions.
class Tolerance {
public:
    static constexpr double kDefaultSymTol = 1e-10;

    /// All three values must be strictly positive.
    Tolerance(double rank_rtol, double sym_tol, double inv_rtol);

    /// rank_rtol = max(n1,n2)*n3*eps, sym_tol = 1e-10, inv_rtol = max(n1,n2)*eps.
    static Tolerance defaults(const Shape& shape);

    /// Singular value i counts toward the rank when it exceeds
    /// rank_rtol times the largest singular value.
    double rank_rtol() const { return rank_rtol_; }
    /// Symmetry bound relative to the Frobenius norm of the real tensor.
    double sym_tol() const { return sym_tol_; }
    /// A spectral slice is singular when its smallest singular value is at most
    /// inv_rtol times the tensor spectral norm.
    double inv_rtol() const { return inv_rtol_; }

    Tolerance with_rank_rtol(double v) const { return {v, sym_tol_, inv_rtol_}; }
    Tolerance with_sym_tol(double v) const { return {rank_rtol_, v, inv_rtol_}; }
    Tolerance with_inv_rtol(double v) const { return {rank_rtol_, sym_tol_, v}; }

private:
    double rank_rtol_;
    double sym_tol_;
    double inv_rtol_;
};

double frobenius_norm(const Tensor3& a);
double frobenius_norm(const SpectralTensor3& a);

/// Sum over frontal slices of trace(A_k^T B_k).
double inner_product(const Tensor3& a, const Tensor3& b);

}  // namespace tproduct
