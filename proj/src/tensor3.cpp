#include <tproduct/tensor3.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tproduct {

std::string to_string(const Shape& s) {
    return std::to_string(s.n1) + "x" + std::to_string(s.n2) + "x" + std::to_string(s.n3);
}

namespace detail {

void check_shape(const Shape& shape) {
    if (shape.n1 == 0 || shape.n2 == 0 || shape.n3 == 0)
        throw InvalidArgument("tensor extents must be positive, got " + to_string(shape));
}

}  // namespace detail

namespace {

void require_same_shape(const Shape& a, const Shape& b, const char* what) {
    if (a != b)
        throw ShapeMismatch(std::string(what) + ": shapes " + to_string(a) + " and " + to_string(b) +
                            " differ");
}

}  // namespace

Tensor3::Tensor3(Shape shape) : DenseTensor3(shape, {}) {
    detail::check_shape(shape);
    data_.assign(shape.size(), 0.0);
}

Tensor3::Tensor3(Shape shape, std::vector<double> data) : DenseTensor3(shape, std::move(data)) {
    detail::check_shape(shape);
    if (data_.size() != shape.size())
        throw InvalidArgument("tensor " + to_string(shape) + " needs " + std::to_string(shape.size()) +
                              " entries, got " + std::to_string(data_.size()));
    if (!std::all_of(data_.begin(), data_.end(), [](double x) { return std::isfinite(x); }))
        throw InvalidArgument("tensor entries must be finite");
}

Tensor3 Tensor3::from_slices(std::span<const Eigen::MatrixXd> slices) {
    if (slices.empty()) throw InvalidArgument("from_slices: no slices");
    const Shape shape{static_cast<std::size_t>(slices.front().rows()),
                      static_cast<std::size_t>(slices.front().cols()), slices.size()};
    std::vector<double> data;
    data.reserve(shape.size());
    for (const auto& m : slices) {
        if (static_cast<std::size_t>(m.rows()) != shape.n1 ||
            static_cast<std::size_t>(m.cols()) != shape.n2)
            throw ShapeMismatch("from_slices: frontal slices differ in size");
        data.insert(data.end(), m.data(), m.data() + m.size());
    }
    return Tensor3(shape, std::move(data));
}

Tensor3& Tensor3::operator+=(const Tensor3& other) {
    require_same_shape(shape_, other.shape_, "tensor addition");
    std::transform(data_.begin(), data_.end(), other.data_.begin(), data_.begin(), std::plus<>{});
    return *this;
}

Tensor3& Tensor3::operator-=(const Tensor3& other) {
    require_same_shape(shape_, other.shape_, "tensor subtraction");
    std::transform(data_.begin(), data_.end(), other.data_.begin(), data_.begin(), std::minus<>{});
    return *this;
}

Tensor3& Tensor3::operator*=(double scale) {
    for (auto& x : data_) x *= scale;
    return *this;
}

SpectralTensor3::SpectralTensor3(Shape shape) : DenseTensor3(shape, {}) {
    detail::check_shape(shape);
    data_.assign(shape.size(), Complex{});
}

SpectralTensor3::SpectralTensor3(Shape shape, std::vector<Complex> data)
    : DenseTensor3(shape, std::move(data)) {
    detail::check_shape(shape);
    if (data_.size() != shape.size())
        throw InvalidArgument("spectral tensor " + to_string(shape) + " needs " +
                              std::to_string(shape.size()) + " entries, got " +
                              std::to_string(data_.size()));
}

double SpectralTensor3::symmetry_defect() const {
    const std::size_t m = shape_.slice_size();
    double defect = 0.0;
    for (std::size_t e = 0; e < m; ++e) defect = std::max(defect, std::abs(data_[e].imag()));
    for (std::size_t k = 1; k < shape_.n3; ++k) {
        const Complex* lhs = data_.data() + k * m;
        const Complex* rhs = data_.data() + conjugate_partner(k, shape_.n3) * m;
        for (std::size_t e = 0; e < m; ++e) defect = std::max(defect, std::abs(lhs[e] - std::conj(rhs[e])));
    }
    return defect;
}

void SpectralTensor3::conjugate_fill() {
    const std::size_t m = shape_.slice_size();
    for (std::size_t k = half_spectrum_size(shape_.n3); k < shape_.n3; ++k) {
        const Complex* src = data_.data() + conjugate_partner(k, shape_.n3) * m;
        std::transform(src, src + m, data_.data() + k * m, [](Complex z) { return std::conj(z); });
    }
}

Tolerance::Tolerance(double rank_rtol, double sym_tol, double inv_rtol)
    : rank_rtol_(rank_rtol), sym_tol_(sym_tol), inv_rtol_(inv_rtol) {
    const auto ok = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!ok(rank_rtol) || !ok(sym_tol) || !ok(inv_rtol))
        throw InvalidArgument("tolerances must be finite and strictly positive");
}

Tolerance Tolerance::defaults(const Shape& shape) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const auto n = static_cast<double>(std::max(shape.n1, shape.n2));
    return {n * static_cast<double>(shape.n3) * eps, kDefaultSymTol, n * eps};
}

double frobenius_norm(const Tensor3& a) {
    const auto d = a.data();
    return Eigen::Map<const Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size())).norm();
}

double frobenius_norm(const SpectralTensor3& a) {
    const auto d = a.data();
    return Eigen::Map<const Eigen::VectorXcd>(d.data(), static_cast<Eigen::Index>(d.size())).norm();
}

double inner_product(const Tensor3& a, const Tensor3& b) {
    require_same_shape(a.shape(), b.shape(), "inner_product");
    const auto x = a.data();
    const auto y = b.data();
    return std::inner_product(x.begin(), x.end(), y.begin(), 0.0);
}

}  // namespace tproduct
