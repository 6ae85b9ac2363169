#include <tproduct/structure.hpp>

namespace tproduct {

Eigen::MatrixXd bcirc(const Tensor3& a) {
    const auto n1 = static_cast<Eigen::Index>(a.n1());
    const auto n2 = static_cast<Eigen::Index>(a.n2());
    const std::size_t n3 = a.n3();
    Eigen::MatrixXd m(n1 * static_cast<Eigen::Index>(n3), n2 * static_cast<Eigen::Index>(n3));
    for (std::size_t r = 0; r < n3; ++r)
        for (std::size_t c = 0; c < n3; ++c)
            m.block(static_cast<Eigen::Index>(r) * n1, static_cast<Eigen::Index>(c) * n2, n1, n2) =
                a.slice((r + n3 - c) % n3);
    return m;
}

Eigen::MatrixXcd bdiag(const SpectralTensor3& s) {
    const auto n1 = static_cast<Eigen::Index>(s.n1());
    const auto n2 = static_cast<Eigen::Index>(s.n2());
    const auto n3 = static_cast<Eigen::Index>(s.n3());
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n1 * n3, n2 * n3);
    for (Eigen::Index k = 0; k < n3; ++k)
        m.block(k * n1, k * n2, n1, n2) = s.slice(static_cast<std::size_t>(k));
    return m;
}

Eigen::MatrixXd unfold(const Tensor3& a) {
    const auto n1 = static_cast<Eigen::Index>(a.n1());
    Eigen::MatrixXd m(n1 * static_cast<Eigen::Index>(a.n3()), static_cast<Eigen::Index>(a.n2()));
    for (std::size_t k = 0; k < a.n3(); ++k) m.middleRows(static_cast<Eigen::Index>(k) * n1, n1) = a.slice(k);
    return m;
}

Tensor3 fold(const Eigen::MatrixXd& m, const Shape& shape) {
    detail::check_shape(shape);
    if (static_cast<std::size_t>(m.rows()) != shape.n1 * shape.n3 ||
        static_cast<std::size_t>(m.cols()) != shape.n2)
        throw ShapeMismatch("fold: a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            " matrix cannot be folded into " + to_string(shape));
    // m is n1*n3 x n2 column-major; slice k occupies rows k*n1 .. (k+1)*n1-1.
    Tensor3 t(shape);
    for (std::size_t k = 0; k < shape.n3; ++k)
        t.slice(k) = m.middleRows(static_cast<Eigen::Index>(k * shape.n1), static_cast<Eigen::Index>(shape.n1));
    return t;
}

}  // namespace tproduct
