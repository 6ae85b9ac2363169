#include <tproduct/verify_suite.hpp>

#include <tproduct/dft.hpp>
#include <tproduct/factorizations.hpp>
#include <tproduct/norms_prox.hpp>
#include <tproduct/random.hpp>
#include <tproduct/reference.hpp>
#include <tproduct/structure.hpp>
#include <tproduct/tprod_ops.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace tproduct::verify {

namespace {

double rel_scalar(double x, double ref) {
    const double diff = std::abs(x - ref);
    return std::abs(ref) > 0.0 ? diff / std::abs(ref) : diff;
}

double rel_matrix(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& ref) {
    const double diff = (x - ref).norm();
    const double scale = ref.norm();
    return scale > 0.0 ? diff / scale : diff;
}

double rel_spectrum(const SpectralTensor3& x, const SpectralTensor3& ref) {
    const auto n = static_cast<Eigen::Index>(x.size());
    const Eigen::Map<const Eigen::VectorXcd> xv(x.data().data(), n);
    const Eigen::Map<const Eigen::VectorXcd> rv(ref.data().data(), n);
    return rel_matrix(xv, rv);
}

double ordering_violations(const std::vector<double>& sv) {
    double count = 0.0;
    for (std::size_t i = 0; i < sv.size(); ++i) {
        if (sv[i] < 0.0) count += 1.0;
        if (i + 1 < sv.size() && sv[i] < sv[i + 1]) count += 1.0;
    }
    return count;
}

struct Check {
    const char* name;
    double threshold;
    std::function<double(const Tensor3&, const Tensor3&)> run;
};

const std::vector<Check>& checks() {
    static const std::vector<Check> all{
        {"dft_round_trip", 1e-12,
         [](const Tensor3& a, const Tensor3&) { return relative_error(idft_mode3(dft_mode3(a)), a); }},
        {"dft_vs_dft_matrix", 1e-10,
         [](const Tensor3& a, const Tensor3&) { return rel_spectrum(dft_mode3(a), dft_mode3_naive(a)); }},
        {"block_diagonalization", 1e-10,
         [](const Tensor3& a, const Tensor3&) {
             return rel_matrix(bdiag(dft_mode3(a)), block_diagonalize_naive(a));
         }},
        {"tprod_vs_bcirc", 1e-10,
         [](const Tensor3& a, const Tensor3& b) { return relative_error(tprod(a, b), tprod_naive(a, b)); }},
        {"tsn_vs_bcirc", 1e-10, [](const Tensor3& a, const Tensor3&) { return rel_scalar(tsn(a), tsn_naive(a)); }},
        {"tnn_vs_bcirc", 1e-10, [](const Tensor3& a, const Tensor3&) { return rel_scalar(tnn(a), tnn_naive(a)); }},
        {"tsvd_reconstruction", 1e-9,
         [](const Tensor3& a, const Tensor3&) {
             const auto f = tsvd(a);
             return relative_error(tprod(tprod(f.u, f.s), tran(f.v)), a);
         }},
        {"tsvd_orthogonality", 1e-8,
         [](const Tensor3& a, const Tensor3&) {
             const auto f = tsvd(a);
             return std::max(orthogonality_residual(f.u), orthogonality_residual(f.v));
         }},
        {"tsvd_fdiagonal", 1e-10, [](const Tensor3& a, const Tensor3&) { return off_diagonal_norm(tsvd(a).s); }},
        {"singular_value_ordering", 0.0,
         [](const Tensor3& a, const Tensor3&) { return ordering_violations(singular_values(a)); }},
        {"tqr_reconstruction", 1e-10,
         [](const Tensor3& a, const Tensor3&) {
             const auto f = tqr(a);
             return relative_error(tprod(f.q, f.r), a);
         }},
        {"tqr_orthogonality", 1e-8, [](const Tensor3& a, const Tensor3&) { return orthogonality_residual(tqr(a).q); }},
        {"tqr_upper_triangular", 1e-10, [](const Tensor3& a, const Tensor3&) { return lower_triangle_max(tqr(a).r); }},
    };
    return all;
}

}  // namespace

std::vector<CheckResult> run_verify(const VerifyOptions& options) {
    std::vector<std::pair<Tensor3, Tensor3>> inputs;
    Rng rng(options.seed);
    if (options.a) {
        const Tensor3& a = *options.a;
        Tensor3 b = options.b ? *options.b : random_tensor(Shape{a.n2(), options.l, a.n3()}, rng);
        inputs.emplace_back(a, std::move(b));
    }
    for (std::size_t t = 0; t < options.trials; ++t) {
        Tensor3 a = random_tensor(options.dims, rng);
        Tensor3 b = random_tensor(Shape{options.dims.n2, options.l, options.dims.n3}, rng);
        inputs.emplace_back(std::move(a), std::move(b));
    }

    std::vector<CheckResult> results;
    for (const auto& check : checks()) {
        CheckResult r{check.name, 0.0, check.threshold};
        for (const auto& [a, b] : inputs) {
            const double e = check.run(a, b);
            // NaN must fail
            r.worst = std::isnan(e) ? e : std::max(r.worst, e);
            if (std::isnan(r.worst)) break;
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace tproduct::verify
