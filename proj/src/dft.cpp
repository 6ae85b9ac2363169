#include <tproduct/dft.hpp>

#include <fftw3.h>

#include <algorithm>
#include <climits>
#include <cmath>
#include <cstring>
#include <memory>
#include <mutex>

namespace tproduct {

namespace {

// The FFTW planner is not thread safe; execution is.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanDeleter {
    void operator()(fftw_plan p) const {
        std::lock_guard lock(planner_mutex());
        fftw_destroy_plan(p);
    }
};
using Plan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter>;

struct FftwFree {
    void operator()(void* p) const { fftw_free(p); }
};
template <typename T>
using FftwBuffer = std::unique_ptr<T[], FftwFree>;

// fftw_malloc buffers keep alignment, and therefore the selected codelets and
// the rounding, identical from call to call.
FftwBuffer<double> alloc_real(std::size_t n) {
    return FftwBuffer<double>(fftw_alloc_real(std::max<std::size_t>(n, 1)));
}
FftwBuffer<fftw_complex> alloc_complex(std::size_t n) {
    return FftwBuffer<fftw_complex>(fftw_alloc_complex(std::max<std::size_t>(n, 1)));
}

int as_int(std::size_t v) {
    if (v > static_cast<std::size_t>(INT_MAX)) throw InvalidArgument("tensor too large for the FFT backend");
    return static_cast<int>(v);
}

static_assert(sizeof(fftw_complex) == sizeof(Complex));

}  // namespace

SpectralTensor3 dft_mode3(const Tensor3& a) {
    const Shape& shape = a.shape();
    const std::size_t m = shape.slice_size();
    const std::size_t half = half_spectrum_size(shape.n3);

    auto in = alloc_real(shape.size());
    auto out = alloc_complex(m * half);
    std::copy(a.data().begin(), a.data().end(), in.get());

    // Tube (i, j) has stride n1*n2; frequency k of every tube lands contiguously
    // in slice k of the output.
    const int n = as_int(shape.n3);
    Plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan.reset(fftw_plan_many_dft_r2c(1, &n, as_int(m), in.get(), nullptr, as_int(m), 1, out.get(),
                                          nullptr, as_int(m), 1, FFTW_ESTIMATE));
    }
    fftw_execute(plan.get());

    SpectralTensor3 s(shape);
    std::memcpy(static_cast<void*>(s.data().data()), out.get(), m * half * sizeof(Complex));
    // DC (and the Nyquist slice for even n3) are real up to round-off; make
    // them exactly real so the symmetry holds bit for bit.
    for (std::size_t e = 0; e < m; ++e) s.data()[e].imag(0.0);
    if (shape.n3 % 2 == 0)
        for (std::size_t e = 0; e < m; ++e) s.data()[(shape.n3 / 2) * m + e].imag(0.0);
    s.conjugate_fill();
    return s;
}

double symmetry_bound(const SpectralTensor3& s, double sym_rtol) {
    return sym_rtol * frobenius_norm(s) / std::sqrt(static_cast<double>(s.n3()));
}

Tensor3 idft_mode3(const SpectralTensor3& s, double sym_rtol) {
    const double defect = s.symmetry_defect();
    const double bound = symmetry_bound(s, sym_rtol);
    if (!(defect <= bound))
        throw SymmetryViolation("spectrum is not conjugate-symmetric along mode 3 (defect " +
                                std::to_string(defect) + ", bound " + std::to_string(bound) +
                                "); it has no real preimage");

    const Shape& shape = s.shape();
    const std::size_t m = shape.slice_size();
    const std::size_t half = half_spectrum_size(shape.n3);

    auto in = alloc_complex(m * half);
    auto out = alloc_real(shape.size());
    std::memcpy(in.get(), static_cast<const void*>(s.data().data()), m * half * sizeof(Complex));

    const int n = as_int(shape.n3);
    Plan plan;
    {
        std::lock_guard lock(planner_mutex());
        plan.reset(fftw_plan_many_dft_c2r(1, &n, as_int(m), in.get(), nullptr, as_int(m), 1, out.get(),
                                          nullptr, as_int(m), 1, FFTW_ESTIMATE));
    }
    fftw_execute(plan.get());

    const double scale = 1.0 / static_cast<double>(shape.n3);
    std::vector<double> data(out.get(), out.get() + shape.size());
    for (auto& x : data) x *= scale;
    return Tensor3(shape, std::move(data));
}

}  // namespace tproduct
