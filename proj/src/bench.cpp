#include <tproduct/bench.hpp>

#include <tproduct/reference.hpp>
#include <tproduct/tprod_ops.hpp>

#include <algorithm>
#include <chrono>
#include <limits>
#include <ostream>

namespace tproduct::bench {

namespace {

template <typename F>
double best_seconds(std::size_t repeats, F&& f) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < std::max<std::size_t>(repeats, 1); ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        best = std::min(best, elapsed.count());
    }
    return best;
}

}  // namespace

BenchReport run_case(const BenchCase& c, std::size_t repeats, Rng& rng) {
    const Tensor3 a = random_tensor(Shape{c.n1, c.n2, c.n3}, rng);
    const Tensor3 b = random_tensor(Shape{c.n2, c.l, c.n3}, rng);

    Tensor3 fast, naive;
    BenchReport report{c.n1, c.n2, c.l, c.n3, 0.0, 0.0, 0.0};
    report.fft_path_seconds = best_seconds(repeats, [&] { fast = tprod(a, b); });
    report.naive_path_seconds = best_seconds(repeats, [&] { naive = verify::tprod_naive(a, b); });
    report.max_rel_error = verify::relative_error(fast, naive);
    return report;
}

void write_csv_header(std::ostream& out) { out << kCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const BenchReport& r) {
    const auto old = out.precision(std::numeric_limits<double>::max_digits10);
    out << r.n1 << ',' << r.n2 << ',' << r.l << ',' << r.n3 << ',' << r.fft_path_seconds << ','
        << r.naive_path_seconds << ',' << r.max_rel_error << '\n';
    out.precision(old);
}

}  // namespace tproduct::bench
