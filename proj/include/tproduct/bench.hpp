#pragma once

#include <tproduct/random.hpp>

#include <iosfwd>
#include <vector>

namespace tproduct::bench {

/// One timing row comparing tprod against tprod_naive.
struct BenchReport {
    std::size_t n1 = 0;
    std::size_t n2 = 0;
    std::size_t l = 0;
    std::size_t n3 = 0;
    double fft_path_seconds = 0.0;
    double naive_path_seconds = 0.0;
    /// ||tprod - tprod_naive||_F / ||tprod_naive||_F on the timed operands.
    double max_rel_error = 0.0;
};

struct BenchCase {
    std::size_t n1, n2, l, n3;
};

/// Times both paths on random operands; each timing is the best of
/// `repeats` runs.
BenchReport run_case(const BenchCase& c, std::size_t repeats, Rng& rng);

inline constexpr const char* kCsvHeader = "n1,n2,l,n3,fft_seconds,naive_seconds,max_rel_error";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const BenchReport& r);

}  // namespace tproduct::bench
