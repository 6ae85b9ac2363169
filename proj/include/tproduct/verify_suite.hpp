#pragma once

#include <tproduct/tensor3.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace tproduct::verify {

struct VerifyOptions {
    Shape dims{3, 3, 4};
    /// Number of lateral slices of the right t-product operand.
    std::size_t l = 2;
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    /// When set, checked in addition to the random trials.
    std::optional<Tensor3> a;
    std::optional<Tensor3> b;
};

struct CheckResult {
    std::string name;
    /// Worst observed error over all inputs.
    double worst = 0.0;
    double threshold = 0.0;
    bool passed() const { return worst <= threshold; }
};

/// Runs the fast implementations against the reference oracles on every input
/// and returns one aggregated result per check.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace tproduct::verify
