#pragma once

#include <tproduct/tensor3.hpp>

#include <cstdint>
#include <random>

namespace tproduct {

using Rng = std::mt19937_64;

/// Tensor with independent standard normal entries.
Tensor3 random_tensor(const Shape& shape, Rng& rng);

}  // namespace tproduct
