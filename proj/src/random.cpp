#include <tproduct/random.hpp>

namespace tproduct {

Tensor3 random_tensor(const Shape& shape, Rng& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> data(shape.size());
    for (auto& x : data) x = normal(rng);
    return Tensor3(shape, std::move(data));
}

}  // namespace tproduct
