#include "ftt/random.hpp"

#include <vector>

namespace ftt {

RealVector UniformSource::vector(std::size_t n) {
    std::vector<double> v(n);
    for (double& x : v) x = uniform(-1.0, 1.0);
    return RealVector(std::move(v));
}

}  // namespace ftt
