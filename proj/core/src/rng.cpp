#include "loadcast/rng.hpp"

#include <stdexcept>

namespace loadcast {

Matrix rng_matrix(Rng& rng, std::size_t rows, std::size_t cols, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("rng_matrix: scale must be > 0");
    Matrix m(rows, cols);
    for (double& v : m.values()) v = rng.next_uniform(-scale, scale);
    return m;
}

Vec rng_vector(Rng& rng, std::size_t n, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("rng_vector: scale must be > 0");
    Vec v(n);
    for (double& x : v) x = rng.next_uniform(-scale, scale);
    return v;
}

}  // namespace loadcast
