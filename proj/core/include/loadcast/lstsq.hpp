#pragma once

#include "loadcast/matrix.hpp"

namespace loadcast {

/// Minimizes ||X b - y||_2 via Householder QR (stable; no normal equations).
/// Throws std::runtime_error when X is rank-deficient to working precision,
/// with a hint to reduce the model order.
Vec least_squares(const Matrix& x, const Vec& y);

}  // namespace loadcast
