#pragma once

#include <span>

#include "loadcast/matrix.hpp"

namespace loadcast {

/// Mean of squared differences. Throws on length mismatch or empty input.
double mse_loss(std::span<const double> pred, std::span<const double> target);

/// d mse / d pred_j = 2 (pred_j - target_j) / n
Vec mse_loss_grad(std::span<const double> pred, std::span<const double> target);

}  // namespace loadcast
