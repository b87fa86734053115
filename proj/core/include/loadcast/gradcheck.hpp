#pragma once

#include <functional>
#include <span>

#include "loadcast/matrix.hpp"

namespace loadcast {

/// Central-difference gradient of a scalar function:
///   g_i = (f(x + eps e_i) - f(x - eps e_i)) / (2 eps).
/// The oracle every analytic gradient in the toolkit is validated against.
/// Throws if any probed evaluation is non-finite or eps <= 0.
Vec finite_diff_grad(const std::function<double(std::span<const double>)>& f,
                     std::span<const double> x, double eps = 1e-5);

/// max_i |a_i - b_i| / max(|a_i|, |b_i|, 1e-8)
double max_relative_error(std::span<const double> a, std::span<const double> b);

}  // namespace loadcast
