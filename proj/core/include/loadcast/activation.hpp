#pragma once

#include <cmath>

#include "loadcast/matrix.hpp"

namespace loadcast {

enum class Activation { Tanh, Sigmoid };

inline double sigmoid(double x) { return 1.0 / (1.0 + std::exp(-x)); }

double apply_activation(double x, Activation kind);

/// Derivative expressed through the activation *output* y:
/// tanh' = 1 - y^2, sigmoid' = y (1 - y).
double activation_derivative_from_output(double y, Activation kind);

/// Elementwise application.
Matrix activate(const Matrix& x, Activation kind);
Vec activate(const Vec& x, Activation kind);

/// Elementwise derivative evaluated from the already-activated output.
Matrix activate_derivative(const Matrix& y, Activation kind);
Vec activate_derivative(const Vec& y, Activation kind);

}  // namespace loadcast
