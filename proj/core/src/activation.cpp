#include "loadcast/activation.hpp"

namespace loadcast {

double apply_activation(double x, Activation kind) {
    return kind == Activation::Tanh ? std::tanh(x) : sigmoid(x);
}

double activation_derivative_from_output(double y, Activation kind) {
    return kind == Activation::Tanh ? 1.0 - y * y : y * (1.0 - y);
}

Matrix activate(const Matrix& x, Activation kind) {
    Matrix y = x;
    for (double& v : y.values()) v = apply_activation(v, kind);
    return y;
}

Vec activate(const Vec& x, Activation kind) {
    Vec y = x;
    for (double& v : y) v = apply_activation(v, kind);
    return y;
}

Matrix activate_derivative(const Matrix& y, Activation kind) {
    Matrix d = y;
    for (double& v : d.values()) v = activation_derivative_from_output(v, kind);
    return d;
}

Vec activate_derivative(const Vec& y, Activation kind) {
    Vec d = y;
    for (double& v : d) v = activation_derivative_from_output(v, kind);
    return d;
}

}  // namespace loadcast
