#include "loadcast/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace loadcast {

Vec finite_diff_grad(const std::function<double(std::span<const double>)>& f,
                     std::span<const double> x, double eps) {
    if (!(eps > 0.0)) throw std::invalid_argument("finite_diff_grad: eps must be > 0");
    Vec probe(x.begin(), x.end());
    Vec grad(x.size(), 0.0);
    for (std::size_t i = 0; i < probe.size(); ++i) {
        const double saved = probe[i];
        probe[i] = saved + eps;
        const double fp = f(probe);
        probe[i] = saved - eps;
        const double fm = f(probe);
        probe[i] = saved;
        if (!std::isfinite(fp) || !std::isfinite(fm)) {
            throw std::runtime_error("finite_diff_grad: non-finite function evaluation");
        }
        grad[i] = (fp - fm) / (2.0 * eps);
    }
    return grad;
}

double max_relative_error(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("max_relative_error: length mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double denom = std::max({std::abs(a[i]), std::abs(b[i]), 1e-8});
        worst = std::max(worst, std::abs(a[i] - b[i]) / denom);
    }
    return worst;
}

}  // namespace loadcast
