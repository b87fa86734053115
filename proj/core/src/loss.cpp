#include "loadcast/loss.hpp"

#include <sstream>
#include <stdexcept>

namespace loadcast {

namespace {

void check_pair(std::span<const double> pred, std::span<const double> target,
                const char* op) {
    if (pred.size() != target.size()) {
        std::ostringstream os;
        os << op << ": length mismatch (" << pred.size() << " vs " << target.size() << ")";
        throw std::invalid_argument(os.str());
    }
    if (pred.empty()) {
        std::ostringstream os;
        os << op << ": empty input";
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

double mse_loss(std::span<const double> pred, std::span<const double> target) {
    check_pair(pred, target, "mse_loss");
    double acc = 0.0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        const double e = pred[i] - target[i];
        acc += e * e;
    }
    return acc / static_cast<double>(pred.size());
}

Vec mse_loss_grad(std::span<const double> pred, std::span<const double> target) {
    check_pair(pred, target, "mse_loss_grad");
    Vec g(pred.size());
    const double scale = 2.0 / static_cast<double>(pred.size());
    for (std::size_t i = 0; i < pred.size(); ++i) g[i] = scale * (pred[i] - target[i]);
    return g;
}

}  // namespace loadcast
