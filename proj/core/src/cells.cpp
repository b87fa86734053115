#include "loadcast/cells.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "loadcast/activation.hpp"

namespace loadcast {

namespace {

double cell_init_scale(std::size_t hidden, std::size_t input_dim) {
    return 1.0 / std::sqrt(static_cast<double>(input_dim + hidden));
}

void check_len(const Vec& v, std::size_t expected, const char* what) {
    if (v.size() != expected) {
        std::ostringstream os;
        os << what << ": expected length " << expected << ", got " << v.size();
        throw std::invalid_argument(os.str());
    }
}

}  // namespace

RnnParams RnnParams::init(std::size_t hidden, std::size_t input_dim, Rng& rng) {
    const double s = cell_init_scale(hidden, input_dim);
    RnnParams p;
    p.w_in = rng_matrix(rng, hidden, input_dim, s);
    p.w_rec = rng_matrix(rng, hidden, hidden, s);
    return p;
}

Vec rnn_step(const RnnParams& p, const Vec& y_prev, const Vec& x_t) {
    check_len(y_prev, p.hidden(), "rnn_step: y_prev");
    check_len(x_t, p.input_dim(), "rnn_step: x_t");
    Vec pre = matvec(p.w_rec, y_prev);
    axpy(pre, matvec(p.w_in, x_t), 1.0);
    return activate(pre, Activation::Tanh);
}

LstmParams LstmParams::init(std::size_t hidden, std::size_t input_dim, Rng& rng) {
    const double s = cell_init_scale(hidden, input_dim);
    LstmParams p;
    for (std::size_t g = 0; g < kGateCount; ++g) {
        p.w_x[g] = rng_matrix(rng, hidden, input_dim, s);
        p.w_h[g] = rng_matrix(rng, hidden, hidden, s);
        p.b[g] = Vec(hidden, g == kForget ? 1.0 : 0.0);
    }
    return p;
}

LstmState lstm_step(const LstmParams& p, const LstmState& prev, const Vec& x_t,
                    std::array<Vec, kGateCount>* gates_out) {
    const std::size_t hidden = p.hidden();
    check_len(prev.h, hidden, "lstm_step: h_prev");
    check_len(prev.c, hidden, "lstm_step: c_prev");
    check_len(x_t, p.input_dim(), "lstm_step: x_t");

    std::array<Vec, kGateCount> gates;
    for (std::size_t g = 0; g < kGateCount; ++g) {
        Vec pre = matvec(p.w_x[g], x_t);
        axpy(pre, matvec(p.w_h[g], prev.h), 1.0);
        axpy(pre, p.b[g], 1.0);
        gates[g] = activate(pre, g == kCandidate ? Activation::Tanh : Activation::Sigmoid);
    }

    LstmState next;
    next.c.resize(hidden);
    next.h.resize(hidden);
    for (std::size_t i = 0; i < hidden; ++i) {
        next.c[i] = gates[kForget][i] * prev.c[i] + gates[kInput][i] * gates[kCandidate][i];
        next.h[i] = gates[kOutput][i] * std::tanh(next.c[i]);
    }
    if (gates_out) *gates_out = std::move(gates);
    return next;
}

DenseParams DenseParams::init(std::size_t horizon, std::size_t hidden, Rng& rng) {
    DenseParams p;
    p.w = rng_matrix(rng, horizon, hidden, 1.0 / std::sqrt(static_cast<double>(hidden)));
    p.b = Vec(horizon, 0.0);
    return p;
}

Vec dense_forward(const DenseParams& p, const Vec& h) {
    check_len(h, p.w.cols(), "dense_forward: hidden");
    Vec out = matvec(p.w, h);
    axpy(out, p.b, 1.0);
    return out;
}

}  // namespace loadcast
