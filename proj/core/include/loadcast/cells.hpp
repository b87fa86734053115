#pragma once

#include <array>
#include <cstddef>

#include "loadcast/matrix.hpp"
#include "loadcast/rng.hpp"

namespace loadcast {

/// Simple recurrent cell: y_t = tanh(w_rec y_{t-1} + w_in x_t).
/// Deliberately bias-free.
struct RnnParams {
    Matrix w_in;   // hidden x input_dim
    Matrix w_rec;  // hidden x hidden

    std::size_t hidden() const { return w_rec.rows(); }
    std::size_t input_dim() const { return w_in.cols(); }

    /// Uniform init in [-s, s] with s = 1/sqrt(input_dim + hidden) — the
    /// recurrent step's joint fan-in.
    static RnnParams init(std::size_t hidden, std::size_t input_dim, Rng& rng);
};

Vec rnn_step(const RnnParams& p, const Vec& y_prev, const Vec& x_t);

/// Gate index order used everywhere (traces, gradients, flattening, disk).
enum GateIndex : std::size_t {
    kForget = 0,
    kInput = 1,
    kOutput = 2,
    kCandidate = 3,
};
inline constexpr std::size_t kGateCount = 4;

/// Standard no-peephole LSTM cell:
///   f = sigm(w_x[f] x + w_h[f] h + b[f])      i, o likewise
///   g = tanh(w_x[g] x + w_h[g] h + b[g])
///   c_t = f . c_prev + i . g
///   h_t = o . tanh(c_t)
struct LstmParams {
    std::array<Matrix, kGateCount> w_x;  // each hidden x input_dim
    std::array<Matrix, kGateCount> w_h;  // each hidden x hidden
    std::array<Vec, kGateCount> b;       // each hidden

    std::size_t hidden() const { return w_h[0].rows(); }
    std::size_t input_dim() const { return w_x[0].cols(); }

    /// Weights uniform in [-s, s], s = 1/sqrt(input_dim + hidden); forget
    /// bias starts at +1, the other biases at 0.
    static LstmParams init(std::size_t hidden, std::size_t input_dim, Rng& rng);
};

struct LstmState {
    Vec h;
    Vec c;
};

/// One step; gate activations are written to *gates_out when non-null
/// (order: forget, input, output, candidate).
LstmState lstm_step(const LstmParams& p, const LstmState& prev, const Vec& x_t,
                    std::array<Vec, kGateCount>* gates_out = nullptr);

/// Linear output head mapping the final hidden state to the horizon vector.
/// No squashing: consumption targets are unbounded above.
struct DenseParams {
    Matrix w;  // horizon x hidden
    Vec b;     // horizon

    std::size_t horizon() const { return w.rows(); }

    static DenseParams init(std::size_t horizon, std::size_t hidden, Rng& rng);
};

Vec dense_forward(const DenseParams& p, const Vec& h);

}  // namespace loadcast
