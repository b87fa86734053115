#include "loadcast/network.hpp"

#include <cmath>
#include <stdexcept>

namespace loadcast {

std::string cell_kind_name(CellKind kind) {
    return kind == CellKind::Rnn ? "rnn" : "lstm";
}

CellKind parse_cell_kind(const std::string& name) {
    if (name == "rnn") return CellKind::Rnn;
    if (name == "lstm") return CellKind::Lstm;
    throw std::invalid_argument("unknown cell kind: " + name);
}

Network Network::make(CellKind cell, std::size_t hidden, std::size_t input_dim,
                      std::size_t horizon, Rng& rng) {
    if (hidden == 0 || input_dim == 0 || horizon == 0)
        throw std::invalid_argument("Network::make: sizes must be >= 1");
    Network net;
    net.cell = cell;
    net.hidden = hidden;
    net.input_dim = input_dim;
    net.horizon = horizon;
    if (cell == CellKind::Rnn) {
        net.rnn = RnnParams::init(hidden, input_dim, rng);
    } else {
        net.lstm = LstmParams::init(hidden, input_dim, rng);
    }
    net.head = DenseParams::init(horizon, hidden, rng);
    return net;
}

CellState zero_state(const Network& net) {
    CellState s;
    s.h = Vec(net.hidden, 0.0);
    if (net.cell == CellKind::Lstm) s.c = Vec(net.hidden, 0.0);
    return s;
}

ForwardResult forward_sequence(const Network& net, std::span<const Vec> xs) {
    return forward_sequence_from(net, zero_state(net), xs);
}

ForwardResult forward_sequence_from(const Network& net, const CellState& initial,
                                    std::span<const Vec> xs) {
    if (xs.empty()) throw std::invalid_argument("forward_sequence: empty input sequence");

    ForwardResult out;
    SequenceTrace& trace = out.trace;
    trace.inputs.reserve(xs.size());
    trace.hidden.reserve(xs.size());

    if (net.cell == CellKind::Rnn) {
        Vec y = initial.h;
        for (const Vec& x : xs) {
            y = rnn_step(net.rnn, y, x);
            trace.inputs.push_back(x);
            trace.hidden.push_back(y);
        }
        out.prediction = dense_forward(net.head, y);
    } else {
        LstmState state{initial.h, initial.c};
        trace.cell.reserve(xs.size());
        trace.tanh_cell.reserve(xs.size());
        trace.gates.reserve(xs.size());
        for (const Vec& x : xs) {
            std::array<Vec, kGateCount> gates;
            state = lstm_step(net.lstm, state, x, &gates);
            trace.inputs.push_back(x);
            trace.hidden.push_back(state.h);
            trace.cell.push_back(state.c);
            Vec tc(state.c.size());
            for (std::size_t i = 0; i < tc.size(); ++i) tc[i] = std::tanh(state.c[i]);
            trace.tanh_cell.push_back(std::move(tc));
            trace.gates.push_back(std::move(gates));
        }
        out.prediction = dense_forward(net.head, state.h);
    }
    ensure_finite(out.prediction, "forward_sequence");
    return out;
}

CellState trace_final_state(const Network& net, const SequenceTrace& trace) {
    if (trace.length() == 0) throw std::invalid_argument("trace_final_state: empty trace");
    CellState s;
    s.h = trace.hidden.back();
    if (net.cell == CellKind::Lstm) s.c = trace.cell.back();
    return s;
}

Vec predict_window(const Network& net, std::span<const double> window) {
    if (net.input_dim != 1)
        throw std::invalid_argument("predict_window: network input_dim must be 1");
    std::vector<Vec> xs;
    xs.reserve(window.size());
    for (double v : window) xs.push_back(Vec{v});
    return forward_sequence(net, xs).prediction;
}

}  // namespace loadcast
