#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cvnn/activations.hpp"
#include "cvnn/complex.hpp"

namespace cvnn {

// Dense complex layer: out-by-in weight matrix plus a bias column. The bias
// behaves as one extra weight whose input is permanently 1+0i, so every
// backward derivation covers it with no special case.
struct Layer {
    int n_in = 0;
    int n_out = 0;
    std::vector<Complex> w;  // row-major, n_out x n_in
    std::vector<Complex> b;  // n_out
    ActivationSpec activation;

    Complex& W(int i, int j) { return w[static_cast<size_t>(i) * n_in + j]; }
    Complex W(int i, int j) const { return w[static_cast<size_t>(i) * n_in + j]; }
};

struct Network {
    int input_width = 0;
    std::vector<Layer> layers;

    int output_width() const {
        return layers.empty() ? input_width : layers.back().n_out;
    }
    // total number of complex parameters (weights + biases)
    int parameter_count() const;
    void check_shapes() const;  // throws on inconsistent widths
};

// Widths [N0, N1, ..., NL]; one activation per layer (or one shared).
// Weights and biases drawn independently, uniform over the disc of radius
// init_radius, deterministically from the seed.
Network init_network(const std::vector<int>& widths,
                     const std::vector<ActivationSpec>& activations,
                     double init_radius, std::uint64_t seed);
Network init_network(const std::vector<int>& widths,
                     const ActivationSpec& activation, double init_radius,
                     std::uint64_t seed);

// Everything the backward passes need: per-layer pre-activations and
// activations, with act[0] = input and output() = act.back().
struct ForwardTrace {
    std::vector<std::vector<Complex>> pre;  // z per layer, 1..L
    std::vector<std::vector<Complex>> act;  // a per layer, 0..L
    const std::vector<Complex>& output() const { return act.back(); }
};

ForwardTrace forward(const Network& net, const std::vector<Complex>& x);

// Canonical loss: (1/2) sum (d_k - o_k)(d_k - o_k)*; real and >= 0.
double loss(const ForwardTrace& trace, const std::vector<Complex>& d);

// Text serialization; full-precision decimal so round-trips are bit-exact.
void save_network(const Network& net, std::ostream& os);
Network load_network(std::istream& is);
void save_network_file(const Network& net, const std::string& path);
Network load_network_file(const std::string& path);

}  // namespace cvnn
