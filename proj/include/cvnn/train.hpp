#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvnn/network.hpp"
#include "cvnn/tasks.hpp"

namespace cvnn {

enum class Algorithm {
    complex_derivative,   // requires a complex derivative sigma' and the
                          // conjugate-commutation property sigma(z*) = sigma(z)*
    partial_derivatives,  // requires only the four real partials
    cr_simplified,        // partials collapsed through the CR equations
    split,                // split specialization (uy = vx = 0)
};

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

// Gradients of the canonical loss w.r.t. every complex weight and bias,
// assembled as dL/dw_re + i dL/dw_im. Shapes mirror the network.
struct GradientSet {
    std::vector<std::vector<Complex>> w;
    std::vector<std::vector<Complex>> b;
    double max_abs() const;
};

// Throws AlgorithmMismatchError when a layer's activation category cannot
// support the algorithm.
void check_compatible(const Network& net, Algorithm algo);

GradientSet backward(const Network& net, const ForwardTrace& trace,
                     const std::vector<Complex>& d, Algorithm algo);

GradientSet backward_complex_derivative(const Network& net,
                                        const ForwardTrace& trace,
                                        const std::vector<Complex>& d);
GradientSet backward_partial_derivatives(const Network& net,
                                         const ForwardTrace& trace,
                                         const std::vector<Complex>& d);
GradientSet backward_cr_simplified(const Network& net, const ForwardTrace& trace,
                                   const std::vector<Complex>& d);
GradientSet backward_split(const Network& net, const ForwardTrace& trace,
                           const std::vector<Complex>& d);

struct TrainConfig {
    Algorithm algorithm = Algorithm::partial_derivatives;
    double learning_rate = 0.1;  // real positive; 0 is accepted (no-op steps)
    int epochs = 100;
    bool shuffle = false;
    std::uint64_t seed = 0;
    double stop_loss = 0.0;
};

enum class StopReason { epochs_exhausted, stop_loss_reached, numeric_failure };
std::string stop_reason_name(StopReason r);

struct TrainReport {
    TrainConfig config;
    std::vector<double> epoch_mean_loss;
    int skipped_steps = 0;  // singularity/kink/overflow encounters
    StopReason stop_reason = StopReason::epochs_exhausted;
    int fail_epoch = -1;
    int fail_sample = -1;
    Network final_net;
};

// Online training: forward, backward, w <- w - alpha*grad after each sample;
// epochs in order, per-epoch shuffle iff configured (seeded). Deterministic
// given (net, data, cfg).
TrainReport train(Network net, const Dataset& data, const TrainConfig& cfg);

void save_report(const TrainReport& rep, std::ostream& os,
                 const std::string& network_ref);

}  // namespace cvnn
