#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvnn/complex.hpp"
#include "cvnn/network.hpp"

namespace cvnn {

struct Sample {
    std::vector<Complex> input;
    std::vector<Complex> target;
};

struct Dataset {
    std::string name;
    std::string params_echo;  // generator parameters, for the file header
    std::vector<Sample> samples;

    int input_width() const {
        return samples.empty() ? 0 : static_cast<int>(samples[0].input.size());
    }
    int target_width() const {
        return samples.empty() ? 0 : static_cast<int>(samples[0].target.size());
    }
};

// The XOR task for a single complex neuron. Inputs pack the bit pair as
// z = x1 + i*x2; targets carry the same pair, d = x1 + i*x2, and the class
// is read from the parity of the two 0.5-thresholded output parts:
//   predicted = (Re o >= 0.5) xor (Im o >= 0.5)  ==  x1 xor x2.
// The two threshold surfaces of one complex neuron intersect orthogonally,
// which is what makes the task solvable at width one.
Dataset gen_xor();

// Classifier for the XOR encoding above: number of the 4 points a network
// labels correctly.
int xor_correct_count(const Network& net);

// All 2^bits binary strings (seeded subsample of 1024 above 2^10); input
// packs bit pairs into complex components (bit_{2k} + i*bit_{2k+1});
// target 1 iff the string is a palindrome.
Dataset gen_symmetry(int bits, std::uint64_t seed);

// Seeded i.i.d. symbols from the square QAM integer grid ({±1±i} for order
// 4, {±1,±3}^2 for order 16 — the lattice on which the split_qam activation
// is exactly the identity), passed through the FIR channel taps, plus
// circular complex Gaussian noise of standard deviation noise_sigma.
// Input = received sample, target = transmitted symbol.
Dataset gen_qam(int order, int n, double noise_sigma,
                const std::vector<Complex>& taps, std::uint64_t seed);

void save_dataset(const Dataset& ds, std::ostream& os);
Dataset load_dataset(std::istream& is);

}  // namespace cvnn
