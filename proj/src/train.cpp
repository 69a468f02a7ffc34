#include "cvnn/train.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "cvnn/errors.hpp"
#include "cvnn/rng.hpp"

namespace cvnn {

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::complex_derivative: return "complex_derivative";
        case Algorithm::partial_derivatives: return "partial_derivatives";
        case Algorithm::cr_simplified: return "cr_simplified";
        case Algorithm::split: return "split";
    }
    return "?";
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "complex_derivative" || name == "complex") return Algorithm::complex_derivative;
    if (name == "partial_derivatives" || name == "partial") return Algorithm::partial_derivatives;
    if (name == "cr_simplified" || name == "cr") return Algorithm::cr_simplified;
    if (name == "split") return Algorithm::split;
    throw ConfigError("unknown algorithm: " + name);
}

std::string stop_reason_name(StopReason r) {
    switch (r) {
        case StopReason::epochs_exhausted: return "epochs_exhausted";
        case StopReason::stop_loss_reached: return "stop_loss_reached";
        case StopReason::numeric_failure: return "numeric_failure";
    }
    return "?";
}

double GradientSet::max_abs() const {
    double m = 0.0;
    for (const auto& layer : w)
        for (Complex g : layer) m = std::max(m, abs(g));
    for (const auto& layer : b)
        for (Complex g : layer) m = std::max(m, abs(g));
    return m;
}

void check_compatible(const Network& net, Algorithm algo) {
    for (const Layer& l : net.layers) {
        const ActivationSpec& a = l.activation;
        switch (algo) {
            case Algorithm::complex_derivative:
                if (!a.holomorphic)
                    throw AlgorithmMismatchError(
                        "complex_derivative needs a complex derivative; " +
                        a.name() + " does not provide one");
                break;
            case Algorithm::cr_simplified:
                if (!a.holomorphic)
                    throw AlgorithmMismatchError(
                        "cr_simplified needs a holomorphic activation; " +
                        a.name() + " is not");
                break;
            case Algorithm::split:
                if (a.category != Category::split_real_imaginary)
                    throw AlgorithmMismatchError("split backward needs a "
                                                 "split-real-imaginary activation; " +
                                                 a.name() + " is not");
                break;
            case Algorithm::partial_derivatives:
                if (!a.differentiable)
                    throw AlgorithmMismatchError(a.name() +
                                                 " has no partial derivatives");
                break;
        }
        if (!a.differentiable)
            throw AlgorithmMismatchError(a.name() + " is not differentiable");
    }
}

namespace {

constexpr double kConjCommutationTol = 1e-8;

// Per-neuron backward factor psi. The gradient for a weight feeding neuron j
// is -conj(input)*psi_j, and the upstream delta is sum_k conj(w_kj)*psi_k.
// The four algorithms differ only here:
//   partial_derivatives: (ux + i uy) dRe + (vx + i vy) dIm
//   split:                ux dRe + i vy dIm
//   cr_simplified:        conj(sigma') via the y-route, (vy + i uy) * delta
//   complex_derivative:   conj(sigma') via the x-route, (ux - i vx) * delta
Complex combine(Algorithm algo, const WirtingerJet& j, Complex delta) {
    switch (algo) {
        case Algorithm::partial_derivatives:
            return Complex{j.ux, j.uy} * delta.re + Complex{j.vx, j.vy} * delta.im;
        case Algorithm::split:
            return Complex{j.ux * delta.re, j.vy * delta.im};
        case Algorithm::cr_simplified:
            return Complex{j.vy, j.uy} * delta;
        case Algorithm::complex_derivative:
            return Complex{j.ux, -j.vx} * delta;
    }
    return {};
}

void check_conjugate_commutation(const ActivationSpec& spec, Complex z) {
    const Complex lhs = eval(spec, conj(z));
    const Complex rhs = conj(eval(spec, z));
    if (abs(lhs - rhs) > kConjCommutationTol)
        throw AssumptionError(spec.name() +
                              ": conjugate-commutation assumption fails at " +
                              to_string(z) + " (|sigma(z*) - sigma(z)*| = " +
                              std::to_string(abs(lhs - rhs)) + ")");
}

}  // namespace

GradientSet backward(const Network& net, const ForwardTrace& trace,
                     const std::vector<Complex>& d, Algorithm algo) {
    check_compatible(net, algo);
    const int L = static_cast<int>(net.layers.size());
    if (static_cast<int>(d.size()) != net.output_width())
        throw Error("backward: target width mismatch");

    GradientSet g;
    g.w.resize(L);
    g.b.resize(L);

    // output-layer error signal
    std::vector<Complex> delta(net.output_width());
    for (size_t k = 0; k < delta.size(); ++k) delta[k] = d[k] - trace.output()[k];

    for (int li = L - 1; li >= 0; --li) {
        const Layer& layer = net.layers[li];
        g.w[li].assign(layer.w.size(), Complex{});
        g.b[li].assign(layer.b.size(), Complex{});

        std::vector<Complex> psi(layer.n_out);
        for (int i = 0; i < layer.n_out; ++i) {
            const Complex z = trace.pre[li][i];
            if (algo == Algorithm::complex_derivative)
                check_conjugate_commutation(layer.activation, z);
            psi[i] = combine(algo, partials(layer.activation, z), delta[i]);
        }

        const std::vector<Complex>& in = trace.act[li];
        for (int i = 0; i < layer.n_out; ++i) {
            for (int jj = 0; jj < layer.n_in; ++jj)
                g.w[li][static_cast<size_t>(i) * layer.n_in + jj] =
                    -(conj(in[jj]) * psi[i]);
            g.b[li][i] = -psi[i];  // bias input is permanently 1+0i
        }

        if (li > 0) {
            std::vector<Complex> next(layer.n_in, Complex{});
            for (int jj = 0; jj < layer.n_in; ++jj) {
                Complex acc{};
                for (int k = 0; k < layer.n_out; ++k)
                    acc += conj(layer.W(k, jj)) * psi[k];
                next[jj] = acc;
            }
            delta = std::move(next);
        }
    }
    return g;
}

GradientSet backward_complex_derivative(const Network& net,
                                        const ForwardTrace& trace,
                                        const std::vector<Complex>& d) {
    return backward(net, trace, d, Algorithm::complex_derivative);
}
GradientSet backward_partial_derivatives(const Network& net,
                                         const ForwardTrace& trace,
                                         const std::vector<Complex>& d) {
    return backward(net, trace, d, Algorithm::partial_derivatives);
}
GradientSet backward_cr_simplified(const Network& net, const ForwardTrace& trace,
                                   const std::vector<Complex>& d) {
    return backward(net, trace, d, Algorithm::cr_simplified);
}
GradientSet backward_split(const Network& net, const ForwardTrace& trace,
                           const std::vector<Complex>& d) {
    return backward(net, trace, d, Algorithm::split);
}

TrainReport train(Network net, const Dataset& data, const TrainConfig& cfg) {
    if (data.samples.empty()) throw Error("train: empty dataset");
    if (!(cfg.learning_rate >= 0.0) || !std::isfinite(cfg.learning_rate))
        throw Error("train: learning rate must be finite and >= 0");
    check_compatible(net, cfg.algorithm);

    TrainReport rep;
    rep.config = cfg;
    SeededRng shuffle_rng(cfg.seed);

    std::vector<size_t> order(data.samples.size());
    std::iota(order.begin(), order.end(), 0);

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        if (cfg.shuffle) {
            for (size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[shuffle_rng.index(i)]);
        }
        double sum_loss = 0.0;
        int counted = 0;
        for (size_t si = 0; si < order.size(); ++si) {
            const Sample& s = data.samples[order[si]];
            double l;
            GradientSet g;
            try {
                ForwardTrace t = forward(net, s.input);
                l = loss(t, s.target);
                g = backward(net, t, s.target, cfg.algorithm);
            } catch (const SingularityError&) {
                ++rep.skipped_steps;
                continue;
            } catch (const KinkError&) {
                ++rep.skipped_steps;
                continue;
            } catch (const OverflowError&) {
                ++rep.skipped_steps;
                continue;
            }
            sum_loss += l;
            ++counted;
            if (!std::isfinite(l)) {
                rep.stop_reason = StopReason::numeric_failure;
                rep.fail_epoch = epoch;
                rep.fail_sample = static_cast<int>(order[si]);
                rep.final_net = std::move(net);
                return rep;
            }
            bool bad = false;
            for (size_t li = 0; li < net.layers.size(); ++li) {
                Layer& layer = net.layers[li];
                for (size_t k = 0; k < layer.w.size(); ++k) {
                    layer.w[k] -= cfg.learning_rate * g.w[li][k];
                    bad = bad || !is_finite(layer.w[k]);
                }
                for (size_t k = 0; k < layer.b.size(); ++k) {
                    layer.b[k] -= cfg.learning_rate * g.b[li][k];
                    bad = bad || !is_finite(layer.b[k]);
                }
            }
            if (bad) {
                rep.stop_reason = StopReason::numeric_failure;
                rep.fail_epoch = epoch;
                rep.fail_sample = static_cast<int>(order[si]);
                rep.final_net = std::move(net);
                return rep;
            }
        }
        rep.epoch_mean_loss.push_back(counted ? sum_loss / counted : 0.0);
        if (counted && rep.epoch_mean_loss.back() <= cfg.stop_loss) {
            rep.stop_reason = StopReason::stop_loss_reached;
            break;
        }
    }
    rep.final_net = std::move(net);
    return rep;
}

void save_report(const TrainReport& rep, std::ostream& os,
                 const std::string& network_ref) {
    char buf[64];
    os << "cvnn-train-report 1\n";
    os << "algorithm " << algorithm_name(rep.config.algorithm) << "\n";
    std::snprintf(buf, sizeof buf, "%.17g", rep.config.learning_rate);
    os << "learning_rate " << buf << "\n";
    os << "epochs " << rep.config.epochs << "\n";
    os << "shuffle " << (rep.config.shuffle ? 1 : 0) << "\n";
    os << "seed " << rep.config.seed << "\n";
    std::snprintf(buf, sizeof buf, "%.17g", rep.config.stop_loss);
    os << "stop_loss " << buf << "\n";
    os << "stop_reason " << stop_reason_name(rep.stop_reason) << "\n";
    os << "skipped_steps " << rep.skipped_steps << "\n";
    os << "fail_epoch " << rep.fail_epoch << "\n";
    os << "fail_sample " << rep.fail_sample << "\n";
    for (size_t e = 0; e < rep.epoch_mean_loss.size(); ++e) {
        std::snprintf(buf, sizeof buf, "%.17g", rep.epoch_mean_loss[e]);
        os << "epoch_loss " << e << " " << buf << "\n";
    }
    os << "final_network " << network_ref << "\n";
}

}  // namespace cvnn
