#include "cvnn/network.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cvnn/errors.hpp"
#include "cvnn/rng.hpp"

namespace cvnn {

int Network::parameter_count() const {
    int n = 0;
    for (const Layer& l : layers) n += l.n_out * l.n_in + l.n_out;
    return n;
}

void Network::check_shapes() const {
    int prev = input_width;
    for (size_t li = 0; li < layers.size(); ++li) {
        const Layer& l = layers[li];
        if (l.n_in != prev)
            throw Error("layer " + std::to_string(li) + " expects width " +
                        std::to_string(l.n_in) + ", got " + std::to_string(prev));
        if (static_cast<int>(l.w.size()) != l.n_out * l.n_in ||
            static_cast<int>(l.b.size()) != l.n_out)
            throw Error("layer " + std::to_string(li) + " storage mismatch");
        prev = l.n_out;
    }
}

Network init_network(const std::vector<int>& widths,
                     const std::vector<ActivationSpec>& activations,
                     double init_radius, std::uint64_t seed) {
    if (widths.size() < 2) throw Error("init_network: need at least two widths");
    for (int w : widths)
        if (w < 1) throw Error("init_network: widths must be positive");
    if (!(init_radius > 0.0))
        throw Error("init_network: init_radius must be positive");
    if (activations.size() != widths.size() - 1)
        throw Error("init_network: one activation per layer required");

    SeededRng rng(seed);
    Network net;
    net.input_width = widths[0];
    for (size_t li = 0; li + 1 < widths.size(); ++li) {
        Layer l;
        l.n_in = widths[li];
        l.n_out = widths[li + 1];
        l.activation = activations[li];
        l.w.resize(static_cast<size_t>(l.n_in) * l.n_out);
        l.b.resize(l.n_out);
        for (Complex& w : l.w) w = rng.in_disc(init_radius);
        for (Complex& b : l.b) b = rng.in_disc(init_radius);
        net.layers.push_back(std::move(l));
    }
    return net;
}

Network init_network(const std::vector<int>& widths,
                     const ActivationSpec& activation, double init_radius,
                     std::uint64_t seed) {
    if (widths.size() < 2) throw Error("init_network: need at least two widths");
    return init_network(widths,
                        std::vector<ActivationSpec>(widths.size() - 1, activation),
                        init_radius, seed);
}

ForwardTrace forward(const Network& net, const std::vector<Complex>& x) {
    if (static_cast<int>(x.size()) != net.input_width)
        throw Error("forward: input width " + std::to_string(x.size()) +
                    " != " + std::to_string(net.input_width));
    ForwardTrace t;
    t.act.push_back(x);
    for (size_t li = 0; li < net.layers.size(); ++li) {
        const Layer& l = net.layers[li];
        std::vector<Complex> z(l.n_out);
        std::vector<Complex> a(l.n_out);
        for (int i = 0; i < l.n_out; ++i) {
            Complex s = l.b[i];
            for (int j = 0; j < l.n_in; ++j) s += l.W(i, j) * t.act.back()[j];
            z[i] = s;
            try {
                a[i] = eval(l.activation, s);
            } catch (const SingularityError& e) {
                throw SingularityError("layer " + std::to_string(li) + " unit " +
                                           std::to_string(i) + ": " + e.what(),
                                       e.at_re, e.at_im);
            } catch (const OverflowError& e) {
                throw OverflowError("layer " + std::to_string(li) + " unit " +
                                    std::to_string(i) + ": " + e.what());
            }
        }
        t.pre.push_back(std::move(z));
        t.act.push_back(std::move(a));
    }
    return t;
}

double loss(const ForwardTrace& trace, const std::vector<Complex>& d) {
    const std::vector<Complex>& o = trace.output();
    if (d.size() != o.size())
        throw Error("loss: target width " + std::to_string(d.size()) +
                    " != output width " + std::to_string(o.size()));
    double acc = 0.0;
    for (size_t k = 0; k < o.size(); ++k) {
        const Complex e = d[k] - o[k];
        acc += e.re * e.re + e.im * e.im;
    }
    return 0.5 * acc;
}

// ------------------------------------------------------------ serialization

namespace {
std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

void save_network(const Network& net, std::ostream& os) {
    os << "cvnn-network 1\n";
    os << "widths " << net.input_width;
    for (const Layer& l : net.layers) os << " " << l.n_out;
    os << "\n";
    for (size_t li = 0; li < net.layers.size(); ++li) {
        const Layer& l = net.layers[li];
        os << "layer " << li << " " << l.activation.display() << "\n";
        for (int i = 0; i < l.n_out; ++i)
            for (int j = 0; j < l.n_in; ++j)
                os << "w " << i << " " << j << " " << g17(l.W(i, j).re) << " "
                   << g17(l.W(i, j).im) << "\n";
        for (int i = 0; i < l.n_out; ++i)
            os << "b " << i << " " << g17(l.b[i].re) << " " << g17(l.b[i].im)
               << "\n";
    }
}

Network load_network(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "cvnn-network 1")
        throw IoError("not a cvnn network document");
    if (!std::getline(is, line) || line.rfind("widths ", 0) != 0)
        throw IoError("expected widths line");
    std::istringstream ws(line.substr(7));
    std::vector<int> widths;
    int w;
    while (ws >> w) widths.push_back(w);
    if (widths.size() < 2) throw IoError("bad widths");

    Network net;
    net.input_width = widths[0];
    for (size_t li = 0; li + 1 < widths.size(); ++li) {
        Layer l;
        l.n_in = widths[li];
        l.n_out = widths[li + 1];
        l.w.resize(static_cast<size_t>(l.n_in) * l.n_out);
        l.b.resize(l.n_out);
        net.layers.push_back(std::move(l));
    }

    int cur = -1;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "layer") {
            std::string af;
            ls >> cur >> af;
            if (cur < 0 || cur >= static_cast<int>(net.layers.size()))
                throw IoError("layer index out of range");
            net.layers[cur].activation = spec_from_string(af);
        } else if (tag == "w") {
            int i, j;
            double re, im;
            ls >> i >> j >> re >> im;
            net.layers[cur].W(i, j) = {re, im};
        } else if (tag == "b") {
            int i;
            double re, im;
            ls >> i >> re >> im;
            net.layers[cur].b[i] = {re, im};
        } else {
            throw IoError("unexpected line: " + line);
        }
    }
    net.check_shapes();
    return net;
}

void save_network_file(const Network& net, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path);
    save_network(net, f);
}

Network load_network_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot read " + path);
    return load_network(f);
}

}  // namespace cvnn
