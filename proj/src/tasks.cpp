#include "cvnn/tasks.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cvnn/errors.hpp"
#include "cvnn/rng.hpp"

namespace cvnn {

Dataset gen_xor() {
    Dataset ds;
    ds.name = "xor";
    ds.params_echo =
        "input z=x1+i*x2; target d=x1+i*x2; class = parity of 0.5-thresholded parts";
    for (int x1 = 0; x1 <= 1; ++x1) {
        for (int x2 = 0; x2 <= 1; ++x2) {
            Sample s;
            s.input = {Complex(static_cast<double>(x1), static_cast<double>(x2))};
            s.target = {Complex(static_cast<double>(x1), static_cast<double>(x2))};
            ds.samples.push_back(std::move(s));
        }
    }
    return ds;
}

int xor_correct_count(const Network& net) {
    int correct = 0;
    for (int x1 = 0; x1 <= 1; ++x1) {
        for (int x2 = 0; x2 <= 1; ++x2) {
            const std::vector<Complex> in = {
                Complex(static_cast<double>(x1), static_cast<double>(x2))};
            Complex o;
            try {
                o = forward(net, in).output()[0];
            } catch (const Error&) {
                continue;  // counted as wrong
            }
            const bool bit_re = o.re >= 0.5;
            const bool bit_im = o.im >= 0.5;
            const bool predicted = bit_re != bit_im;
            if (predicted == ((x1 ^ x2) != 0)) ++correct;
        }
    }
    return correct;
}

Dataset gen_symmetry(int bits, std::uint64_t seed) {
    if (bits < 2 || bits > 12 || bits % 2 != 0)
        throw Error("gen_symmetry: bits must be even and in [2, 12]");
    Dataset ds;
    ds.name = "symmetry";
    ds.params_echo = "bits=" + std::to_string(bits) + " seed=" + std::to_string(seed);

    const std::uint64_t total = 1ull << bits;
    const std::uint64_t limit = 1024;
    std::vector<std::uint64_t> strings;
    if (total <= limit) {
        for (std::uint64_t v = 0; v < total; ++v) strings.push_back(v);
    } else {
        SeededRng rng(seed);
        for (std::uint64_t k = 0; k < limit; ++k) strings.push_back(rng.next_u64() % total);
    }

    for (std::uint64_t v : strings) {
        Sample s;
        bool palindrome = true;
        for (int j = 0; j < bits / 2; ++j) {
            const int lo = (v >> j) & 1u;
            const int hi = (v >> (bits - 1 - j)) & 1u;
            if (lo != hi) palindrome = false;
        }
        for (int k = 0; k < bits / 2; ++k) {
            const double re = static_cast<double>((v >> (2 * k)) & 1u);
            const double im = static_cast<double>((v >> (2 * k + 1)) & 1u);
            s.input.push_back({re, im});
        }
        s.target = {Complex(palindrome ? 1.0 : 0.0, 0.0)};
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

Dataset gen_qam(int order, int n, double noise_sigma,
                const std::vector<Complex>& taps, std::uint64_t seed) {
    if (order != 4 && order != 16) throw Error("gen_qam: order must be 4 or 16");
    if (n < 1) throw Error("gen_qam: n must be >= 1");
    if (noise_sigma < 0) throw Error("gen_qam: noise_sigma must be >= 0");
    if (taps.empty()) throw Error("gen_qam: channel taps must be nonempty");

    // integer-grid constellation: the lattice where split_qam is the identity
    std::vector<Complex> constellation;
    const int side = order == 4 ? 2 : 4;
    for (int i = 0; i < side; ++i)
        for (int j = 0; j < side; ++j)
            constellation.push_back({static_cast<double>(2 * i - side + 1),
                                     static_cast<double>(2 * j - side + 1)});

    Dataset ds;
    ds.name = "qam";
    {
        std::ostringstream os;
        os << "order=" << order << " n=" << n << " noise_sigma=" << noise_sigma
           << " taps=";
        for (size_t t = 0; t < taps.size(); ++t) {
            if (t) os << ";";
            os << "(" << taps[t].re << "," << taps[t].im << ")";
        }
        os << " seed=" << seed;
        ds.params_echo = os.str();
    }

    SeededRng rng(seed);
    std::vector<Complex> sent;
    sent.reserve(n);
    for (int k = 0; k < n; ++k)
        sent.push_back(constellation[rng.index(constellation.size())]);

    const double comp_sigma = noise_sigma / std::sqrt(2.0);
    for (int k = 0; k < n; ++k) {
        Complex r{};
        for (size_t m = 0; m < taps.size(); ++m) {
            const int idx = k - static_cast<int>(m);
            if (idx >= 0) r += taps[m] * sent[idx];
        }
        if (noise_sigma > 0)
            r += Complex{comp_sigma * rng.gaussian(), comp_sigma * rng.gaussian()};
        Sample s;
        s.input = {r};
        s.target = {sent[k]};
        ds.samples.push_back(std::move(s));
    }
    return ds;
}

namespace {
std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
}  // namespace

void save_dataset(const Dataset& ds, std::ostream& os) {
    os << "cvnn-dataset 1\n";
    os << "name " << ds.name << "\n";
    os << "params " << ds.params_echo << "\n";
    os << "widths " << ds.input_width() << " " << ds.target_width() << "\n";
    os << "count " << ds.samples.size() << "\n";
    for (const Sample& s : ds.samples) {
        os << "sample";
        for (Complex z : s.input) os << " " << g17(z.re) << " " << g17(z.im);
        os << " |";
        for (Complex z : s.target) os << " " << g17(z.re) << " " << g17(z.im);
        os << "\n";
    }
}

Dataset load_dataset(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "cvnn-dataset 1")
        throw IoError("not a cvnn dataset document");
    Dataset ds;
    int win = 0, wout = 0;
    size_t count = 0;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string tag;
        ls >> tag;
        if (tag == "name") {
            ls >> ds.name;
        } else if (tag == "params") {
            std::getline(ls, ds.params_echo);
            if (!ds.params_echo.empty() && ds.params_echo[0] == ' ')
                ds.params_echo.erase(ds.params_echo.begin());
        } else if (tag == "widths") {
            ls >> win >> wout;
        } else if (tag == "count") {
            ls >> count;
        } else if (tag == "sample") {
            Sample s;
            for (int k = 0; k < win; ++k) {
                double re, im;
                ls >> re >> im;
                s.input.push_back({re, im});
            }
            std::string bar;
            ls >> bar;
            if (bar != "|") throw IoError("bad sample line: " + line);
            for (int k = 0; k < wout; ++k) {
                double re, im;
                ls >> re >> im;
                s.target.push_back({re, im});
            }
            ds.samples.push_back(std::move(s));
        } else {
            throw IoError("unexpected dataset line: " + line);
        }
    }
    if (ds.samples.size() != count) throw IoError("dataset count mismatch");
    return ds;
}

}  // namespace cvnn
