#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>
#include <sstream>

#include "cvnn/tasks.hpp"
#include "cvnn/train.hpp"

using namespace cvnn;

TEST_CASE("xor dataset") {
    const Dataset ds = gen_xor();
    REQUIRE(ds.samples.size() == 4);
    CHECK(ds.input_width() == 1);
    CHECK(ds.target_width() == 1);

    std::set<std::pair<double, double>> inputs;
    for (const Sample& s : ds.samples)
        inputs.insert({s.input[0].re, s.input[0].im});
    CHECK(inputs.size() == 4);  // all distinct

    // the (0,0) sample encodes to the origin with target 0
    CHECK(ds.samples[0].input[0] == Complex{0, 0});
    CHECK(ds.samples[0].target[0].re == 0.0);
    // the (1,0) sample has real input 1 and real target 1
    bool found10 = false;
    for (const Sample& s : ds.samples) {
        if (s.input[0] == Complex{1, 0}) {
            found10 = true;
            CHECK(s.target[0].re == 1.0);
        }
    }
    CHECK(found10);
}

TEST_CASE("xor classifier counts an untrained and a crafted solution") {
    // hand-built solution: w real, bias centers both thresholds
    Network net;
    net.input_width = 1;
    Layer l;
    l.n_in = 1;
    l.n_out = 1;
    l.w = {{4.0, 0.0}};
    l.b = {{-2.0, -2.0}};
    l.activation = make_spec(ActId::split_tanh);
    net.layers.push_back(l);
    CHECK(xor_correct_count(net) == 4);
}

TEST_CASE("symmetry dataset") {
    SUBCASE("two bits") {
        const Dataset ds = gen_symmetry(2, 1);
        CHECK(ds.samples.size() == 4);
        // string 11 -> components (1, 1)/... packs to one complex 1+1i; palindrome
        for (const Sample& s : ds.samples) {
            const bool palin = s.input[0].re == s.input[0].im;
            CHECK(s.target[0].re == (palin ? 1.0 : 0.0));
        }
    }
    SUBCASE("four bits enumerates 16 strings") {
        const Dataset ds = gen_symmetry(4, 1);
        CHECK(ds.samples.size() == 16);
        CHECK(ds.input_width() == 2);
        int palindromes = 0;
        for (const Sample& s : ds.samples)
            if (s.target[0].re == 1.0) ++palindromes;
        CHECK(palindromes == 4);  // 0000 0110 1001 1111

        // 0110: bits b0=0,b1=1,b2=1,b3=0 -> inputs (0+1i, 1+0i), palindrome
        for (const Sample& s : ds.samples) {
            if (s.input[0] == Complex{0, 1} && s.input[1] == Complex{1, 0})
                CHECK(s.target[0].re == 1.0);
            // 0010: b0=0,b1=1,b2=0,b3=0 -> inputs (0+1i, 0+0i), not a palindrome
            if (s.input[0] == Complex{0, 1} && s.input[1] == Complex{0, 0})
                CHECK(s.target[0].re == 0.0);
        }
    }
    SUBCASE("oversized enumeration is subsampled deterministically") {
        const Dataset a = gen_symmetry(12, 9);
        const Dataset b = gen_symmetry(12, 9);
        CHECK(a.samples.size() == 1024);
        for (size_t k = 0; k < a.samples.size(); ++k)
            CHECK(a.samples[k].input[0] == b.samples[k].input[0]);
    }
    SUBCASE("invalid bit counts") {
        CHECK_THROWS_AS(gen_symmetry(3, 1), Error);
        CHECK_THROWS_AS(gen_symmetry(14, 1), Error);
        CHECK_THROWS_AS(gen_symmetry(0, 1), Error);
    }
}

TEST_CASE("qam dataset") {
    SUBCASE("order-4 symbols live on the unit integer grid") {
        const Dataset ds = gen_qam(4, 200, 0.0, {{1, 0}}, 3);
        for (const Sample& s : ds.samples) {
            CHECK(std::fabs(s.target[0].re) == 1.0);
            CHECK(std::fabs(s.target[0].im) == 1.0);
        }
    }
    SUBCASE("order-16 symbols on the odd integer grid") {
        const Dataset ds = gen_qam(16, 500, 0.0, {{1, 0}}, 3);
        std::set<std::pair<double, double>> seen;
        for (const Sample& s : ds.samples) {
            for (double c : {s.target[0].re, s.target[0].im})
                CHECK((std::fabs(c) == 1.0 || std::fabs(c) == 3.0));
            seen.insert({s.target[0].re, s.target[0].im});
        }
        CHECK(seen.size() == 16);
    }
    SUBCASE("zero noise and identity channel give input == target") {
        const Dataset ds = gen_qam(4, 100, 0.0, {{1, 0}}, 7);
        for (const Sample& s : ds.samples) {
            CHECK(s.input[0].re == s.target[0].re);
            CHECK(s.input[0].im == s.target[0].im);
        }
    }
    SUBCASE("fixed seeds reproduce datasets exactly") {
        const Dataset a = gen_qam(4, 50, 0.05, {{1, 0}, {0.3, 0.2}}, 11);
        const Dataset b = gen_qam(4, 50, 0.05, {{1, 0}, {0.3, 0.2}}, 11);
        for (size_t k = 0; k < a.samples.size(); ++k) {
            CHECK(a.samples[k].input[0] == b.samples[k].input[0]);
            CHECK(a.samples[k].target[0] == b.samples[k].target[0]);
        }
    }
    SUBCASE("ISI channel mixes the previous symbol in") {
        const Dataset ds = gen_qam(4, 50, 0.0, {{1, 0}, {0.3, 0.2}}, 11);
        bool differs = false;
        for (size_t k = 1; k < ds.samples.size(); ++k)
            if (!(ds.samples[k].input[0] == ds.samples[k].target[0])) differs = true;
        CHECK(differs);
    }
    SUBCASE("invalid parameters") {
        CHECK_THROWS_AS(gen_qam(8, 10, 0.0, {{1, 0}}, 1), Error);
        CHECK_THROWS_AS(gen_qam(4, 0, 0.0, {{1, 0}}, 1), Error);
        CHECK_THROWS_AS(gen_qam(4, 10, -0.1, {{1, 0}}, 1), Error);
        CHECK_THROWS_AS(gen_qam(4, 10, 0.0, {}, 1), Error);
    }
}

TEST_CASE("qam identity anchor: split_qam fixes the constellation") {
    // identity-weight 1-1 split_qam net on clean data reaches ~zero loss
    Network net;
    net.input_width = 1;
    Layer l;
    l.n_in = 1;
    l.n_out = 1;
    l.w = {{1, 0}};
    l.b = {{0, 0}};
    l.activation = make_spec(ActId::split_qam);
    net.layers.push_back(l);

    const Dataset ds = gen_qam(4, 200, 0.0, {{1, 0}}, 5);
    double total = 0;
    for (const Sample& s : ds.samples)
        total += loss(forward(net, s.input), s.target);
    CHECK(total / ds.samples.size() < 1e-6);
}

TEST_CASE("dataset serialization round-trips exactly") {
    const Dataset ds = gen_qam(4, 25, 0.05, {{1, 0}, {0.3, 0.2}}, 13);
    std::stringstream ss;
    save_dataset(ds, ss);
    const Dataset back = load_dataset(ss);
    CHECK(back.name == ds.name);
    CHECK(back.params_echo == ds.params_echo);
    REQUIRE(back.samples.size() == ds.samples.size());
    for (size_t k = 0; k < ds.samples.size(); ++k) {
        CHECK(back.samples[k].input[0] == ds.samples[k].input[0]);
        CHECK(back.samples[k].target[0] == ds.samples[k].target[0]);
    }
}
