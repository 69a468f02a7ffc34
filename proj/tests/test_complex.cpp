#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cvnn/complex.hpp"
#include "cvnn/rng.hpp"
#include "cvnn/wirtinger.hpp"

using namespace cvnn;

TEST_CASE("polar branch table") {
    SUBCASE("positive real axis") {
        const Polar p = polar({1, 0});
        CHECK(p.magnitude == 1.0);
        CHECK(p.argument == 0.0);
    }
    SUBCASE("positive imaginary axis") {
        const Polar p = polar({0, 1});
        CHECK(p.magnitude == 1.0);
        CHECK(p.argument == doctest::Approx(M_PI / 2).epsilon(1e-15));
    }
    SUBCASE("lower-left quadrant") {
        const Polar p = polar({-1, -1});
        CHECK(p.magnitude == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
        CHECK(p.argument == doctest::Approx(-3 * M_PI / 4).epsilon(1e-15));
    }
    SUBCASE("negative real axis maps to +pi") {
        CHECK(arg({-2, 0}) == doctest::Approx(M_PI).epsilon(1e-15));
    }
    SUBCASE("negative imaginary axis") {
        CHECK(arg({0, -3}) == doctest::Approx(-M_PI / 2).epsilon(1e-15));
    }
    SUBCASE("origin yields the undefined sentinel, magnitude 0") {
        const Polar p = polar({0, 0});
        CHECK(p.magnitude == 0.0);
        CHECK(std::isnan(p.argument));
    }
    SUBCASE("range is (-pi, pi]") {
        SeededRng rng(11);
        for (int k = 0; k < 200; ++k) {
            const Complex z = rng.in_disc(5.0);
            if (z == Complex{0, 0}) continue;
            const double a = arg(z);
            CHECK(a > -M_PI);
            CHECK(a <= M_PI);
        }
    }
}

TEST_CASE("absolute square: z * conj(z) equals |z|^2 to a few ulp") {
    SeededRng rng(5);
    for (int k = 0; k < 100; ++k) {
        const Complex z = rng.in_disc(10.0);
        const Complex p = z * conj(z);
        CHECK(p.im == 0.0);
        const double m = abs(z);
        CHECK(p.re == doctest::Approx(m * m).epsilon(4 * 2.3e-16));
        CHECK(p.re >= 0.0);
    }
}

TEST_CASE("product law in polar form") {
    SeededRng rng(7);
    for (int k = 0; k < 100; ++k) {
        Complex z1 = rng.in_disc(2.0);
        Complex z2 = rng.in_disc(2.0);
        if (abs(z1) < 1e-6 || abs(z2) < 1e-6) continue;
        const Polar p = polar(z1 * z2);
        CHECK(p.magnitude ==
              doctest::Approx(abs(z1) * abs(z2)).epsilon(1e-12));
        // arguments add modulo 2*pi
        double expect = arg(z1) + arg(z2);
        double diff = std::fabs(expect - p.argument);
        diff = std::fmod(diff, 2 * M_PI);
        diff = std::min(diff, 2 * M_PI - diff);
        CHECK(diff < 1e-12);
    }
}

TEST_CASE("conjugation distributes over products exactly") {
    SeededRng rng(9);
    for (int k = 0; k < 100; ++k) {
        const Complex z1 = rng.in_disc(3.0);
        const Complex z2 = rng.in_disc(3.0);
        const Complex lhs = conj(z1 * z2);
        const Complex rhs = conj(z1) * conj(z2);
        CHECK(lhs.re == rhs.re);
        CHECK(lhs.im == rhs.im);
    }
}

TEST_CASE("division and reciprocal") {
    const Complex w{3, 4}, z{1, -2};
    const Complex q = w / z;
    const Complex back = q * z;
    CHECK(back.re == doctest::Approx(w.re).epsilon(1e-14));
    CHECK(back.im == doctest::Approx(w.im).epsilon(1e-14));
}

TEST_CASE("finite-difference jets reproduce the independence identities") {
    // d z / d z = 1, d z / d z* = 0
    const WirtingerJet jz = wirtinger_fd([](Complex z) { return z; }, {3, 2});
    CHECK(abs(jz.dz - Complex{1, 0}) < 1e-8);
    CHECK(abs(jz.dzbar) < 1e-8);

    // d z* / d z* = 1, d z* / d z = 0
    const WirtingerJet jc = wirtinger_fd([](Complex z) { return conj(z); }, {1, 1});
    CHECK(abs(jc.dz) < 1e-8);
    CHECK(abs(jc.dzbar - Complex{1, 0}) < 1e-8);
}

TEST_CASE("finite-difference jet of z^2 matches the analytic derivative") {
    const Complex at{1, 1};
    const WirtingerJet j = wirtinger_fd([](Complex z) { return z * z; }, at);
    CHECK(abs(j.dz - Complex{2, 2}) < 1e-6);
    CHECK(abs(j.dzbar) < 1e-6);
    // value components of the square map
    CHECK(j.value.re == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(j.value.im == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("jet assembly is recomputable from the four partials") {
    SeededRng rng(13);
    for (int k = 0; k < 50; ++k) {
        const Complex z = rng.in_disc(2.0);
        const WirtingerJet j =
            wirtinger_fd([](Complex w) { return w * w * conj(w); }, z);
        const Complex dz{0.5 * (j.ux + j.vy), 0.5 * (j.vx - j.uy)};
        const Complex dzbar{0.5 * (j.ux - j.vy), 0.5 * (j.vx + j.uy)};
        CHECK(abs(dz - j.dz) < 1e-12);
        CHECK(abs(dzbar - j.dzbar) < 1e-12);
    }
}

TEST_CASE("conjugation symmetry of the jet pair") {
    // conj(dz of f) equals dzbar of conj(f)
    auto f = [](Complex z) { return z * z + Complex{0.5, 0.25} * conj(z); };
    auto fbar = [&](Complex z) { return conj(f(z)); };
    SeededRng rng(17);
    for (int k = 0; k < 20; ++k) {
        const Complex z = rng.in_disc(1.5);
        const WirtingerJet jf = wirtinger_fd(f, z);
        const WirtingerJet jfb = wirtinger_fd(fbar, z);
        CHECK(abs(conj(jf.dz) - jfb.dzbar) < 1e-7);
    }
}

TEST_CASE("product rule for the z-derivative") {
    // f = z^2, g = z*: d(fg)/dz = (df/dz) g + f (dg/dz) = 2 z z*
    SeededRng rng(19);
    for (int k = 0; k < 20; ++k) {
        const Complex z = rng.in_disc(1.5);
        const WirtingerJet j =
            wirtinger_fd([](Complex w) { return (w * w) * conj(w); }, z);
        const Complex expect = 2.0 * (z * conj(z));
        CHECK(abs(j.dz - expect) < 1e-6);
    }
}

TEST_CASE("cr_residual flags non-holomorphic maps") {
    SUBCASE("z^2 is holomorphic") {
        const auto [r1, r2] =
            cr_residual(wirtinger_fd([](Complex z) { return z * z; }, {1, 1}));
        CHECK(r1 < 1e-6);
        CHECK(r2 < 1e-6);
    }
    SUBCASE("conj fails with residual 2") {
        const auto [r1, r2] =
            cr_residual(wirtinger_fd([](Complex z) { return conj(z); }, {0.3, -0.7}));
        CHECK(r1 == doctest::Approx(2.0).epsilon(1e-6));
        CHECK(r2 == doctest::Approx(0.0).epsilon(1e-6));
    }
    SUBCASE("Re(z) fails with residual 1") {
        const auto [r1, r2] = cr_residual(
            wirtinger_fd([](Complex z) { return Complex{z.re, 0}; }, {2, 1}));
        CHECK(r1 == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(r2 == doctest::Approx(0.0).epsilon(1e-6));
    }
}

TEST_CASE("oracle failure names the offending stencil point") {
    auto f = [](Complex z) -> Complex {
        if (z.re > 1.0) return {std::numeric_limits<double>::quiet_NaN(), 0};
        return z;
    };
    CHECK_THROWS_AS(wirtinger_fd(f, {1.0, 0.0}, 1e-3), OracleError);
    try {
        wirtinger_fd(f, {1.0, 0.0}, 1e-3);
    } catch (const OracleError& e) {
        CHECK(std::string(e.what()).find("stencil") != std::string::npos);
    }
}

TEST_CASE("seeded rng is reproducible and disc-bounded") {
    SeededRng a(42), b(42);
    for (int k = 0; k < 100; ++k) {
        const Complex za = a.in_disc(0.1);
        const Complex zb = b.in_disc(0.1);
        CHECK(za.re == zb.re);
        CHECK(za.im == zb.im);
        CHECK(abs(za) <= 0.1);
    }
}
