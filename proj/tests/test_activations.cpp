#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "cvnn/activations.hpp"
#include "cvnn/rng.hpp"
#include "cvnn/wirtinger.hpp"

using namespace cvnn;

namespace {

ActivationSpec spec(ActId id) { return make_spec(id); }

// samples with clearance from declared singular/kink loci
std::vector<Complex> clear_samples(const ActivationSpec& s, int n, double radius,
                                   std::uint64_t seed, double clearance = 0.05) {
    SeededRng rng(seed);
    std::vector<Complex> out;
    while (static_cast<int>(out.size()) < n) {
        const Complex z = rng.in_disc(radius);
        if (singularity_distance(s, z) > clearance &&
            kink_distance(s, z) > clearance)
            out.push_back(z);
    }
    return out;
}

}  // namespace

TEST_CASE("catalog shape and metadata invariants") {
    const auto& all = catalog();
    CHECK(all.size() >= 34);

    std::set<std::string> names;
    int non_diff = 0;
    for (const ActivationSpec& s : all) {
        CHECK(names.insert(s.name()).second);  // ids unique
        if (s.holomorphic) CHECK(s.category == Category::fully_complex);
        if (!s.differentiable) {
            ++non_diff;
            CHECK(s.id == ActId::split_step);
        }
        CHECK_FALSE(s.fixture);
    }
    CHECK(non_diff == 1);
}

TEST_CASE("eval examples") {
    CHECK(eval(spec(ActId::split_tanh), {0, 0}) == Complex{0, 0});
    CHECK(eval(spec(ActId::split_crelu), {1, -2}) == Complex{1, 0});
    {
        ActParams p;
        p.b = -0.5;
        const Complex v = eval(make_spec(ActId::modrelu, p), {1, 0});
        CHECK(v.re == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(v.im == 0.0);
    }
    {
        ActParams p;
        p.a = 1.0;
        const Complex v = eval(make_spec(ActId::cap_pls, p), {3, 0});
        CHECK(v.re == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(v.im == 0.0);
    }
    CHECK(eval(spec(ActId::zrelu), {-1, 1}) == Complex{0, 0});
    {
        const Complex v = eval(spec(ActId::split_sigmoid), {0, 0});
        CHECK(v.re == 0.5);
        CHECK(v.im == 0.5);
    }
}

TEST_CASE("partials examples") {
    {
        const WirtingerJet j = partials(spec(ActId::split_tanh), {0, 0});
        CHECK(j.ux == 1.0);
        CHECK(j.vy == 1.0);
        CHECK(j.uy == 0.0);
        CHECK(j.vx == 0.0);
    }
    {
        const WirtingerJet j = partials(spec(ActId::fc_tanh), {0, 0});
        CHECK(abs(j.dz - Complex{1, 0}) < 1e-14);
        CHECK(abs(j.dzbar) < 1e-14);
    }
    {
        ActParams p;
        p.a = 1.0;
        p.b = 1.0;
        const WirtingerJet j = partials(make_spec(ActId::apsf, p), {0, 0});
        CHECK(j.ux == 1.0);
        CHECK(j.vy == 1.0);
        CHECK(j.uy == 0.0);
        CHECK(j.vx == 0.0);
    }
    {
        // parametric sigmoid derivative identity against the oracle on each axis
        ActParams p;
        p.c1 = 1.0;
        p.c2 = 1.0;
        const ActivationSpec s = make_spec(ActId::split_psigmoid, p);
        SeededRng rng(3);
        for (int k = 0; k < 25; ++k) {
            const Complex z = rng.in_disc(2.0);
            const WirtingerJet an = partials(s, z);
            const WirtingerJet fd =
                wirtinger_fd([&](Complex w) { return eval(s, w); }, z);
            CHECK(std::fabs(an.ux - fd.ux) < 1e-10 * std::max(1.0, std::fabs(fd.ux)) + 1e-10);
            CHECK(std::fabs(an.vy - fd.vy) < 1e-10 * std::max(1.0, std::fabs(fd.vy)) + 1e-10);
        }
    }
    CHECK_THROWS_AS(partials(spec(ActId::split_step), {0.5, 0.5}),
                    NonDifferentiableError);
    CHECK_THROWS_AS(partials(spec(ActId::split_hard_tanh), {1.0, 0.5}), KinkError);
}

TEST_CASE("oracle agreement across the differentiable catalog") {
    for (const ActivationSpec& s : catalog()) {
        if (!s.differentiable) continue;
        CAPTURE(s.name());
        const auto pts = clear_samples(s, 100, 1.5, 0x5eed + static_cast<int>(s.id));
        for (const Complex& z : pts) {
            const WirtingerJet an = partials(s, z);
            const WirtingerJet fd =
                wirtinger_fd([&](Complex w) { return eval(s, w); }, z);
            for (auto [a, f] : {std::pair{an.ux, fd.ux}, std::pair{an.uy, fd.uy},
                                std::pair{an.vx, fd.vx}, std::pair{an.vy, fd.vy}}) {
                const double tol = std::max(1e-4 * std::fabs(f), 1e-7);
                CHECK(std::fabs(a - f) <= tol);
            }
        }
    }
}

TEST_CASE("holomorphy classification at sampled points") {
    for (const ActivationSpec& s : catalog()) {
        if (!s.differentiable) continue;
        CAPTURE(s.name());
        if (s.holomorphic) {
            for (const Complex& z : clear_samples(s, 50, 1.5, 77)) {
                const auto [r1, r2] = cr_residual(partials(s, z));
                CHECK(r1 < 1e-6);
                CHECK(r2 < 1e-6);
            }
        }
    }
    // explicit split witness: split_tanh at 1+0i has ux = sech^2(1), vy = 1
    const WirtingerJet j = partials(spec(ActId::split_tanh), {1, 0});
    const double sech1 = 1.0 / std::cosh(1.0);
    CHECK(j.ux == doctest::Approx(sech1 * sech1).epsilon(1e-12));
    CHECK(j.vy == 1.0);
    const auto [r1, r2] = cr_residual(j);
    CHECK(r1 > 1e-3);
    CHECK(r2 == 0.0);
}

TEST_CASE("split structure: uy = vx = 0 identically") {
    for (const ActivationSpec& s : catalog()) {
        if (s.category != Category::split_real_imaginary || !s.differentiable)
            continue;
        CAPTURE(s.name());
        for (const Complex& z : clear_samples(s, 50, 2.0, 99)) {
            const WirtingerJet j = partials(s, z);
            CHECK(j.uy == 0.0);
            CHECK(j.vx == 0.0);
        }
    }
}

TEST_CASE("boundedness over seeded samples up to |z| = 50") {
    struct Expect {
        ActId id;
        double abs_bound = 0;       // 0 means check part bounds instead
        double lo = 0, hi = 0;
        bool strict = false;
    };
    const std::vector<Expect> expects = {
        {ActId::split_sigmoid, 0, 0.0, 1.0, true},
        {ActId::split_tanh, 0, -1.0, 1.0, true},
        {ActId::split_hard_tanh, 0, -1.0, 1.0, false},
        {ActId::aptf, 1.0, 0, 0, false},
        {ActId::apsf, 1.0, 0, 0, true},   // defaults a=1, b=1
        {ActId::cap_es, 1.0, 0, 0, true},
        {ActId::cap_arctans, M_PI / 2, 0, 0, true},
        {ActId::cap_erfa, 1.0, 0, 0, true},
    };
    // a few-ulp allowance: saturating values may round onto or a hair past
    // the boundary in double precision
    const double ulp_slack = 4 * 2.3e-16;
    for (const Expect& e : expects) {
        const ActivationSpec s = spec(e.id);
        CAPTURE(s.name());
        SeededRng rng(1234 + static_cast<int>(e.id));
        for (int k = 0; k < 10000; ++k) {
            const Complex v = eval(s, rng.in_disc(50.0));
            if (e.abs_bound > 0) {
                CHECK(abs(v) <= e.abs_bound * (1.0 + ulp_slack));
            } else {
                for (double part : {v.re, v.im}) {
                    CHECK(part >= e.lo - ulp_slack);
                    CHECK(part <= e.hi + ulp_slack);
                }
            }
        }
        // strict inequality holds wherever doubles can represent it
        if (e.strict) {
            for (int k = 0; k < 2000; ++k) {
                const Complex v = eval(s, rng.in_disc(4.0));
                if (e.abs_bound > 0) {
                    CHECK(abs(v) < e.abs_bound);
                } else {
                    for (double part : {v.re, v.im}) {
                        CHECK(part > e.lo);
                        CHECK(part < e.hi);
                    }
                }
            }
        }
    }
    // the apsf strict bound has true margin at every radius: |sigma| < b holds
    // verbatim over the full window
    {
        const ActivationSpec s = spec(ActId::apsf);
        SeededRng rng(4321);
        for (int k = 0; k < 10000; ++k)
            CHECK(abs(eval(s, rng.in_disc(50.0))) < s.params.b);
    }
}

TEST_CASE("phase preservation of the magnitude-modulating family") {
    const std::vector<ActId> ids = {
        ActId::aptf,    ActId::apsf,        ActId::siglog,  ActId::cap_es,
        ActId::cap_arctans, ActId::cap_erfa, ActId::cap_pls, ActId::cap_softplus,
        ActId::cap_swish, ActId::modrelu};
    for (ActId id : ids) {
        const ActivationSpec s = spec(id);
        CAPTURE(s.name());
        SeededRng rng(31 + static_cast<int>(id));
        int checked = 0;
        while (checked < 200) {
            const Complex z = rng.in_disc(3.0);
            if (abs(z) < 1e-9) continue;
            const Complex v = eval(s, z);
            if (abs(v) == 0.0) {  // modrelu dead zone
                ++checked;
                continue;
            }
            double d = std::fabs(arg(v) - arg(z));
            d = std::min(d, 2 * M_PI - d);
            CHECK(d < 1e-10);
            ++checked;
        }
    }
}

TEST_CASE("rotation equivariance of the amplitude-phase family") {
    for (const ActivationSpec& s : catalog()) {
        if (s.category != Category::amplitude_phase) continue;
        CAPTURE(s.name());
        SeededRng rng(47 + static_cast<int>(s.id));
        for (int k = 0; k < 50; ++k) {
            const Complex z = rng.in_disc(2.0);
            const double th = rng.uniform(0, 2 * M_PI);
            const Complex rot = from_polar(1.0, th);
            const Complex lhs = eval(s, rot * z);
            const Complex rhs = rot * eval(s, z);
            CHECK(abs(lhs - rhs) < 1e-12);
        }
    }
}

TEST_CASE("aptf point symmetry about the origin") {
    SeededRng rng(53);
    const ActivationSpec s = spec(ActId::aptf);
    for (int k = 0; k < 100; ++k) {
        const Complex z = rng.in_disc(3.0);
        CHECK(abs(eval(s, -z) + eval(s, z)) < 1e-12);
    }
}

TEST_CASE("line symmetries of the split family") {
    const std::vector<ActId> ids = {ActId::split_tanh,     ActId::split_sigmoid,
                                    ActId::split_elu,      ActId::split_mish,
                                    ActId::split_softplus, ActId::split_swish};
    SeededRng rng(59);
    for (ActId id : ids) {
        const ActivationSpec s = spec(id);
        CAPTURE(s.name());
        for (int k = 0; k < 50; ++k) {
            const Complex z = rng.in_disc(3.0);
            CHECK(eval(s, z).re == eval(s, conj(z)).re);
            CHECK(eval(s, z).im == eval(s, {-z.re, z.im}).im);
        }
    }
}

TEST_CASE("reduction identities") {
    SUBCASE("cardioid on the real axis is exactly relu") {
        const ActivationSpec s = spec(ActId::cardioid);
        for (double x : {-3.0, -1.0, -0.25, 0.0, 0.5, 1.0, 4.0}) {
            const Complex v = eval(s, {x, 0});
            CHECK(v.re == std::max(x, 0.0));
            CHECK(v.im == 0.0);
        }
    }
    SUBCASE("siglog equals apsf(1,1)") {
        ActParams p;
        p.a = 1.0;
        p.b = 1.0;
        const ActivationSpec sl = spec(ActId::siglog);
        const ActivationSpec ap = make_spec(ActId::apsf, p);
        SeededRng rng(61);
        for (int k = 0; k < 100; ++k) {
            const Complex z = rng.in_disc(4.0);
            const Complex a = eval(sl, z), b = eval(ap, z);
            CHECK(a.re == b.re);
            CHECK(a.im == b.im);
        }
    }
    SUBCASE("split_hard_tanh matches the half-difference-of-magnitudes form") {
        auto half_diff = [](double u) {
            return 0.5 * (std::fabs(u + 1.0) - std::fabs(u - 1.0));
        };
        const ActivationSpec s = spec(ActId::split_hard_tanh);
        for (double u : {-2.5, -1.0, -0.3, 0.0, 0.7, 1.0, 3.0}) {
            CHECK(eval(s, {u, 0}).re == doctest::Approx(half_diff(u)).epsilon(1e-15));
            CHECK(eval(s, {0, u}).im == doctest::Approx(half_diff(u)).epsilon(1e-15));
        }
    }
    SUBCASE("zrelu idempotence") {
        const ActivationSpec s = spec(ActId::zrelu);
        SeededRng rng(67);
        for (int k = 0; k < 100; ++k) {
            const Complex z = rng.in_disc(3.0);
            const Complex once = eval(s, z);
            const Complex twice = eval(s, once);
            CHECK(once.re == twice.re);
            CHECK(once.im == twice.im);
        }
    }
}

TEST_CASE("split-stanh extrema match the reported values") {
    const ActivationSpec s = spec(ActId::split_stanh);
    auto f = [&](double x) { return eval(s, {x, 0}).re; };
    // golden-section search over the bracketing intervals
    auto golden = [&](double a, double b, bool maximize) {
        const double gr = (std::sqrt(5.0) - 1) / 2;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        for (int it = 0; it < 200; ++it) {
            const double fc = maximize ? -f(c) : f(c);
            const double fd = maximize ? -f(d) : f(d);
            if (fc < fd) b = d; else a = c;
            c = b - gr * (b - a);
            d = a + gr * (b - a);
        }
        return 0.5 * (a + b);
    };
    const double xmax = golden(0.0, 10.0, true);
    const double xmin = golden(-10.0, 0.0, false);
    CHECK(std::fabs(f(xmax) - 1.01802) < 1e-3);
    CHECK(std::fabs(xmax - 4.06725) < 1e-2);
    CHECK(std::fabs(f(xmin) - (-0.0715838)) < 1e-3);
    CHECK(std::fabs(xmin - (-0.67288)) < 1e-2);
}

TEST_CASE("modrelu dead zone") {
    SUBCASE("negative bias zeroes the inner disc") {
        ActParams p;
        p.b = -0.7;
        const ActivationSpec s = make_spec(ActId::modrelu, p);
        SeededRng rng(71);
        for (int k = 0; k < 200; ++k) {
            const Complex z = rng.in_disc(0.69);
            CHECK(eval(s, z) == Complex{0, 0});
        }
    }
    SUBCASE("positive bias has no zero region off the origin") {
        ActParams p;
        p.b = 0.5;
        const ActivationSpec s = make_spec(ActId::modrelu, p);
        SeededRng rng(73);
        for (int k = 0; k < 200; ++k) {
            Complex z = rng.in_disc(2.0);
            if (abs(z) < 1e-6) continue;
            CHECK(abs(eval(s, z)) > 0.0);
        }
    }
}

TEST_CASE("singularity distances") {
    CHECK(singularity_distance(spec(ActId::fc_tanh), {0, M_PI / 2}) < 1e-15);
    CHECK(singularity_distance(spec(ActId::fc_swish), {0, M_PI}) < 1e-15);
    CHECK(singularity_distance(spec(ActId::split_tanh), {5, 5}) ==
          std::numeric_limits<double>::infinity());
    // lattice periodicity
    CHECK(singularity_distance(spec(ActId::fc_tanh), {0, 5 * M_PI / 2}) < 1e-12);
    CHECK(singularity_distance(spec(ActId::fc_tanh), {0.3, M_PI / 2}) ==
          doctest::Approx(0.3).epsilon(1e-12));
    // branch cuts through +-1
    const ActivationSpec at = spec(ActId::fc_arctanh);
    CHECK(singularity_distance(at, {1, 0}) < 1e-15);
    CHECK(singularity_distance(at, {-1, 0}) < 1e-15);
    CHECK(singularity_distance(at, {2.5, 0}) < 1e-15);  // on the cut ray
    CHECK(singularity_distance(at, {0, 0}) == doctest::Approx(1.0));
    CHECK(singularity_distance(at, {1, 0.5}) == doctest::Approx(0.5));
}

TEST_CASE("evaluation at singular loci raises a locus-carrying error") {
    const ActivationSpec s = spec(ActId::fc_tanh);
    CHECK_THROWS_AS(eval(s, {0, M_PI / 2}), SingularityError);
    try {
        eval(s, {0, M_PI / 2});
    } catch (const SingularityError& e) {
        CHECK(std::string(e.what()).find("lattice") != std::string::npos);
    }
    // overflow guard
    CHECK_THROWS_AS(eval(spec(ActId::fc_exp), {800, 0}), OverflowError);
}

TEST_CASE("suitability reports") {
    {
        const auto rep = suitability_report(spec(ActId::split_tanh), {{0, 0}});
        REQUIRE(rep.entries.size() == 1);
        CHECK(rep.entries[0].determinant == doctest::Approx(1.0));
        CHECK(rep.entries[0].suitable);
    }
    {
        const auto rep = suitability_report(make_spec(ActId::fx_const), {{0.5, 0.5}, {1, -1}});
        CHECK_FALSE(rep.suitable_everywhere);
        for (const auto& e : rep.entries) {
            CHECK(e.determinant == 0.0);
            CHECK_FALSE(e.exempt);
            CHECK_FALSE(e.suitable);
        }
    }
    {
        const auto rep = suitability_report(spec(ActId::split_crelu), {{1, 1}});
        REQUIRE(rep.entries.size() == 1);
        CHECK(rep.entries[0].determinant == doctest::Approx(1.0));
        CHECK(rep.entries[0].suitable);
    }
}

TEST_CASE("spec parsing round-trips") {
    const ActivationSpec a = spec_from_string("modrelu(b=-0.5)");
    CHECK(a.id == ActId::modrelu);
    CHECK(a.params.b == -0.5);
    CHECK(kink_distance(a, {0.5, 0}) < 1e-15);  // circle follows the override

    const ActivationSpec b = spec_from_string(a.display());
    CHECK(b.params.b == a.params.b);

    const ActivationSpec c = spec_from_string("zprelu(alpha=(0.25,-0.5))");
    CHECK(c.params.zalpha1.re == 0.25);
    CHECK(c.params.zalpha1.im == -0.5);

    CHECK_THROWS_AS(spec_from_string("no_such_af"), ConfigError);
    CHECK_THROWS_AS(spec_from_string("modrelu(q=1)"), ConfigError);
}

TEST_CASE("catalog records are parseable") {
    for (const ActivationSpec& s : catalog()) {
        const std::string rec = catalog_record(s, true);
        CHECK(rec.find("id=" + s.name()) == 0);
        CHECK(rec.find("category=") != std::string::npos);
        CHECK(rec.find("holomorphic=") != std::string::npos);
    }
}
