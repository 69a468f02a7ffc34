#include "cvnn/activations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace cvnn {

namespace {

constexpr double kSingularityTol = 1e-12;
constexpr double kKinkTol = 1e-12;
constexpr double kExpArgLimit = 700.0;  // double-precision exp limit

double fmt_g17(double v, char* buf, size_t n) {
    std::snprintf(buf, n, "%.17g", v);
    return v;
}

std::string num17(double v) {
    char buf[40];
    fmt_g17(v, buf, sizeof buf);
    return buf;
}

std::string cplx17(Complex z) {
    return "(" + num17(z.re) + "," + num17(z.im) + ")";
}

}  // namespace

// ---------------------------------------------------------------- loci

double Locus::distance(Complex z) const {
    const double x = z.re, y = z.im;
    auto nearest_lattice = [](double t, double phase, double period) {
        // distance from t to the nearest phase + period*n
        double d = std::remainder(t - phase, period);
        return std::fabs(d);
    };
    switch (shape) {
        case Shape::points: {
            double best = std::numeric_limits<double>::infinity();
            for (const Complex& p : pts) best = std::min(best, abs(z - p));
            return best;
        }
        case Shape::vertical_lattice: {
            const double dy = nearest_lattice(y, phase, period);
            return std::sqrt((x - x0) * (x - x0) + dy * dy);
        }
        case Shape::horizontal_lattice: {
            const double dx = nearest_lattice(x, phase, period);
            return std::sqrt(dx * dx + (y - y0) * (y - y0));
        }
        case Shape::ray_re: {
            const double along = sign * (x - start);
            if (along >= 0) return std::fabs(y - y0);
            return std::sqrt((x - start) * (x - start) + (y - y0) * (y - y0));
        }
        case Shape::ray_im: {
            const double along = sign * (y - start);
            if (along >= 0) return std::fabs(x - x0);
            return std::sqrt((x - x0) * (x - x0) + (y - start) * (y - start));
        }
        case Shape::circle:
            return std::fabs(abs(z) - r);
        case Shape::line_re:
            return std::fabs(x - c);
        case Shape::line_im:
            return std::fabs(y - c);
    }
    return std::numeric_limits<double>::infinity();
}

std::string Locus::describe() const {
    std::ostringstream os;
    switch (shape) {
        case Shape::points: {
            os << "points";
            for (const Complex& p : pts) os << " (" << p.re << "," << p.im << ")";
            break;
        }
        case Shape::vertical_lattice:
            os << "z = " << x0 << " + i(" << phase << " + " << period << "n)";
            break;
        case Shape::horizontal_lattice:
            os << "z = (" << phase << " + " << period << "n) + " << y0 << "i";
            break;
        case Shape::ray_re:
            os << "ray Im z = " << y0 << ", " << (sign > 0 ? "Re z >= " : "Re z <= ")
               << start;
            break;
        case Shape::ray_im:
            os << "ray Re z = " << x0 << ", " << (sign > 0 ? "Im z >= " : "Im z <= ")
               << start;
            break;
        case Shape::circle:
            os << "circle |z| = " << r;
            break;
        case Shape::line_re:
            os << "line Re z = " << c;
            break;
        case Shape::line_im:
            os << "line Im z = " << c;
            break;
    }
    return os.str();
}

Locus Locus::make_points(std::vector<Complex> p) {
    Locus l;
    l.shape = Shape::points;
    l.pts = std::move(p);
    return l;
}
Locus Locus::make_vertical_lattice(double x0, double phase, double period) {
    Locus l;
    l.shape = Shape::vertical_lattice;
    l.x0 = x0;
    l.phase = phase;
    l.period = period;
    return l;
}
Locus Locus::make_horizontal_lattice(double y0, double phase, double period) {
    Locus l;
    l.shape = Shape::horizontal_lattice;
    l.y0 = y0;
    l.phase = phase;
    l.period = period;
    return l;
}
Locus Locus::make_ray_re(double y0, double start, int sign) {
    Locus l;
    l.shape = Shape::ray_re;
    l.y0 = y0;
    l.start = start;
    l.sign = sign;
    return l;
}
Locus Locus::make_ray_im(double x0, double start, int sign) {
    Locus l;
    l.shape = Shape::ray_im;
    l.x0 = x0;
    l.start = start;
    l.sign = sign;
    return l;
}
Locus Locus::make_circle(double r) {
    Locus l;
    l.shape = Shape::circle;
    l.r = r;
    return l;
}
Locus Locus::make_line_re(double c) {
    Locus l;
    l.shape = Shape::line_re;
    l.c = c;
    return l;
}
Locus Locus::make_line_im(double c) {
    Locus l;
    l.shape = Shape::line_im;
    l.c = c;
    return l;
}

std::string singularity_kind_name(SingularityDescriptor::Kind k) {
    switch (k) {
        case SingularityDescriptor::Kind::isolated_essential: return "isolated-essential";
        case SingularityDescriptor::Kind::pole: return "pole";
        case SingularityDescriptor::Kind::removable: return "removable";
        case SingularityDescriptor::Kind::branch_cut: return "branch-cut";
        case SingularityDescriptor::Kind::countable_lattice: return "countable-lattice";
    }
    return "?";
}

std::string SingularityDescriptor::describe() const {
    return singularity_kind_name(kind) + ": " + locus.describe();
}

std::string category_name(Category c) {
    switch (c) {
        case Category::split_real_imaginary: return "split-real-imaginary";
        case Category::split_phase_amplitude: return "split-phase-amplitude";
        case Category::amplitude_phase: return "amplitude-phase";
        case Category::fully_complex: return "fully-complex";
    }
    return "?";
}

// ---------------------------------------------------------------- catalog

namespace {

struct IdInfo {
    ActId id;
    const char* name;
};

const IdInfo kIdTable[] = {
    {ActId::split_step, "split_step"},
    {ActId::split_sigmoid, "split_sigmoid"},
    {ActId::split_psigmoid, "split_psigmoid"},
    {ActId::split_tanh, "split_tanh"},
    {ActId::split_stanh, "split_stanh"},
    {ActId::split_hard_tanh, "split_hard_tanh"},
    {ActId::split_crelu, "split_crelu"},
    {ActId::split_qam, "split_qam"},
    {ActId::aptf, "aptf"},
    {ActId::apsf, "apsf"},
    {ActId::siglog, "siglog"},
    {ActId::cardioid, "cardioid"},
    {ActId::modrelu, "modrelu"},
    {ActId::fc_tanh, "fc_tanh"},
    {ActId::fc_sigmoid, "fc_sigmoid"},
    {ActId::fc_tan, "fc_tan"},
    {ActId::fc_sin, "fc_sin"},
    {ActId::fc_arctan, "fc_arctan"},
    {ActId::fc_arcsin, "fc_arcsin"},
    {ActId::fc_arccos, "fc_arccos"},
    {ActId::fc_sinh, "fc_sinh"},
    {ActId::fc_arctanh, "fc_arctanh"},
    {ActId::fc_arcsinh, "fc_arcsinh"},
    {ActId::zrelu, "zrelu"},
    {ActId::z3relu, "z3relu"},
    {ActId::zprelu, "zprelu"},
    {ActId::z3prelu, "z3prelu"},
    {ActId::fc_exp, "fc_exp"},
    {ActId::split_elu, "split_elu"},
    {ActId::split_mish, "split_mish"},
    {ActId::split_softplus, "split_softplus"},
    {ActId::split_swish, "split_swish"},
    {ActId::fc_swish, "fc_swish"},
    {ActId::fc_mish, "fc_mish"},
    {ActId::cap_pls, "cap_pls"},
    {ActId::cap_es, "cap_es"},
    {ActId::cap_arctans, "cap_arctans"},
    {ActId::cap_erfa, "cap_erfa"},
    {ActId::cap_softplus, "cap_softplus"},
    {ActId::cap_elu, "cap_elu"},
    {ActId::cap_swish, "cap_swish"},
    {ActId::fx_identity, "fx_identity"},
    {ActId::fx_conj, "fx_conj"},
    {ActId::fx_const, "fx_const"},
};

using Kind = SingularityDescriptor::Kind;

SingularityDescriptor sing(Kind k, Locus l) {
    SingularityDescriptor s;
    s.kind = k;
    s.locus = std::move(l);
    return s;
}

}  // namespace

std::string ActivationSpec::name() const {
    for (const IdInfo& i : kIdTable)
        if (i.id == id) return i.name;
    return "?";
}

std::optional<ActId> id_from_name(const std::string& name) {
    for (const IdInfo& i : kIdTable)
        if (name == i.name) return i.id;
    return std::nullopt;
}

// Parameter names meaningful for an id, with formatted current values.
static std::vector<std::pair<std::string, std::string>> param_list(
    const ActivationSpec& s) {
    const ActParams& p = s.params;
    switch (s.id) {
        case ActId::split_psigmoid:
            return {{"c1", num17(p.c1)}, {"c2", num17(p.c2)}};
        case ActId::split_qam:
        case ActId::split_elu:
            return {{"alpha", num17(p.alpha)}};
        case ActId::split_swish:
            return {{"beta", num17(p.beta)}};
        case ActId::apsf:
            return {{"a", num17(p.a)}, {"b", num17(p.b)}};
        case ActId::modrelu:
        case ActId::cap_swish:
            return {{"b", num17(p.b)}};
        case ActId::cap_pls:
        case ActId::cap_softplus:
            return {{"a", num17(p.a)}};
        case ActId::cap_elu:
            return {{"alpha", num17(p.alpha)}, {"b", num17(p.b)}};
        case ActId::zprelu:
            return {{"alpha", cplx17(p.zalpha1)}};
        case ActId::z3prelu:
            return {{"alpha1", cplx17(p.zalpha1)},
                    {"alpha2", cplx17(p.zalpha2)},
                    {"alpha3", cplx17(p.zalpha3)}};
        default:
            return {};
    }
}

std::string ActivationSpec::display() const {
    auto ps = param_list(*this);
    if (ps.empty()) return name();
    std::string out = name() + "(";
    for (size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ",";
        out += ps[i].first + "=" + ps[i].second;
    }
    return out + ")";
}

ActivationSpec make_spec(ActId id) {
    ActivationSpec s;
    s.id = id;
    ActParams& p = s.params;
    const double inf = std::numeric_limits<double>::infinity();
    (void)inf;
    using L = Locus;
    switch (id) {
        case ActId::split_step:
            s.category = Category::split_real_imaginary;
            s.differentiable = false;
            s.bounded_on = "parts in {0,1} everywhere";
            s.part_bounds = {{0.0, 1.0}};
            s.kinks = {L::make_line_re(0), L::make_line_im(0)};
            break;
        case ActId::split_sigmoid:
            s.category = Category::split_real_imaginary;
            s.bounded_on = "parts in (0,1) everywhere";
            s.part_bounds = {{0.0, 1.0}};
            s.part_bounds_strict = true;
            break;
        case ActId::split_psigmoid:
            s.category = Category::split_real_imaginary;
            p.c1 = 1.0;
            p.c2 = 2.0;
            s.bounded_on = "parts in (-c1,c1) everywhere";
            s.part_bounds = {{-1.0, 1.0}};
            s.part_bounds_strict = true;
            break;
        case ActId::split_tanh:
            s.category = Category::split_real_imaginary;
            s.bounded_on = "parts in (-1,1) everywhere";
            s.part_bounds = {{-1.0, 1.0}};
            s.part_bounds_strict = true;
            break;
        case ActId::split_stanh:
            s.category = Category::split_real_imaginary;
            s.bounded_on = "parts in [-0.0715838, 1.01802] everywhere";
            s.part_bounds = {{-0.07159, 1.01803}};
            break;
        case ActId::split_hard_tanh:
            s.category = Category::split_real_imaginary;
            s.bounded_on = "parts in [-1,1] everywhere";
            s.part_bounds = {{-1.0, 1.0}};
            s.kinks = {L::make_line_re(-1), L::make_line_re(1),
                       L::make_line_im(-1), L::make_line_im(1)};
            break;
        case ActId::split_crelu:
            s.category = Category::split_real_imaginary;
            s.bounded_on = "unbounded (parts >= 0)";
            s.kinks = {L::make_line_re(0), L::make_line_im(0)};
            break;
        case ActId::split_qam:
            s.category = Category::split_real_imaginary;
            p.alpha = 0.25;
            s.bounded_on = "unbounded";
            break;
        case ActId::aptf:
            s.category = Category::amplitude_phase;
            s.bounded_on = "|sigma| <= 1 everywhere";
            s.abs_bound = 1.0;
            break;
        case ActId::apsf:
            s.category = Category::amplitude_phase;
            p.a = 1.0;
            p.b = 1.0;
            s.bounded_on = "|sigma| < b everywhere";
            s.abs_bound = 1.0;  // tracks params.b; refreshed below
            s.abs_bound_strict = true;
            break;
        case ActId::siglog:
            s.category = Category::amplitude_phase;
            s.bounded_on = "|sigma| < 1 everywhere";
            s.abs_bound = 1.0;
            s.abs_bound_strict = true;
            break;
        case ActId::cardioid:
            s.category = Category::fully_complex;
            s.bounded_on = "unbounded (|sigma| <= |z|)";
            s.kinks = {L::make_points({{0, 0}})};
            break;
        case ActId::modrelu:
            s.category = Category::amplitude_phase;
            p.b = -0.7;
            s.bounded_on = "unbounded";
            break;
        case ActId::fc_tanh:
            s.holomorphic = true;
            s.bounded_on = "bounded on |z| < pi/2";
            s.singularities = {sing(Kind::countable_lattice,
                                    L::make_vertical_lattice(0, M_PI / 2, M_PI))};
            break;
        case ActId::fc_sigmoid:
            s.holomorphic = true;
            s.bounded_on = "bounded away from the singular lattice";
            s.singularities = {sing(Kind::countable_lattice,
                                    L::make_vertical_lattice(0, M_PI, 2 * M_PI))};
            break;
        case ActId::fc_tan:
            s.holomorphic = true;
            s.bounded_on = "bounded on |z| < pi/2";
            s.singularities = {sing(Kind::countable_lattice,
                                    L::make_horizontal_lattice(0, M_PI / 2, M_PI))};
            break;
        case ActId::fc_sin:
            s.holomorphic = true;
            s.bounded_on = "bounded on |z| <= pi/2 (entire, unbounded in Im)";
            break;
        case ActId::fc_arctan:
            s.holomorphic = true;
            s.bounded_on = "bounded off the imaginary-axis cuts";
            s.singularities = {
                sing(Kind::isolated_essential, L::make_points({{0, 1}, {0, -1}})),
                sing(Kind::branch_cut, L::make_ray_im(0, 1, +1)),
                sing(Kind::branch_cut, L::make_ray_im(0, -1, -1))};
            break;
        case ActId::fc_arcsin:
            s.holomorphic = true;
            s.bounded_on = "bounded on bounded sets; slow radial growth";
            s.singularities = {sing(Kind::branch_cut, L::make_ray_re(0, 1, +1)),
                               sing(Kind::branch_cut, L::make_ray_re(0, -1, -1))};
            break;
        case ActId::fc_arccos:
            s.holomorphic = true;
            s.bounded_on = "bounded on bounded sets; slow radial growth";
            s.singularities = {sing(Kind::branch_cut, L::make_ray_re(0, 1, +1)),
                               sing(Kind::branch_cut, L::make_ray_re(0, -1, -1))};
            break;
        case ActId::fc_sinh:
            s.holomorphic = true;
            s.bounded_on = "bounded on |z| <= pi/2 (entire, unbounded in Re)";
            break;
        case ActId::fc_arctanh:
            s.holomorphic = true;
            s.bounded_on = "bounded off the real-axis cuts";
            s.singularities = {
                sing(Kind::isolated_essential, L::make_points({{1, 0}, {-1, 0}})),
                sing(Kind::branch_cut, L::make_ray_re(0, 1, +1)),
                sing(Kind::branch_cut, L::make_ray_re(0, -1, -1))};
            break;
        case ActId::fc_arcsinh:
            s.holomorphic = true;
            s.bounded_on = "bounded on bounded sets; slow radial growth";
            s.singularities = {sing(Kind::branch_cut, L::make_ray_im(0, 1, +1)),
                               sing(Kind::branch_cut, L::make_ray_im(0, -1, -1))};
            break;
        case ActId::zrelu:
            s.category = Category::fully_complex;
            s.bounded_on = "unbounded (|sigma| <= |z|)";
            s.kinks = {L::make_ray_re(0, 0, +1), L::make_ray_im(0, 0, +1)};
            break;
        case ActId::z3relu:
            s.category = Category::fully_complex;
            s.bounded_on = "unbounded (|sigma| <= |z|)";
            s.kinks = {L::make_ray_re(0, 0, -1), L::make_ray_im(0, 0, -1)};
            break;
        case ActId::zprelu:
            s.category = Category::fully_complex;
            p.zalpha1 = {0.1, 0.0};
            s.bounded_on = "unbounded";
            s.kinks = {L::make_ray_re(0, 0, +1), L::make_ray_im(0, 0, +1)};
            break;
        case ActId::z3prelu:
            s.category = Category::fully_complex;
            p.zalpha1 = {0.1, 0.0};
            p.zalpha2 = {0.1, 0.0};
            p.zalpha3 = {0.1, 0.0};
            s.bounded_on = "unbounded";
            s.kinks = {L::make_ray_re(0, 0, +1), L::make_ray_im(0, 0, +1),
                       L::make_ray_re(0, 0, -1), L::make_ray_im(0, 0, -1)};
            break;
        case ActId::fc_exp:
            s.holomorphic = true;
            s.bounded_on = "entire; unbounded as Re z grows";
            break;
        case ActId::split_elu:
            s.category = Category::split_real_imaginary;
            p.alpha = 1.0;
            s.bounded_on = "unbounded above (parts > -alpha)";
            break;
        case ActId::split_mish:
            s.category = Category::split_real_imaginary;
            s.bounded_on = "unbounded above (parts > -0.309)";
            break;
        case ActId::split_softplus:
            s.category = Category::split_real_imaginary;
            s.bounded_on = "unbounded above (parts > 0)";
            break;
        case ActId::split_swish:
            s.category = Category::split_real_imaginary;
            p.beta = 1.0;
            s.bounded_on = "unbounded above (parts > -0.279)";
            break;
        case ActId::fc_swish:
            s.holomorphic = true;
            s.bounded_on = "bounded away from the singular lattice";
            s.singularities = {sing(Kind::countable_lattice,
                                    L::make_vertical_lattice(0, M_PI, 2 * M_PI))};
            break;
        case ActId::fc_mish:
            s.holomorphic = true;
            s.bounded_on = "bounded away from the singular lattices";
            s.singularities = {
                sing(Kind::countable_lattice,
                     L::make_vertical_lattice(std::log(2.0) / 2, 3 * M_PI / 4,
                                              2 * M_PI)),
                sing(Kind::countable_lattice,
                     L::make_vertical_lattice(std::log(2.0) / 2, -3 * M_PI / 4,
                                              2 * M_PI))};
            break;
        case ActId::cap_pls:
            s.category = Category::amplitude_phase;
            p.a = 1.0;
            s.bounded_on = "|sigma| <= a everywhere";
            s.abs_bound = 1.0;
            s.kinks = {L::make_circle(1.0)};
            break;
        case ActId::cap_es:
            s.category = Category::amplitude_phase;
            s.bounded_on = "|sigma| < 1 everywhere";
            s.abs_bound = 1.0;
            s.abs_bound_strict = true;
            break;
        case ActId::cap_arctans:
            s.category = Category::amplitude_phase;
            s.bounded_on = "|sigma| < pi/2 everywhere";
            s.abs_bound = M_PI / 2;
            s.abs_bound_strict = true;
            break;
        case ActId::cap_erfa:
            s.category = Category::amplitude_phase;
            s.bounded_on = "|sigma| < 1 everywhere";
            s.abs_bound = 1.0;
            s.abs_bound_strict = true;
            break;
        case ActId::cap_softplus:
            s.category = Category::amplitude_phase;
            p.a = 1.0;
            s.bounded_on = "unbounded (|sigma| ~ |z| - a)";
            s.kinks = {L::make_points({{0, 0}})};
            break;
        case ActId::cap_elu:
            s.category = Category::amplitude_phase;
            p.alpha = 1.0;
            p.b = -1.0;
            s.bounded_on = "unbounded";
            s.kinks = {L::make_circle(1.0), L::make_points({{0, 0}})};
            break;
        case ActId::cap_swish:
            s.category = Category::amplitude_phase;
            p.b = 1.0;
            s.bounded_on = "unbounded (|sigma| ~ |z|)";
            break;
        case ActId::fx_identity:
            s.holomorphic = true;
            s.fixture = true;
            s.bounded_on = "unbounded";
            break;
        case ActId::fx_conj:
            s.fixture = true;
            s.bounded_on = "unbounded";
            break;
        case ActId::fx_const:
            s.holomorphic = true;
            s.fixture = true;
            s.bounded_on = "constant";
            s.abs_bound = 1.0;
            break;
    }
    return s;
}

// Re-derive the parameter-dependent loci and bounds after an override.
static void refresh_derived(ActivationSpec& s) {
    const ActParams& p = s.params;
    switch (s.id) {
        case ActId::split_psigmoid:
            s.part_bounds = {{-std::fabs(p.c1), std::fabs(p.c1)}};
            break;
        case ActId::apsf:
            s.abs_bound = p.b;
            break;
        case ActId::modrelu:
            s.kinks.clear();
            if (p.b < 0)
                s.kinks.push_back(Locus::make_circle(-p.b));
            else if (p.b > 0)
                s.kinks.push_back(Locus::make_points({{0, 0}}));
            break;
        case ActId::split_elu:
            s.kinks.clear();
            if (p.alpha != 1.0) {
                s.kinks.push_back(Locus::make_line_re(0));
                s.kinks.push_back(Locus::make_line_im(0));
            }
            break;
        case ActId::cap_pls:
            s.abs_bound = p.a;
            s.kinks = {Locus::make_circle(p.a)};
            break;
        case ActId::cap_elu:
            s.kinks.clear();
            if (p.b < 0) s.kinks.push_back(Locus::make_circle(-p.b));
            s.kinks.push_back(Locus::make_points({{0, 0}}));
            break;
        default:
            break;
    }
}

ActivationSpec make_spec(ActId id, const ActParams& overrides) {
    ActivationSpec s = make_spec(id);
    s.params = overrides;
    refresh_derived(s);
    return s;
}

const std::vector<ActivationSpec>& catalog() {
    static const std::vector<ActivationSpec> all = [] {
        std::vector<ActivationSpec> v;
        for (const IdInfo& i : kIdTable) {
            ActivationSpec s = make_spec(i.id);
            refresh_derived(s);
            if (!s.fixture) v.push_back(std::move(s));
        }
        return v;
    }();
    return all;
}

// ------------------------------------------------------------ distances

double singularity_distance(const ActivationSpec& spec, Complex z) {
    double best = std::numeric_limits<double>::infinity();
    for (const SingularityDescriptor& s : spec.singularities)
        best = std::min(best, s.locus.distance(z));
    return best;
}

double kink_distance(const ActivationSpec& spec, Complex z) {
    double best = std::numeric_limits<double>::infinity();
    for (const Locus& l : spec.kinks) best = std::min(best, l.distance(z));
    return best;
}

// ------------------------------------------------------ real 1-D pieces

namespace {

double r_sigmoid(double u) { return 1.0 / (1.0 + std::exp(-u)); }

double r_softplus(double u) {
    if (u > 30.0) return u + std::log1p(std::exp(-u));
    return std::log1p(std::exp(u));
}

double r_tanh(double u) { return std::tanh(u); }

double r_stanh(double u) {
    if (u < -300.0) return 0.0;  // denominator dominates; value underflows
    return std::tanh(u) / (1.0 - (u - 3.0) * std::exp(-u));
}

double r_stanh_deriv(double u) {
    if (u < -300.0) return 0.0;
    const double n = std::tanh(u);
    const double np = 1.0 - n * n;
    const double e = std::exp(-u);
    const double d = 1.0 - (u - 3.0) * e;
    const double dp = e * (u - 4.0);
    return (np * d - n * dp) / (d * d);
}

double split_value(const ActivationSpec& s, double u) {
    const ActParams& p = s.params;
    switch (s.id) {
        case ActId::split_step: return u >= 0.0 ? 1.0 : 0.0;
        case ActId::split_sigmoid: return r_sigmoid(u);
        case ActId::split_psigmoid:
            return 2.0 * p.c1 / (1.0 + std::exp(-p.c2 * u)) - p.c1;
        case ActId::split_tanh: return r_tanh(u);
        case ActId::split_stanh: return r_stanh(u);
        case ActId::split_hard_tanh:
            // piecewise form of (|u+1| - |u-1|)/2; exactly bounded
            return u < -1.0 ? -1.0 : u > 1.0 ? 1.0 : u;
        case ActId::split_crelu: return std::max(u, 0.0);
        case ActId::split_qam: return u + p.alpha * std::sin(M_PI * u);
        case ActId::split_elu:
            return u > 0.0 ? u : p.alpha * std::expm1(u);
        case ActId::split_mish: return u * std::tanh(r_softplus(u));
        case ActId::split_softplus: return r_softplus(u);
        case ActId::split_swish: return u * r_sigmoid(p.beta * u);
        default: break;
    }
    throw Error("split_value: not a split id");
}

double split_deriv(const ActivationSpec& s, double u) {
    const ActParams& p = s.params;
    switch (s.id) {
        case ActId::split_sigmoid: {
            const double y = r_sigmoid(u);
            return y * (1.0 - y);
        }
        case ActId::split_psigmoid: {
            const double y = split_value(s, u);
            return p.c2 / (2.0 * p.c1) * (p.c1 * p.c1 - y * y);
        }
        case ActId::split_tanh: {
            const double y = r_tanh(u);
            return 1.0 - y * y;
        }
        case ActId::split_stanh: return r_stanh_deriv(u);
        case ActId::split_hard_tanh: return std::fabs(u) < 1.0 ? 1.0 : 0.0;
        case ActId::split_crelu: return u > 0.0 ? 1.0 : 0.0;
        case ActId::split_qam:
            return 1.0 + p.alpha * M_PI * std::cos(M_PI * u);
        case ActId::split_elu: return u > 0.0 ? 1.0 : p.alpha * std::exp(u);
        case ActId::split_mish: {
            const double t = std::tanh(r_softplus(u));
            return t + u * (1.0 - t * t) * r_sigmoid(u);
        }
        case ActId::split_softplus: return r_sigmoid(u);
        case ActId::split_swish: {
            const double sg = r_sigmoid(p.beta * u);
            return sg + p.beta * u * sg * (1.0 - sg);
        }
        default: break;
    }
    throw Error("split_deriv: not differentiable");
}

// --------------------------------------------- amplitude-phase pieces

struct Radial {
    double g = 0;       // modulated magnitude
    double gp = 0;      // dg/dr
};

Radial radial(const ActivationSpec& s, double r) {
    const ActParams& p = s.params;
    switch (s.id) {
        case ActId::aptf: {
            const double g = std::tanh(r);
            return {g, 1.0 - g * g};
        }
        case ActId::apsf:
        case ActId::siglog: {
            const double a = s.id == ActId::siglog ? 1.0 : p.a;
            const double b = s.id == ActId::siglog ? 1.0 : p.b;
            const double den = a * b + r;
            return {b * r / den, a * b * b / (den * den)};
        }
        case ActId::modrelu: {
            if (r + p.b >= 0.0) return {r + p.b, 1.0};
            return {0.0, 0.0};
        }
        case ActId::cap_pls:
            return r < p.a ? Radial{r, 1.0} : Radial{p.a, 0.0};
        case ActId::cap_es: {
            const double e = std::exp(-r);
            return {1.0 - e, e};
        }
        case ActId::cap_arctans:
            return {std::atan(r), 1.0 / (1.0 + r * r)};
        case ActId::cap_erfa:
            return {std::erf(r), 2.0 / std::sqrt(M_PI) * std::exp(-r * r)};
        case ActId::cap_softplus:
            return {r_softplus(r - p.a), r_sigmoid(r - p.a)};
        case ActId::cap_elu: {
            if (r < -p.b) return {r + p.b, 1.0};
            if (r + p.b > kExpArgLimit)
                throw OverflowError("cap_elu: exponential overflow at |z| = " +
                                    std::to_string(r));
            const double e = std::exp(r + p.b);
            return {p.alpha * (e - 1.0), p.alpha * e};
        }
        case ActId::cap_swish: {
            const double e = std::exp(p.b - r);
            const double den = 1.0 + e;
            return {r / den, (1.0 + e * (1.0 + r)) / (den * den)};
        }
        default: break;
    }
    throw Error("radial: not an amplitude-phase id");
}

bool is_amplitude_phase(ActId id) {
    switch (id) {
        case ActId::aptf:
        case ActId::apsf:
        case ActId::siglog:
        case ActId::modrelu:
        case ActId::cap_pls:
        case ActId::cap_es:
        case ActId::cap_arctans:
        case ActId::cap_erfa:
        case ActId::cap_softplus:
        case ActId::cap_elu:
        case ActId::cap_swish:
            return true;
        default:
            return false;
    }
}

bool is_split(ActId id) {
    switch (id) {
        case ActId::split_step:
        case ActId::split_sigmoid:
        case ActId::split_psigmoid:
        case ActId::split_tanh:
        case ActId::split_stanh:
        case ActId::split_hard_tanh:
        case ActId::split_crelu:
        case ActId::split_qam:
        case ActId::split_elu:
        case ActId::split_mish:
        case ActId::split_softplus:
        case ActId::split_swish:
            return true;
        default:
            return false;
    }
}

// -------------------------------------------------- fully complex pieces

Complex csigmoid_guarded(Complex z) {
    if (std::fabs(z.re) > kExpArgLimit)
        throw OverflowError("sigmoid: |Re z| beyond the exp limit at " +
                            to_string(z));
    return Complex{1, 0} / (Complex{1, 0} + cexp(-z));
}

Complex csoftplus(Complex z) {
    // log(1 + e^z), stable for large positive real parts
    if (z.re > 30.0) return z + clog(Complex{1, 0} + cexp(-z));
    return clog(Complex{1, 0} + cexp(z));
}

// 0-based quadrant index from the principal argument lifted to [0, 2pi):
// 0: [0, pi/2], 1: (pi/2, pi], 2: (pi, 3pi/2], 3: (3pi/2, 2pi)
int arg_quadrant(Complex z) {
    double th = arg(z);
    if (th < 0) th += 2 * M_PI;
    if (th <= M_PI / 2) return 0;
    if (th <= M_PI) return 1;
    if (th <= 3 * M_PI / 2) return 2;
    return 3;
}

Complex fc_value(const ActivationSpec& s, Complex z) {
    const ActParams& p = s.params;
    switch (s.id) {
        case ActId::fc_tanh: return ctanh(z);
        case ActId::fc_sigmoid: return csigmoid_guarded(z);
        case ActId::fc_tan: return ctan(z);
        case ActId::fc_sin: return csin(z);
        case ActId::fc_arctan: return catan(z);
        case ActId::fc_arcsin: return casin(z);
        case ActId::fc_arccos: return cacos(z);
        case ActId::fc_sinh: return csinh(z);
        case ActId::fc_arctanh: return catanh(z);
        case ActId::fc_arcsinh: return casinh(z);
        case ActId::fc_exp:
            if (z.re > kExpArgLimit)
                throw OverflowError("fc_exp: Re z beyond the exp limit at " +
                                    to_string(z));
            return cexp(z);
        case ActId::fc_swish: return z * csigmoid_guarded(z);
        case ActId::fc_mish:
            if (std::fabs(z.re) > kExpArgLimit)
                throw OverflowError("fc_mish: |Re z| beyond the exp limit at " +
                                    to_string(z));
            return z * ctanh(csoftplus(z));
        case ActId::zrelu: {
            if (z == Complex{0, 0}) return {0, 0};
            return arg_quadrant(z) == 0 ? z : Complex{0, 0};
        }
        case ActId::z3relu:
            return (z.re > 0.0 || z.im > 0.0) ? z : Complex{0, 0};
        case ActId::zprelu: {
            if (z == Complex{0, 0}) return {0, 0};
            return arg_quadrant(z) == 0 ? z : p.zalpha1 * z;
        }
        case ActId::z3prelu: {
            if (z == Complex{0, 0}) return {0, 0};
            switch (arg_quadrant(z)) {
                case 0: return z;
                case 1: return p.zalpha1 * z;
                case 2: return p.zalpha2 * z;
                default: return p.zalpha3 * z;
            }
        }
        case ActId::fx_identity: return z;
        case ActId::fx_conj: return conj(z);
        case ActId::fx_const: return {1, 0};
        default: break;
    }
    throw Error("fc_value: not a fully-complex id");
}

// sigma'(z) for the holomorphic entries (and the piecewise-linear z-family,
// which is holomorphic on each open sector).
Complex fc_derivative(const ActivationSpec& s, Complex z) {
    const ActParams& p = s.params;
    const Complex one{1, 0};
    switch (s.id) {
        case ActId::fc_tanh: {
            const Complex t = ctanh(z);
            return one - t * t;
        }
        case ActId::fc_sigmoid: {
            const Complex sg = csigmoid_guarded(z);
            return sg * (one - sg);
        }
        case ActId::fc_tan: {
            const Complex t = ctan(z);
            return one + t * t;
        }
        case ActId::fc_sin: return ccos(z);
        case ActId::fc_arctan: return one / (one + z * z);
        case ActId::fc_arcsin: return one / csqrt(one - z * z);
        case ActId::fc_arccos: return -(one / csqrt(one - z * z));
        case ActId::fc_sinh: return ccosh(z);
        case ActId::fc_arctanh: return one / (one - z * z);
        case ActId::fc_arcsinh: return one / csqrt(one + z * z);
        case ActId::fc_exp: return cexp(z);
        case ActId::fc_swish: {
            const Complex sg = csigmoid_guarded(z);
            return sg + z * sg * (one - sg);
        }
        case ActId::fc_mish: {
            const Complex t = ctanh(csoftplus(z));
            return t + z * (one - t * t) * csigmoid_guarded(z);
        }
        case ActId::zrelu:
            return arg_quadrant(z) == 0 ? one : Complex{0, 0};
        case ActId::z3relu:
            return (z.re > 0.0 || z.im > 0.0) ? one : Complex{0, 0};
        case ActId::zprelu:
            return arg_quadrant(z) == 0 ? one : p.zalpha1;
        case ActId::z3prelu:
            switch (arg_quadrant(z)) {
                case 0: return one;
                case 1: return p.zalpha1;
                case 2: return p.zalpha2;
                default: return p.zalpha3;
            }
        case ActId::fx_identity: return one;
        case ActId::fx_const: return {0, 0};
        default: break;
    }
    throw Error("fc_derivative: no complex derivative");
}

}  // namespace

// ------------------------------------------------------------------ eval

Complex eval(const ActivationSpec& spec, Complex z) {
    if (!is_finite(z)) throw Error("eval: non-finite input " + to_string(z));
    for (const SingularityDescriptor& sd : spec.singularities) {
        if (sd.kind == SingularityDescriptor::Kind::branch_cut) continue;
        if (sd.locus.distance(z) < kSingularityTol)
            throw SingularityError(spec.name() + ": evaluation at singular locus {" +
                                       sd.describe() + "} near " + to_string(z),
                                   z.re, z.im);
    }

    Complex out;
    if (is_split(spec.id)) {
        out = {split_value(spec, z.re), split_value(spec, z.im)};
    } else if (is_amplitude_phase(spec.id)) {
        const double r = abs(z);
        if (r == 0.0) return {0, 0};  // total definition at the origin
        const double w = radial(spec, r).g / r;
        out = {w * z.re, w * z.im};
    } else if (spec.id == ActId::cardioid) {
        if (z == Complex{0, 0}) return {0, 0};
        const double t = std::cos(arg(z));
        out = 0.5 * (1.0 + t) * z;
    } else {
        out = fc_value(spec, z);
    }
    if (!is_finite(out))
        throw OverflowError(spec.name() + ": non-finite value at " + to_string(z));
    return out;
}

// -------------------------------------------------------------- partials

WirtingerJet partials(const ActivationSpec& spec, Complex z) {
    if (!spec.differentiable)
        throw NonDifferentiableError(spec.name() + " has no derivatives");
    for (const SingularityDescriptor& sd : spec.singularities) {
        if (sd.locus.distance(z) < kSingularityTol)
            throw SingularityError(spec.name() + ": partials at singular locus {" +
                                       sd.describe() + "}",
                                   z.re, z.im);
    }
    for (const Locus& l : spec.kinks) {
        if (l.distance(z) < kKinkTol)
            throw KinkError(spec.name() + ": partials at non-smooth locus {" +
                                l.describe() + "}",
                            z.re, z.im);
    }

    const Complex value = eval(spec, z);

    if (is_split(spec.id)) {
        return make_jet(value, split_deriv(spec, z.re), 0.0, 0.0,
                        split_deriv(spec, z.im));
    }

    if (is_amplitude_phase(spec.id)) {
        const double r = abs(z);
        if (spec.id == ActId::modrelu && spec.params.b < 0 && r < -spec.params.b) {
            return make_jet(value, 0, 0, 0, 0);  // dead zone
        }
        if (r == 0.0) {
            // smooth origin: slope g'(0) in every direction
            const double gp0 = radial(spec, 0.0).gp;
            return make_jet(value, gp0, 0.0, 0.0, gp0);
        }
        const Radial rad = radial(spec, r);
        const double x = z.re, y = z.im;
        const double r2 = r * r, r3 = r2 * r;
        const double cross = x * y * (rad.gp / r2 - rad.g / r3);
        return make_jet(value, rad.gp * x * x / r2 + rad.g * y * y / r3, cross,
                        cross, rad.gp * y * y / r2 + rad.g * x * x / r3);
    }

    if (spec.id == ActId::cardioid) {
        const double x = z.re, y = z.im, r = abs(z);
        const double r3 = r * r * r;
        return make_jet(value, 0.5 * (1.0 + 2.0 * x / r - x * x * x / r3),
                        -x * x * y / (2.0 * r3), y * y * y / (2.0 * r3),
                        0.5 * (1.0 + x / r - x * y * y / r3));
    }

    if (spec.id == ActId::fx_conj) {
        return make_jet(value, 1.0, 0.0, 0.0, -1.0);
    }

    // fully complex: sigma' fixes all four partials through the CR structure
    const Complex d = fc_derivative(spec, z);
    return make_jet(value, d.re, -d.im, d.im, d.re);
}

// ---------------------------------------------------------- suitability

SuitabilityReport suitability_report(const ActivationSpec& spec,
                                     const std::vector<Complex>& sample_points) {
    constexpr double kZeroTol = 1e-10;
    SuitabilityReport rep;
    for (Complex z : sample_points) {
        WirtingerJet j;
        try {
            j = partials(spec, z);
        } catch (const Error&) {
            ++rep.skipped;
            continue;
        }
        SuitabilityEntry e;
        e.at = z;
        e.determinant = j.ux * j.vy - j.uy * j.vx;
        const bool d_zero = std::fabs(e.determinant) < kZeroTol;
        const bool ex1 = std::fabs(j.ux) < kZeroTol && std::fabs(j.vx) < kZeroTol &&
                         std::fabs(j.uy) >= kZeroTol && std::fabs(j.vy) >= kZeroTol;
        const bool ex2 = std::fabs(j.uy) < kZeroTol && std::fabs(j.vy) < kZeroTol &&
                         std::fabs(j.ux) >= kZeroTol && std::fabs(j.vx) >= kZeroTol;
        e.exempt = ex1 || ex2;
        e.suitable = !d_zero || e.exempt;
        if (!e.suitable) rep.suitable_everywhere = false;
        rep.entries.push_back(e);
    }
    return rep;
}

// -------------------------------------------------------------- parsing

namespace {

Complex parse_complex_literal(const std::string& t) {
    // "(re,im)" or a plain real number
    if (!t.empty() && t.front() == '(') {
        const auto comma = t.find(',');
        const auto close = t.rfind(')');
        if (comma == std::string::npos || close == std::string::npos)
            throw ConfigError("bad complex literal: " + t);
        return {std::stod(t.substr(1, comma - 1)),
                std::stod(t.substr(comma + 1, close - comma - 1))};
    }
    return {std::stod(t), 0.0};
}

}  // namespace

ActivationSpec spec_from_string(const std::string& text) {
    std::string name = text;
    std::string args;
    const auto open = text.find('(');
    if (open != std::string::npos) {
        if (text.back() != ')') throw ConfigError("bad activation syntax: " + text);
        name = text.substr(0, open);
        args = text.substr(open + 1, text.size() - open - 2);
    }
    const auto id = id_from_name(name);
    if (!id) throw ConfigError("unknown activation id: " + name);
    ActivationSpec s = make_spec(*id);

    // split args on commas at depth zero
    std::vector<std::string> kvs;
    int depth = 0;
    std::string cur;
    for (char ch : args) {
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            kvs.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) kvs.push_back(cur);

    for (const std::string& kv : kvs) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("expected key=value in activation params: " + kv);
        std::string k = kv.substr(0, eq);
        std::string v = kv.substr(eq + 1);
        // trim spaces
        auto trim = [](std::string& t) {
            while (!t.empty() && t.front() == ' ') t.erase(t.begin());
            while (!t.empty() && t.back() == ' ') t.pop_back();
        };
        trim(k);
        trim(v);
        ActParams& p = s.params;
        if (k == "a") p.a = std::stod(v);
        else if (k == "b") p.b = std::stod(v);
        else if (k == "c1") p.c1 = std::stod(v);
        else if (k == "c2") p.c2 = std::stod(v);
        else if (k == "alpha" && (*id == ActId::zprelu)) p.zalpha1 = parse_complex_literal(v);
        else if (k == "alpha") p.alpha = std::stod(v);
        else if (k == "beta") p.beta = std::stod(v);
        else if (k == "alpha1") p.zalpha1 = parse_complex_literal(v);
        else if (k == "alpha2") p.zalpha2 = parse_complex_literal(v);
        else if (k == "alpha3") p.zalpha3 = parse_complex_literal(v);
        else throw ConfigError("unknown parameter '" + k + "' for " + name);
    }
    refresh_derived(s);
    return s;
}

std::string catalog_record(const ActivationSpec& spec, bool records) {
    std::ostringstream os;
    auto params_str = [&] {
        auto ps = param_list(spec);
        std::string out;
        for (size_t i = 0; i < ps.size(); ++i) {
            if (i) out += ",";
            out += ps[i].first + "=" + ps[i].second;
        }
        return out.empty() ? std::string("-") : out;
    };
    auto sing_str = [&] {
        std::string out;
        for (size_t i = 0; i < spec.singularities.size(); ++i) {
            if (i) out += "; ";
            out += spec.singularities[i].describe();
        }
        return out.empty() ? std::string("none") : out;
    };
    auto kink_str = [&] {
        std::string out;
        for (size_t i = 0; i < spec.kinks.size(); ++i) {
            if (i) out += "; ";
            out += spec.kinks[i].describe();
        }
        return out.empty() ? std::string("none") : out;
    };
    if (records) {
        os << "id=" << spec.name() << " category=" << category_name(spec.category)
           << " params=" << params_str()
           << " differentiable=" << (spec.differentiable ? 1 : 0)
           << " holomorphic=" << (spec.holomorphic ? 1 : 0) << " bounded=\""
           << spec.bounded_on << "\" singularities=\"" << sing_str()
           << "\" kinks=\"" << kink_str() << "\"";
    } else {
        char line[256];
        std::snprintf(line, sizeof line, "%-16s %-22s %-28s %c %c  ",
                      spec.name().c_str(), category_name(spec.category).c_str(),
                      params_str().c_str(), spec.differentiable ? 'd' : '-',
                      spec.holomorphic ? 'h' : '-');
        os << line << spec.bounded_on << "; singularities: " << sing_str()
           << "; kinks: " << kink_str();
    }
    return os.str();
}

}  // namespace cvnn
