#include "cvnn/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cvnn/rng.hpp"
#include "cvnn/wirtinger.hpp"

namespace cvnn {

GridSpec parse_grid(const std::string& text) {
    // remin:remax:immin:immax:NXxNY
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.size() != 5) throw ConfigError("bad grid flag: " + text);
    GridSpec g;
    try {
        g.re_min = std::stod(parts[0]);
        g.re_max = std::stod(parts[1]);
        g.im_min = std::stod(parts[2]);
        g.im_max = std::stod(parts[3]);
        const auto x = parts[4].find('x');
        if (x == std::string::npos) throw ConfigError("");
        g.nx = std::stoi(parts[4].substr(0, x));
        g.ny = std::stoi(parts[4].substr(x + 1));
    } catch (const std::exception&) {
        throw ConfigError("bad grid flag: " + text);
    }
    g.validate();
    return g;
}

std::string CheckReport::record() const {
    std::ostringstream os;
    char wbuf[40];
    std::snprintf(wbuf, sizeof wbuf, "%.6g", worst);
    os << "check=" << id << " pass=" << (pass ? 1 : 0) << " worst=" << wbuf
       << " samples=" << samples << " skipped=" << skipped;
    os << " witness=";
    if (witnesses.empty()) {
        os << "-";
    } else {
        for (size_t i = 0; i < witnesses.size(); ++i) {
            if (i) os << ";";
            os << "(" << witnesses[i].re << "," << witnesses[i].im << ")";
        }
    }
    os << " detail=\"" << detail << "\"";
    return os.str();
}

// ------------------------------------------------------------------ cr_scan

CheckReport cr_scan(const ActivationSpec& spec, const GridSpec& grid,
                    double exclusion_radius) {
    grid.validate();
    CheckReport rep;
    rep.id = "cr_scan/" + spec.name();
    if (!spec.differentiable) {
        rep.pass = false;
        rep.detail = "precondition: spec is not differentiable";
        return rep;
    }
    auto f = [&](Complex z) { return eval(spec, z); };
    double worst = 0.0;
    Complex worst_at{};
    long n = 0;
    int skipped = 0;
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const Complex z = grid.node(ix, iy);
            if (singularity_distance(spec, z) <= exclusion_radius ||
                kink_distance(spec, z) <= exclusion_radius) {
                ++skipped;
                continue;
            }
            WirtingerJet j;
            try {
                j = wirtinger_fd(f, z, thresholds::kCrScanFdStep);
            } catch (const Error&) {
                ++skipped;
                continue;
            }
            const auto [r1, r2] = cr_residual(j);
            const double r = std::max(r1, r2);
            if (r > worst) {
                worst = r;
                worst_at = z;
            }
            ++n;
        }
    }
    rep.samples = n;
    rep.skipped = skipped;
    rep.worst = worst;
    rep.pass = n > 0 && worst < thresholds::kCrResidualMax;
    if (!rep.pass || worst >= thresholds::kCrWitnessMin)
        rep.witnesses = {worst_at};
    rep.detail = rep.pass ? "holomorphy confirmed on the window"
                          : "CR violation witness present";
    return rep;
}

// ----------------------------------------------------------- liouville_probe

CheckReport liouville_probe(const ActivationSpec& spec,
                            const std::vector<double>& radii) {
    CheckReport rep;
    rep.id = "liouville/" + spec.name();
    if (radii.empty()) throw ConfigError("liouville_probe: no radii");
    constexpr int kAngles = 720;

    std::vector<double> maxima;
    bool constant = true;
    Complex first_value{};
    bool have_first = false;
    for (double r : radii) {
        double m = 0.0;
        for (int k = 0; k < kAngles; ++k) {
            const double th = 2.0 * M_PI * k / kAngles;
            const Complex z = from_polar(r, th);
            try {
                const Complex v = eval(spec, z);
                m = std::max(m, abs(v));
                if (!have_first) {
                    first_value = v;
                    have_first = true;
                } else if (abs(v - first_value) > 1e-12) {
                    constant = false;
                }
            } catch (const Error&) {
                ++rep.skipped;
            }
            ++rep.samples;
        }
        maxima.push_back(m);
    }

    const double r_max = *std::max_element(radii.begin(), radii.end());
    const bool sing_inside = singularity_distance(spec, {0, 0}) <= r_max;
    const double growth =
        maxima.back() / std::max(maxima.front(), 1e-300);
    rep.worst = maxima.back();

    std::ostringstream det;
    det << "max|sigma| per radius:";
    for (size_t i = 0; i < radii.size(); ++i)
        det << " r=" << radii[i] << "->" << maxima[i];
    if (!spec.holomorphic) {
        rep.pass = true;
        det << "; non-holomorphic, no entire-boundedness constraint";
    } else if (constant) {
        rep.pass = true;
        det << "; constant";
    } else if (sing_inside) {
        rep.pass = true;
        det << "; declared singularity within r=" << r_max;
    } else if (growth >= thresholds::kLiouvilleGrowth) {
        rep.pass = true;
        det << "; unbounded growth (ratio " << growth << ")";
    } else {
        rep.pass = false;  // bounded entire nonconstant: inconsistent flags
        det << "; bounded growth without declared singularities";
    }
    rep.detail = det.str();
    return rep;
}

// -------------------------------------------------------------- grad_check

namespace {

struct ParamRef {
    int layer;
    bool bias;
    size_t idx;
};

std::vector<ParamRef> enumerate_params(const Network& net) {
    std::vector<ParamRef> out;
    for (size_t li = 0; li < net.layers.size(); ++li) {
        for (size_t k = 0; k < net.layers[li].w.size(); ++k)
            out.push_back({static_cast<int>(li), false, k});
        for (size_t k = 0; k < net.layers[li].b.size(); ++k)
            out.push_back({static_cast<int>(li), true, k});
    }
    return out;
}

Complex& param_at(Network& net, const ParamRef& p) {
    return p.bias ? net.layers[p.layer].b[p.idx] : net.layers[p.layer].w[p.idx];
}

Complex grad_at(const GradientSet& g, const ParamRef& p) {
    return p.bias ? g.b[p.layer][p.idx] : g.w[p.layer][p.idx];
}

}  // namespace

CheckReport grad_check(const Network& net, Algorithm algo, const Sample& sample,
                       double fd_step) {
    CheckReport rep;
    rep.id = "grad/" + algorithm_name(algo);

    GradientSet analytic;
    try {
        const ForwardTrace t = forward(net, sample.input);
        analytic = backward(net, t, sample.target, algo);
    } catch (const SingularityError&) {
        rep.pass = false;
        ++rep.skipped;
        rep.detail = "skipped: trace on singular locus";
        return rep;
    } catch (const KinkError&) {
        rep.pass = false;
        ++rep.skipped;
        rep.detail = "skipped: trace on kink locus";
        return rep;
    }

    Network work = net;
    double worst = 0.0;  // deviation normalized by its tolerance; <= 1 passes
    bool all_ok = true;
    for (const ParamRef& p : enumerate_params(work)) {
        const Complex saved = param_at(work, p);
        auto loss_with = [&](Complex v) -> double {
            param_at(work, p) = v;
            const double l = loss(forward(work, sample.input), sample.target);
            param_at(work, p) = saved;
            return l;
        };
        Complex fd;
        try {
            const double lre_p = loss_with({saved.re + fd_step, saved.im});
            const double lre_m = loss_with({saved.re - fd_step, saved.im});
            const double lim_p = loss_with({saved.re, saved.im + fd_step});
            const double lim_m = loss_with({saved.re, saved.im - fd_step});
            fd = {(lre_p - lre_m) / (2 * fd_step), (lim_p - lim_m) / (2 * fd_step)};
        } catch (const Error&) {
            param_at(work, p) = saved;
            ++rep.skipped;
            continue;
        }
        const Complex an = grad_at(analytic, p);
        const double dev = abs(an - fd);
        const double tol =
            std::max(thresholds::kGradRel * abs(fd), thresholds::kGradAbs);
        worst = std::max(worst, dev / tol);
        if (dev > tol) all_ok = false;
        ++rep.samples;
    }
    rep.worst = worst;
    rep.pass = all_ok && rep.samples > 0;
    rep.detail = "worst deviation / tolerance over " +
                 std::to_string(rep.samples) + " parameters";
    return rep;
}

// -------------------------------------------------------- equivalence_check

CheckReport equivalence_check(const Network& net, const Sample& sample,
                              const std::vector<Algorithm>& algorithms) {
    CheckReport rep;
    rep.id = "equiv";
    std::vector<Algorithm> usable;
    std::string excluded;
    for (Algorithm a : algorithms) {
        try {
            check_compatible(net, a);
            usable.push_back(a);
            rep.id += "/" + algorithm_name(a);
        } catch (const AlgorithmMismatchError&) {
            if (!excluded.empty()) excluded += ",";
            excluded += algorithm_name(a);
        }
    }
    if (usable.size() < 2) {
        rep.pass = false;
        rep.detail = "fewer than two compatible algorithms (excluded: " +
                     excluded + ")";
        return rep;
    }

    const ForwardTrace t = forward(net, sample.input);
    std::vector<GradientSet> grads;
    for (Algorithm a : usable) grads.push_back(backward(net, t, sample.target, a));

    const bool split_pair =
        std::find(usable.begin(), usable.end(), Algorithm::split) != usable.end();
    const double tol =
        split_pair ? thresholds::kEquivSplit : thresholds::kEquivHolo;

    double worst = 0.0;
    const auto params = enumerate_params(const_cast<Network&>(net));
    for (size_t a = 0; a < grads.size(); ++a) {
        for (size_t b = a + 1; b < grads.size(); ++b) {
            for (const ParamRef& p : params) {
                worst = std::max(worst, abs(grad_at(grads[a], p) - grad_at(grads[b], p)));
            }
        }
    }
    rep.samples = static_cast<long>(params.size());
    rep.worst = worst;
    rep.pass = worst <= tol;
    std::ostringstream det;
    det << "pairwise max per-entry deviation, tol " << tol;
    if (!excluded.empty()) det << "; incompatible: " << excluded;
    rep.detail = det.str();
    return rep;
}

// ----------------------------------------------------------- symmetry_check

std::string symmetry_property_name(SymmetryProperty p) {
    switch (p) {
        case SymmetryProperty::line_re: return "line-re";
        case SymmetryProperty::line_im: return "line-im";
        case SymmetryProperty::point: return "point";
        case SymmetryProperty::rotation: return "rotation";
        case SymmetryProperty::phase_preserve: return "phase-preserve";
    }
    return "?";
}

SymmetryProperty symmetry_property_from_name(const std::string& name) {
    if (name == "line-re") return SymmetryProperty::line_re;
    if (name == "line-im") return SymmetryProperty::line_im;
    if (name == "point") return SymmetryProperty::point;
    if (name == "rotation") return SymmetryProperty::rotation;
    if (name == "phase-preserve") return SymmetryProperty::phase_preserve;
    throw ConfigError("unknown symmetry property: " + name);
}

CheckReport symmetry_check(const ActivationSpec& spec, SymmetryProperty property,
                           int samples, std::uint64_t seed) {
    CheckReport rep;
    rep.id = "symmetry/" + spec.name() + "/" + symmetry_property_name(property);

    const bool split = spec.category == Category::split_real_imaginary;
    const bool ap = spec.category == Category::amplitude_phase;
    switch (property) {
        case SymmetryProperty::line_re:
        case SymmetryProperty::line_im:
            if (!split)
                throw Error(symmetry_property_name(property) +
                            " applies to split-real-imaginary specs only");
            break;
        case SymmetryProperty::point:
            if (!split && !ap)
                throw Error("point symmetry applies to split or amplitude-phase specs");
            break;
        case SymmetryProperty::rotation:
        case SymmetryProperty::phase_preserve:
            if (!ap)
                throw Error(symmetry_property_name(property) +
                            " applies to amplitude-phase specs only");
            break;
    }

    SeededRng rng(seed);
    double worst = 0.0;
    Complex worst_at{};
    for (int k = 0; k < samples; ++k) {
        const Complex z = rng.in_disc(2.0);
        double v = 0.0;
        try {
            switch (property) {
                case SymmetryProperty::line_re:
                    v = std::fabs(eval(spec, z).re - eval(spec, conj(z)).re);
                    break;
                case SymmetryProperty::line_im:
                    v = std::fabs(eval(spec, z).im -
                                  eval(spec, {-z.re, z.im}).im);
                    break;
                case SymmetryProperty::point:
                    v = abs(eval(spec, -z) + eval(spec, z));
                    break;
                case SymmetryProperty::rotation: {
                    const double th = rng.uniform(0, 2 * M_PI);
                    const Complex rot = from_polar(1.0, th);
                    v = abs(eval(spec, rot * z) - rot * eval(spec, z));
                    break;
                }
                case SymmetryProperty::phase_preserve: {
                    const Complex s = eval(spec, z);
                    if (abs(z) == 0.0 || abs(s) == 0.0) {
                        ++rep.skipped;
                        continue;
                    }
                    double d = std::fabs(arg(s) - arg(z));
                    v = std::min(d, 2 * M_PI - d);
                    break;
                }
            }
        } catch (const Error&) {
            ++rep.skipped;
            continue;
        }
        ++rep.samples;
        if (v > worst) {
            worst = v;
            worst_at = z;
        }
    }
    const double tol = property == SymmetryProperty::rotation
                           ? thresholds::kRotationTol
                           : property == SymmetryProperty::phase_preserve
                                 ? thresholds::kPhaseTol
                                 : thresholds::kSymmetryTol;
    rep.worst = worst;
    rep.pass = rep.samples > 0 && worst < tol;
    if (!rep.pass) rep.witnesses = {worst_at};
    rep.detail = "max violation over seeded samples, tol " + std::to_string(tol);
    return rep;
}

// -------------------------------------------------------------- bounds_check

CheckReport bounds_check(const ActivationSpec& spec, int samples, double radius,
                         std::uint64_t seed) {
    CheckReport rep;
    rep.id = "bounds/" + spec.name();
    if (!spec.abs_bound && !spec.part_bounds) {
        rep.pass = true;
        rep.detail = "no declared bound (" + spec.bounded_on + ")";
        return rep;
    }
    SeededRng rng(seed);
    double worst = 0.0;  // violation margin; <= 0 passes
    Complex worst_at{};
    // phase 1: the bound is never crossed over the full radius (strict
    // bounds may round onto the boundary in double precision); phase 2:
    // strict bounds hold strictly at small radius where representable.
    auto probe = [&](int count, double rad, bool enforce_strict) {
        for (int k = 0; k < count; ++k) {
            const Complex z = rng.in_disc(rad);
            Complex v;
            try {
                v = eval(spec, z);
            } catch (const Error&) {
                ++rep.skipped;
                continue;
            }
            ++rep.samples;
            // saturating values may round a few ulp past the boundary
            const double ulp_slack = enforce_strict ? 0.0 : 4 * 2.3e-16;
            double margin = -1.0;
            if (spec.abs_bound) {
                double m = abs(v) - *spec.abs_bound * (1.0 + ulp_slack);
                if (enforce_strict && spec.abs_bound_strict && m == 0.0)
                    m = std::numeric_limits<double>::min();
                margin = std::max(margin, m);
            }
            if (spec.part_bounds) {
                const auto [lo, hi] = *spec.part_bounds;
                for (double part : {v.re, v.im}) {
                    double m = std::max(lo - part - ulp_slack,
                                        part - hi - ulp_slack);
                    if (enforce_strict && spec.part_bounds_strict && m == 0.0)
                        m = std::numeric_limits<double>::min();
                    margin = std::max(margin, m);
                }
            }
            if (margin > worst) {
                worst = margin;
                worst_at = z;
            }
        }
    };
    probe(samples, radius, false);
    if (spec.abs_bound_strict || spec.part_bounds_strict)
        probe(samples / 5, 4.0, true);
    rep.worst = std::max(worst, 0.0);
    rep.pass = rep.samples > 0 && worst <= 0.0;
    if (!rep.pass) rep.witnesses = {worst_at};
    rep.detail = "bound: " + spec.bounded_on;
    return rep;
}

// ------------------------------------------------------------------- probes

ProbeNet make_clear_probe(const std::vector<int>& widths,
                          const ActivationSpec& act, double init_radius,
                          double input_radius, std::uint64_t seed,
                          double clearance) {
    for (std::uint64_t attempt = 0; attempt < 4096; ++attempt) {
        const std::uint64_t s = seed + attempt;
        Network net = init_network(widths, act, init_radius, s);
        SeededRng rng(s ^ 0x9e3779b97f4a7c15ull);
        Sample sample;
        for (int k = 0; k < widths.front(); ++k)
            sample.input.push_back(rng.in_disc(input_radius));
        for (int k = 0; k < widths.back(); ++k)
            sample.target.push_back(rng.in_disc(1.0));

        ForwardTrace t;
        try {
            t = forward(net, sample.input);
        } catch (const Error&) {
            continue;
        }
        bool clear = true;
        double activity = 0.0;
        for (const auto& layer_pre : t.pre) {
            for (Complex z : layer_pre) {
                if (singularity_distance(act, z) <= clearance ||
                    kink_distance(act, z) <= clearance) {
                    clear = false;
                    break;
                }
                try {
                    const WirtingerJet j = partials(act, z);
                    activity = std::max({activity, std::fabs(j.ux), std::fabs(j.uy),
                                         std::fabs(j.vx), std::fabs(j.vy)});
                } catch (const Error&) {
                    clear = false;
                    break;
                }
            }
            if (!clear) break;
        }
        if (!clear || activity < 0.05) continue;
        return {std::move(net), std::move(sample), s};
    }
    throw Error("make_clear_probe: no qualifying seed for " + act.name());
}

// ------------------------------------------------------------------- suites

namespace {

std::vector<Algorithm> compatible_algorithms(const ActivationSpec& s) {
    if (s.holomorphic)
        return {Algorithm::complex_derivative, Algorithm::partial_derivatives,
                Algorithm::cr_simplified};
    if (s.category == Category::split_real_imaginary)
        return {Algorithm::partial_derivatives, Algorithm::split};
    return {Algorithm::partial_derivatives};
}

std::vector<int> probe_widths(const ActivationSpec& s) {
    // fully-complex entries in a 1-1 net, everything else in a 2-2-1 net
    if (s.category == Category::fully_complex) return {1, 1};
    return {2, 2, 1};
}

// activation-specific sampling scales so traces land in active regions
void probe_scales(const ActivationSpec& s, double& init_radius,
                  double& input_radius) {
    init_radius = 0.35;
    input_radius = 1.0;
    switch (s.id) {
        case ActId::modrelu:
        case ActId::cap_elu:
        case ActId::cap_softplus:
            init_radius = 0.9;
            input_radius = 1.6;
            break;
        case ActId::split_crelu:
        case ActId::split_hard_tanh:
        case ActId::zrelu:
        case ActId::z3relu:
        case ActId::zprelu:
        case ActId::z3prelu:
            init_radius = 0.6;
            input_radius = 1.2;
            break;
        default:
            break;
    }
}

}  // namespace

std::vector<CheckReport> suite_cr(std::uint64_t /*seed*/) {
    std::vector<CheckReport> out;
    const GridSpec window{-2, 2, -2, 2, 41, 41};
    for (const ActivationSpec& s : catalog()) {
        if (!s.differentiable) {
            CheckReport r;
            r.id = "cr_scan/" + s.name();
            r.pass = true;
            r.detail = "excluded by precondition: not differentiable";
            out.push_back(std::move(r));
            continue;
        }
        CheckReport scan = cr_scan(s, window);
        const bool needs_witness =
            s.category == Category::split_real_imaginary ||
            s.id == ActId::cardioid || s.id == ActId::modrelu;
        if (s.holomorphic) {
            // scan.pass already encodes confirmation
        } else if (needs_witness) {
            const bool found = scan.worst > thresholds::kCrWitnessMin;
            scan.pass = found;
            scan.detail = found ? "non-holomorphy witness found"
                                : "expected CR violation witness missing";
        } else {
            scan.detail += scan.pass ? "; piecewise/sector CR holds (informational)"
                                     : "; CR violations (informational)";
            scan.pass = true;
        }
        out.push_back(std::move(scan));
    }
    return out;
}

std::vector<CheckReport> suite_bounds(std::uint64_t seed) {
    std::vector<CheckReport> out;
    for (const ActivationSpec& s : catalog()) {
        out.push_back(liouville_probe(s, {1, 5, 10}));
        if (s.abs_bound || s.part_bounds)
            out.push_back(bounds_check(s, 10000, 50.0, seed));
    }
    return out;
}

std::vector<CheckReport> suite_grad(std::uint64_t seed) {
    std::vector<CheckReport> out;
    for (const ActivationSpec& s : catalog()) {
        if (!s.differentiable) continue;
        double init_radius, input_radius;
        probe_scales(s, init_radius, input_radius);
        const ProbeNet probe =
            make_clear_probe(probe_widths(s), s, init_radius, input_radius, seed);
        for (Algorithm a : compatible_algorithms(s)) {
            CheckReport r = grad_check(probe.net, a, probe.sample);
            r.id = "grad/" + s.name() + "/" + algorithm_name(a);
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<CheckReport> suite_equivalence(std::uint64_t seed) {
    std::vector<CheckReport> out;
    const std::vector<ActId> holo = {ActId::fc_tanh, ActId::fc_sin, ActId::fc_exp};
    for (ActId id : holo) {
        const ActivationSpec s = make_spec(id);
        double worst = 0.0;
        bool pass = true;
        for (int k = 0; k < 20; ++k) {
            const ProbeNet probe =
                make_clear_probe({2, 3, 2}, s, 0.3, 0.8, seed + 100 * k);
            CheckReport r = equivalence_check(
                probe.net, probe.sample,
                {Algorithm::complex_derivative, Algorithm::partial_derivatives,
                 Algorithm::cr_simplified});
            worst = std::max(worst, r.worst);
            pass = pass && r.pass;
        }
        CheckReport agg;
        agg.id = "equiv/" + s.name();
        agg.pass = pass;
        agg.worst = worst;
        agg.samples = 20;
        agg.detail = "complex_derivative vs partial_derivatives vs cr_simplified";
        out.push_back(std::move(agg));
    }
    const std::vector<ActId> splits = {ActId::split_tanh, ActId::split_sigmoid};
    for (ActId id : splits) {
        const ActivationSpec s = make_spec(id);
        double worst = 0.0;
        bool pass = true;
        for (int k = 0; k < 20; ++k) {
            const ProbeNet probe =
                make_clear_probe({2, 3, 2}, s, 0.3, 0.8, seed + 100 * k);
            CheckReport r = equivalence_check(
                probe.net, probe.sample,
                {Algorithm::partial_derivatives, Algorithm::split});
            worst = std::max(worst, r.worst);
            pass = pass && r.pass;
        }
        CheckReport agg;
        agg.id = "equiv/" + s.name();
        agg.pass = pass;
        agg.worst = worst;
        agg.samples = 20;
        agg.detail = "partial_derivatives vs split";
        out.push_back(std::move(agg));
    }
    return out;
}

std::vector<CheckReport> suite_symmetry(std::uint64_t seed) {
    std::vector<CheckReport> out;
    for (const ActivationSpec& s : catalog()) {
        if (s.category == Category::split_real_imaginary) {
            out.push_back(symmetry_check(s, SymmetryProperty::line_re, 200, seed));
            out.push_back(symmetry_check(s, SymmetryProperty::line_im, 200, seed));
        }
        if (s.category == Category::amplitude_phase) {
            out.push_back(symmetry_check(s, SymmetryProperty::point, 200, seed));
            out.push_back(symmetry_check(s, SymmetryProperty::rotation, 50, seed));
        }
    }
    // phase preservation for the forms with a nonnegative radial factor
    const std::vector<ActId> phase = {
        ActId::aptf,       ActId::apsf,     ActId::siglog,
        ActId::cap_es,     ActId::cap_arctans, ActId::cap_erfa,
        ActId::cap_pls,    ActId::cap_softplus, ActId::cap_swish,
        ActId::modrelu};
    for (ActId id : phase)
        out.push_back(
            symmetry_check(make_spec(id), SymmetryProperty::phase_preserve, 200, seed));
    return out;
}

std::vector<CheckReport> suite_coverage(std::uint64_t seed) {
    // coverage is itself a check: every catalog spec must appear in the cr,
    // boundedness and (when differentiable) gradient suites
    std::vector<CheckReport> out;
    auto has_prefix = [](const std::vector<CheckReport>& v, const std::string& p) {
        for (const CheckReport& r : v)
            if (r.id.rfind(p, 0) == 0) return true;
        return false;
    };
    const auto cr = suite_cr(seed);
    const auto bounds = suite_bounds(seed);
    const auto grad = suite_grad(seed);
    CheckReport rep;
    rep.id = "coverage";
    rep.pass = true;
    std::string missing;
    for (const ActivationSpec& s : catalog()) {
        const bool ok = has_prefix(cr, "cr_scan/" + s.name()) &&
                        has_prefix(bounds, "liouville/" + s.name()) &&
                        (!s.differentiable || has_prefix(grad, "grad/" + s.name() + "/"));
        if (!ok) {
            rep.pass = false;
            if (!missing.empty()) missing += ",";
            missing += s.name();
        }
        ++rep.samples;
    }
    rep.detail = rep.pass ? "all catalog specs covered" : "uncovered: " + missing;
    out.push_back(std::move(rep));
    return out;
}

std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "cr") return suite_cr(seed);
    if (name == "bounds") return suite_bounds(seed);
    if (name == "grad") return suite_grad(seed);
    if (name == "equiv") return suite_equivalence(seed);
    if (name == "symmetry") return suite_symmetry(seed);
    if (name == "coverage") return suite_coverage(seed);
    if (name == "all") {
        std::vector<CheckReport> out;
        for (const char* n : {"cr", "bounds", "grad", "equiv", "symmetry", "coverage"}) {
            auto v = run_suite(n, seed);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }
    throw ConfigError("unknown suite: " + name);
}

}  // namespace cvnn
