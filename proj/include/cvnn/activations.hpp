#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvnn/complex.hpp"
#include "cvnn/errors.hpp"
#include "cvnn/wirtinger.hpp"

namespace cvnn {

enum class ActId {
    split_step,
    split_sigmoid,
    split_psigmoid,
    split_tanh,
    split_stanh,
    split_hard_tanh,
    split_crelu,
    split_qam,
    aptf,
    apsf,
    siglog,
    cardioid,
    modrelu,
    fc_tanh,
    fc_sigmoid,
    fc_tan,
    fc_sin,
    fc_arctan,
    fc_arcsin,
    fc_arccos,
    fc_sinh,
    fc_arctanh,
    fc_arcsinh,
    zrelu,
    z3relu,
    zprelu,
    z3prelu,
    fc_exp,
    split_elu,
    split_mish,
    split_softplus,
    split_swish,
    fc_swish,
    fc_mish,
    cap_pls,
    cap_es,
    cap_arctans,
    cap_erfa,
    cap_softplus,
    cap_elu,
    cap_swish,
    // test fixtures, not part of the public catalog
    fx_identity,
    fx_conj,
    fx_const,
};

enum class Category {
    split_real_imaginary,
    split_phase_amplitude,  // reserved; no catalog entry uses it
    amplitude_phase,
    fully_complex,
};

std::string category_name(Category c);

// A numerically queryable point set: distance(z) is exact for every shape.
struct Locus {
    enum class Shape {
        points,            // finite set
        vertical_lattice,  // x0 + i(phase + period*n), n integer
        horizontal_lattice,// (phase + period*n) + i*y0
        ray_re,            // {x + i*y0 : sign*(x - start) >= 0}
        ray_im,            // {x0 + i*y : sign*(y - start) >= 0}
        circle,            // |z| = r
        line_re,           // Re z = c
        line_im,           // Im z = c
    };
    Shape shape = Shape::points;
    std::vector<Complex> pts;
    double x0 = 0, y0 = 0, phase = 0, period = 0, r = 0, c = 0;
    double start = 0;
    int sign = 1;

    double distance(Complex z) const;
    std::string describe() const;

    static Locus make_points(std::vector<Complex> p);
    static Locus make_vertical_lattice(double x0, double phase, double period);
    static Locus make_horizontal_lattice(double y0, double phase, double period);
    static Locus make_ray_re(double y0, double start, int sign);
    static Locus make_ray_im(double x0, double start, int sign);
    static Locus make_circle(double r);
    static Locus make_line_re(double c);
    static Locus make_line_im(double c);
};

struct SingularityDescriptor {
    enum class Kind {
        isolated_essential,
        pole,
        removable,
        branch_cut,
        countable_lattice,
    };
    Kind kind = Kind::isolated_essential;
    Locus locus;
    std::string describe() const;
};

std::string singularity_kind_name(SingularityDescriptor::Kind k);

// Named parameters; which fields are meaningful depends on the id.
struct ActParams {
    double a = 0, b = 0;        // apsf(a,b), cap_pls(a), cap_softplus(a),
                                // modrelu(b), cap_elu(b), cap_swish(b)
    double c1 = 0, c2 = 0;      // split_psigmoid
    double alpha = 0;           // split_qam, split_elu, cap_elu
    double beta = 0;            // split_swish
    Complex zalpha1{}, zalpha2{}, zalpha3{};  // zprelu, z3prelu
};

// One catalog entry: identifier, parameters, classification metadata and the
// declared singular/non-smooth loci. Immutable after construction.
struct ActivationSpec {
    ActId id{};
    ActParams params{};
    Category category = Category::fully_complex;
    bool differentiable = true;
    bool holomorphic = false;
    bool fixture = false;
    std::string bounded_on;  // prose description of the bounded region
    // machine-checkable bounds used by the verification harness
    std::optional<double> abs_bound;       // |sigma| <= / < abs_bound
    bool abs_bound_strict = false;
    std::optional<std::pair<double, double>> part_bounds;  // each of Re, Im
    bool part_bounds_strict = false;
    std::vector<SingularityDescriptor> singularities;
    std::vector<Locus> kinks;

    std::string name() const;
    // "id" or "id(k=v,...)" with only non-default parameters listed
    std::string display() const;
};

// Catalog construction. make_spec applies the documented parameter defaults;
// the two-argument forms override them.
ActivationSpec make_spec(ActId id);
ActivationSpec make_spec(ActId id, const ActParams& overrides);

// Every public catalog entry with default parameters, in a fixed order.
const std::vector<ActivationSpec>& catalog();

// Parses "split_tanh", "modrelu(b=-0.5)", "zprelu(alpha=(0.1,0))".
ActivationSpec spec_from_string(const std::string& text);

std::optional<ActId> id_from_name(const std::string& name);

// sigma(z) exactly per the catalog formula. Amplitude-phase forms return 0
// at z = 0. Throws SingularityError within 1e-12 of a pole/essential locus,
// OverflowError when an intermediate exponential would overflow.
Complex eval(const ActivationSpec& spec, Complex z);

// The four real partials of sigma = u+iv at z, with dz/dzbar assembled.
// Split functions have uy = vx = 0 identically. Throws KinkError within
// 1e-12 of a non-smooth locus, NonDifferentiableError for split_step.
WirtingerJet partials(const ActivationSpec& spec, Complex z);

// Euclidean distance from z to the nearest declared singular locus;
// +infinity when the spec declares none.
double singularity_distance(const ActivationSpec& spec, Complex z);

// Same, over the non-smooth (kink) loci.
double kink_distance(const ActivationSpec& spec, Complex z);

// Per-point suitability witness: D = ux*vy - uy*vx plus the two exemption
// predicates (ux=vx=0 with uy,vy nonzero, or uy=vy=0 with ux,vx nonzero).
// Points where D vanishes without exemption witness unsuitability.
struct SuitabilityEntry {
    Complex at{};
    double determinant = 0;
    bool exempt = false;
    bool suitable = true;
};
struct SuitabilityReport {
    std::vector<SuitabilityEntry> entries;
    bool suitable_everywhere = true;
    int skipped = 0;  // points where partials raised an error
};
SuitabilityReport suitability_report(const ActivationSpec& spec,
                                     const std::vector<Complex>& sample_points);

// One record per spec for the CLI listing; machine-parseable when
// records=true.
std::string catalog_record(const ActivationSpec& spec, bool records);

}  // namespace cvnn
