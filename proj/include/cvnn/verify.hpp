#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cvnn/activations.hpp"
#include "cvnn/grid.hpp"
#include "cvnn/network.hpp"
#include "cvnn/train.hpp"

namespace cvnn {

// Pass/fail thresholds, in one place; the acceptance suite uses these
// verbatim.
namespace thresholds {
inline constexpr double kCrResidualMax = 1e-5;     // holomorphy confirmation
inline constexpr double kCrWitnessMin = 1e-3;      // non-holomorphy witness
inline constexpr double kGradRel = 1e-4;           // gradient check, relative
inline constexpr double kGradAbs = 1e-7;           // gradient check, absolute
inline constexpr double kEquivHolo = 1e-10;        // cross-algorithm agreement
inline constexpr double kEquivSplit = 1e-12;       // split specialization
inline constexpr double kExclusionRadius = 0.05;   // around singular/kink loci
inline constexpr double kSymmetryTol = 1e-10;
inline constexpr double kRotationTol = 1e-12;
inline constexpr double kPhaseTol = 1e-10;
inline constexpr double kCrScanFdStep = 1e-6;
inline constexpr double kGradFdStep = 1e-6;
inline constexpr double kLiouvilleGrowth = 10.0;   // max ratio deemed "growing"
}  // namespace thresholds

struct CheckReport {
    std::string id;
    bool pass = false;
    double worst = 0.0;             // worst-case residual / deviation
    std::vector<Complex> witnesses; // present whenever pass is false
    long samples = 0;
    int skipped = 0;
    std::string detail;

    std::string record() const;  // one machine-readable line
};

// Finite-difference CR residuals over the grid, excluding points within
// exclusion_radius of declared singular/kink loci. pass = max residual
// below the holomorphy threshold.
CheckReport cr_scan(const ActivationSpec& spec, const GridSpec& grid,
                    double exclusion_radius = thresholds::kExclusionRadius);

// Max |sigma| over circles of the given radii. For a holomorphic-flagged,
// non-constant spec the report is consistent only if the magnitude grows
// with radius or a declared singularity lies within the largest circle.
CheckReport liouville_probe(const ActivationSpec& spec,
                            const std::vector<double>& radii);

// Analytic vs central-finite-difference gradients of the canonical loss,
// parameter by parameter (weights and biases).
CheckReport grad_check(const Network& net, Algorithm algo, const Sample& sample,
                       double fd_step = thresholds::kGradFdStep);

// Pairwise per-entry gradient deviation across algorithms; incompatible
// algorithms are listed in the detail, not compared.
CheckReport equivalence_check(const Network& net, const Sample& sample,
                              const std::vector<Algorithm>& algorithms);

enum class SymmetryProperty { line_re, line_im, point, rotation, phase_preserve };
std::string symmetry_property_name(SymmetryProperty p);
SymmetryProperty symmetry_property_from_name(const std::string& name);

CheckReport symmetry_check(const ActivationSpec& spec, SymmetryProperty property,
                           int samples, std::uint64_t seed);

// Samples |z| <= radius against the spec's declared bound metadata.
CheckReport bounds_check(const ActivationSpec& spec, int samples, double radius,
                         std::uint64_t seed);

// Suites (deterministic given the seed). Every catalog spec is covered by a
// cr_scan, a liouville probe and, when differentiable, a grad_check cell;
// the coverage check fails if any spec is missed.
std::vector<CheckReport> suite_cr(std::uint64_t seed);
std::vector<CheckReport> suite_bounds(std::uint64_t seed);
std::vector<CheckReport> suite_grad(std::uint64_t seed);
std::vector<CheckReport> suite_equivalence(std::uint64_t seed);
std::vector<CheckReport> suite_symmetry(std::uint64_t seed);
std::vector<CheckReport> suite_coverage(std::uint64_t seed);
std::vector<CheckReport> run_suite(const std::string& name, std::uint64_t seed);

// Deterministic helper used by the grad/equivalence suites and the
// acceptance tests: a seeded net of the given widths whose forward trace on
// the returned sample stays clear of singular and kink loci (scans seeds
// upward from `seed` until one qualifies).
struct ProbeNet {
    Network net;
    Sample sample;
    std::uint64_t used_seed = 0;
};
ProbeNet make_clear_probe(const std::vector<int>& widths,
                          const ActivationSpec& act, double init_radius,
                          double input_radius, std::uint64_t seed,
                          double clearance = thresholds::kExclusionRadius);

}  // namespace cvnn
