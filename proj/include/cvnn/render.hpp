#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "cvnn/activations.hpp"
#include "cvnn/grid.hpp"

namespace cvnn {

// Row-major 8-bit RGB. Row 0 is the top of the image (im_max).
struct ImageBuffer {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;  // 3 * width * height

    std::uint8_t* at(int col, int row) {
        return &pixels[3 * (static_cast<size_t>(row) * width + col)];
    }
    const std::uint8_t* at(int col, int row) const {
        return &pixels[3 * (static_cast<size_t>(row) * width + col)];
    }
};

enum class Shading { arg_only, log_abs_rings, abs_arg_rings };
Shading shading_from_name(const std::string& name);

using ComplexFn = std::function<Complex(Complex)>;

// Wraps a catalog entry for rendering; singular/overflow points become the
// white sentinel downstream.
ComplexFn fn_of(const ActivationSpec& spec);

// Built-in render subjects ("z4m1-over-z2" is (z^4-1)/z^2, "identity" is z).
ComplexFn fixture_fn(const std::string& name);

// Domain coloring: hue walks the color wheel with the principal argument;
// lightness is |f|/(1+|f|) (black at zeros, blending to white toward poles).
// Ring shadings modulate the lightness cyclically in log|f| and/or arg f.
// Non-finite values and evaluation errors render as pure white.
ImageBuffer domain_color(const ComplexFn& f, const GridSpec& grid,
                         Shading shading = Shading::arg_only);

enum class SurfacePart { re, im, abs, arg };
SurfacePart part_from_name(const std::string& name);

// nx*ny values of the chosen part at the grid nodes, row-major with y
// ascending; the arg of 0 is NaN (the documented missing-value marker).
std::vector<double> surface_export(const ComplexFn& f, const GridSpec& grid,
                                   SurfacePart part);

void write_ppm(const ImageBuffer& img, std::ostream& os);
void write_ppm_file(const ImageBuffer& img, const std::string& path);

// CSV with a two-line header (grid echo and part name), 17 significant digits.
void write_surface_csv(const std::vector<double>& values, const GridSpec& grid,
                       SurfacePart part, std::ostream& os);
void write_surface_csv_file(const std::vector<double>& values,
                            const GridSpec& grid, SurfacePart part,
                            const std::string& path);

// FNV-1a over the serialized PPM byte stream; the golden-file fingerprint.
std::uint64_t fnv1a_ppm(const ImageBuffer& img);

}  // namespace cvnn
