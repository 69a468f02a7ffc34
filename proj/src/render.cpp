#include "cvnn/render.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cvnn {

Shading shading_from_name(const std::string& name) {
    if (name == "arg-only") return Shading::arg_only;
    if (name == "log-abs-rings") return Shading::log_abs_rings;
    if (name == "abs-arg-rings") return Shading::abs_arg_rings;
    throw ConfigError("unknown shading: " + name);
}

SurfacePart part_from_name(const std::string& name) {
    if (name == "re") return SurfacePart::re;
    if (name == "im") return SurfacePart::im;
    if (name == "abs") return SurfacePart::abs;
    if (name == "arg") return SurfacePart::arg;
    throw ConfigError("unknown part: " + name);
}

ComplexFn fn_of(const ActivationSpec& spec) {
    return [spec](Complex z) { return eval(spec, z); };
}

ComplexFn fixture_fn(const std::string& name) {
    if (name == "z4m1-over-z2") {
        return [](Complex z) {
            const Complex z2 = z * z;
            return (z2 * z2 - Complex{1, 0}) / z2;
        };
    }
    if (name == "identity") {
        return [](Complex z) { return z; };
    }
    if (name == "square") {
        return [](Complex z) { return z * z; };
    }
    throw ConfigError("unknown fixture: " + name);
}

namespace {

// hue in [0,1) -> fully saturated RGB
void hue_to_rgb(double h, double rgb[3]) {
    const double x = h * 6.0;
    const int k = static_cast<int>(std::floor(x)) % 6;
    const double f = x - std::floor(x);
    switch (k) {
        case 0: rgb[0] = 1; rgb[1] = f; rgb[2] = 0; break;
        case 1: rgb[0] = 1 - f; rgb[1] = 1; rgb[2] = 0; break;
        case 2: rgb[0] = 0; rgb[1] = 1; rgb[2] = f; break;
        case 3: rgb[0] = 0; rgb[1] = 1 - f; rgb[2] = 1; break;
        case 4: rgb[0] = f; rgb[1] = 0; rgb[2] = 1; break;
        default: rgb[0] = 1; rgb[1] = 0; rgb[2] = 1 - f; break;
    }
}

std::uint8_t quantize(double v) {
    const double c = v <= 0 ? 0.0 : v >= 1 ? 255.0 : v * 255.0;
    return static_cast<std::uint8_t>(std::lround(c));
}

double sawtooth(double t) { return t - std::floor(t); }

}  // namespace

ImageBuffer domain_color(const ComplexFn& f, const GridSpec& grid,
                         Shading shading) {
    grid.validate();
    ImageBuffer img;
    img.width = grid.nx;
    img.height = grid.ny;
    img.pixels.assign(3ull * grid.nx * grid.ny, 0);

    for (int row = 0; row < grid.ny; ++row) {
        // row 0 at the top of the window
        const double y = grid.y_at(grid.ny - 1 - row);
        for (int col = 0; col < grid.nx; ++col) {
            const Complex z{grid.x_at(col), y};
            Complex v;
            bool bad = false;
            try {
                v = f(z);
                bad = !is_finite(v);
            } catch (const Error&) {
                bad = true;
            }
            std::uint8_t* px = img.at(col, row);
            if (bad) {
                px[0] = px[1] = px[2] = 255;  // white sentinel
                continue;
            }
            const double m = abs(v);
            double rgb[3] = {0, 0, 0};
            if (m > 0.0) {
                // the wheel map of the principal argument: theta -> (theta+pi)/2pi
                const double h = sawtooth((arg(v) + M_PI) / (2.0 * M_PI));
                hue_to_rgb(h, rgb);
            }
            double light = m / (1.0 + m);
            if (shading == Shading::log_abs_rings ||
                shading == Shading::abs_arg_rings) {
                if (m > 0.0)
                    light *= 0.72 + 0.28 * sawtooth(std::log2(m));
            }
            if (shading == Shading::abs_arg_rings && m > 0.0) {
                light *= 0.80 + 0.20 * sawtooth(arg(v) * 6.0 / M_PI);
            }
            double out[3];
            if (light <= 0.5) {
                const double s = 2.0 * light;
                for (int c = 0; c < 3; ++c) out[c] = rgb[c] * s;
            } else {
                const double t = 2.0 * (light - 0.5);
                for (int c = 0; c < 3; ++c) out[c] = rgb[c] * (1.0 - t) + t;
            }
            px[0] = quantize(out[0]);
            px[1] = quantize(out[1]);
            px[2] = quantize(out[2]);
        }
    }
    return img;
}

std::vector<double> surface_export(const ComplexFn& f, const GridSpec& grid,
                                   SurfacePart part) {
    grid.validate();
    std::vector<double> out;
    out.reserve(static_cast<size_t>(grid.nx) * grid.ny);
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            const Complex z = grid.node(ix, iy);
            double v = std::numeric_limits<double>::quiet_NaN();
            try {
                const Complex fv = f(z);
                switch (part) {
                    case SurfacePart::re: v = fv.re; break;
                    case SurfacePart::im: v = fv.im; break;
                    case SurfacePart::abs: v = abs(fv); break;
                    case SurfacePart::arg: v = arg(fv); break;  // NaN at 0
                }
            } catch (const Error&) {
                // leave the missing-value marker
            }
            out.push_back(v);
        }
    }
    return out;
}

void write_ppm(const ImageBuffer& img, std::ostream& os) {
    os << "P6\n" << img.width << " " << img.height << "\n255\n";
    os.write(reinterpret_cast<const char*>(img.pixels.data()),
             static_cast<std::streamsize>(img.pixels.size()));
}

void write_ppm_file(const ImageBuffer& img, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot write " + path);
    write_ppm(img, f);
}

void write_surface_csv(const std::vector<double>& values, const GridSpec& grid,
                       SurfacePart part, std::ostream& os) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g", grid.re_min,
                  grid.re_max, grid.im_min, grid.im_max);
    os << "# grid " << buf << " " << grid.nx << " " << grid.ny << "\n";
    const char* pname = part == SurfacePart::re    ? "re"
                        : part == SurfacePart::im  ? "im"
                        : part == SurfacePart::abs ? "abs"
                                                   : "arg";
    os << "# part " << pname << "\n";
    for (int iy = 0; iy < grid.ny; ++iy) {
        for (int ix = 0; ix < grid.nx; ++ix) {
            if (ix) os << ",";
            const double v = values[static_cast<size_t>(iy) * grid.nx + ix];
            if (std::isnan(v)) {
                os << "nan";
            } else {
                std::snprintf(buf, sizeof buf, "%.17g", v);
                os << buf;
            }
        }
        os << "\n";
    }
}

void write_surface_csv_file(const std::vector<double>& values,
                            const GridSpec& grid, SurfacePart part,
                            const std::string& path) {
    std::ofstream f(path);
    if (!f) throw IoError("cannot write " + path);
    write_surface_csv(values, grid, part, f);
}

std::uint64_t fnv1a_ppm(const ImageBuffer& img) {
    std::ostringstream os;
    write_ppm(img, os);
    const std::string bytes = os.str();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace cvnn
