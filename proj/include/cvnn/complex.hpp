#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>

namespace cvnn {

// One complex value, the atom of everything here. Arithmetic is written out
// componentwise with a fixed operation order so results are reproducible
// across platforms with the same rounding mode.
struct Complex {
    double re = 0.0;
    double im = 0.0;

    constexpr Complex() = default;
    constexpr Complex(double r, double i) : re(r), im(i) {}
    constexpr explicit Complex(double r) : re(r), im(0.0) {}

    friend constexpr Complex operator+(Complex a, Complex b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend constexpr Complex operator-(Complex a, Complex b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend constexpr Complex operator-(Complex a) { return {-a.re, -a.im}; }
    friend constexpr Complex operator*(double r, Complex a) {
        return {r * a.re, r * a.im};
    }
    friend constexpr Complex operator*(Complex a, double r) { return r * a; }
    friend constexpr Complex operator*(Complex a, Complex b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    // Division through the conjugate form w * conj(z) / |z|^2.
    friend constexpr Complex operator/(Complex w, Complex z) {
        const double d = z.re * z.re + z.im * z.im;
        return {(w.re * z.re + w.im * z.im) / d,
                (w.im * z.re - w.re * z.im) / d};
    }
    friend constexpr Complex operator/(Complex a, double r) {
        return {a.re / r, a.im / r};
    }
    Complex& operator+=(Complex b) { re += b.re; im += b.im; return *this; }
    Complex& operator-=(Complex b) { re -= b.re; im -= b.im; return *this; }
    friend constexpr bool operator==(Complex a, Complex b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline constexpr Complex conj(Complex z) { return {z.re, -z.im}; }

inline double abs(Complex z) { return std::sqrt(z.re * z.re + z.im * z.im); }

inline double abs_sq(Complex z) { return z.re * z.re + z.im * z.im; }

inline bool is_finite(Complex z) {
    return std::isfinite(z.re) && std::isfinite(z.im);
}

// Principal argument in (-pi, pi]. The branch table is spelled out rather
// than delegated to atan2 so the tie-breaking on the axes is explicit:
// the negative real axis maps to +pi, the origin to a quiet-NaN sentinel.
inline double arg(Complex z) {
    const double x = z.re, y = z.im;
    if (x > 0.0) return std::atan(y / x);
    if (x < 0.0) {
        if (y >= 0.0) return std::atan(y / x) + M_PI;
        return std::atan(y / x) - M_PI;
    }
    // x == 0
    if (y > 0.0) return M_PI / 2;
    if (y < 0.0) return -M_PI / 2;
    return std::numeric_limits<double>::quiet_NaN();  // origin: undefined
}

struct Polar {
    double magnitude = 0.0;
    double argument = 0.0;  // NaN sentinel at the origin
};

inline Polar polar(Complex z) { return {abs(z), arg(z)}; }

inline Complex from_polar(double r, double phi) {
    return {r * std::cos(phi), r * std::sin(phi)};
}

inline std::complex<double> to_std(Complex z) { return {z.re, z.im}; }
inline Complex from_std(std::complex<double> z) { return {z.real(), z.imag()}; }

// --- elementary transcendentals, decomposed into real/imaginary parts ---

// e^z = e^x cos y + i e^x sin y
inline Complex cexp(Complex z) {
    const double ex = std::exp(z.re);
    return {ex * std::cos(z.im), ex * std::sin(z.im)};
}

// sin(x+iy) = sin x cosh y + i cos x sinh y
inline Complex csin(Complex z) {
    return {std::sin(z.re) * std::cosh(z.im), std::cos(z.re) * std::sinh(z.im)};
}

inline Complex ccos(Complex z) {
    return {std::cos(z.re) * std::cosh(z.im), -std::sin(z.re) * std::sinh(z.im)};
}

// sinh(x+iy) = sinh x cos y + i cosh x sin y
inline Complex csinh(Complex z) {
    return {std::sinh(z.re) * std::cos(z.im), std::cosh(z.re) * std::sin(z.im)};
}

inline Complex ccosh(Complex z) {
    return {std::cosh(z.re) * std::cos(z.im), std::sinh(z.re) * std::sin(z.im)};
}

// tanh(x+iy) = (sinh 2x + i sin 2y) / (cosh 2x + cos 2y); saturates for
// large |x| where cosh would overflow.
inline Complex ctanh(Complex z) {
    const double x2 = 2.0 * z.re, y2 = 2.0 * z.im;
    if (std::fabs(z.re) > 25.0) {
        return {z.re > 0 ? 1.0 : -1.0, 0.0};
    }
    const double den = std::cosh(x2) + std::cos(y2);
    return {std::sinh(x2) / den, std::sin(y2) / den};
}

// tan(x+iy) = (sin 2x + i sinh 2y) / (cos 2x + cosh 2y)
inline Complex ctan(Complex z) {
    const double x2 = 2.0 * z.re, y2 = 2.0 * z.im;
    if (std::fabs(z.im) > 25.0) {
        return {0.0, z.im > 0 ? 1.0 : -1.0};
    }
    const double den = std::cos(x2) + std::cosh(y2);
    return {std::sin(x2) / den, std::sinh(y2) / den};
}

// Principal branches with the standard cuts (real axis outside the unit
// interval for asin/acos/atanh, imaginary axis for atan/asinh).
inline Complex casin(Complex z) { return from_std(std::asin(to_std(z))); }
inline Complex cacos(Complex z) { return from_std(std::acos(to_std(z))); }
inline Complex catan(Complex z) { return from_std(std::atan(to_std(z))); }
inline Complex casinh(Complex z) { return from_std(std::asinh(to_std(z))); }
inline Complex catanh(Complex z) { return from_std(std::atanh(to_std(z))); }
inline Complex csqrt(Complex z) { return from_std(std::sqrt(to_std(z))); }
inline Complex clog(Complex z) { return from_std(std::log(to_std(z))); }

inline std::string to_string(Complex z) {
    return "(" + std::to_string(z.re) + ", " + std::to_string(z.im) + ")";
}

}  // namespace cvnn
