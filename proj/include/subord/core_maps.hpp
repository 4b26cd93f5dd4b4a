#ifndef SUBORD_CORE_MAPS_HPP
#define SUBORD_CORE_MAPS_HPP

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "subord/errors.hpp"
#include "subord/tolerances.hpp"

namespace subord {

using cplx = std::complex<double>;

inline std::string to_string(cplx z)
{
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
    return os.str();
}

/// A point of the open unit disc.
class UnitDiscPoint {
public:
    UnitDiscPoint() = default;

    explicit UnitDiscPoint(cplx z) : z_(z)
    {
        if (!(std::norm(z) < 1.0))
            throw DomainError("point " + to_string(z) + " is not in the open unit disc");
    }

    UnitDiscPoint(double re, double im) : UnitDiscPoint(cplx{re, im}) {}

    static UnitDiscPoint polar(double r, double theta) { return UnitDiscPoint(std::polar(r, theta)); }

    [[nodiscard]] cplx value() const { return z_; }
    [[nodiscard]] double re() const { return z_.real(); }
    [[nodiscard]] double im() const { return z_.imag(); }
    [[nodiscard]] double modulus() const { return std::abs(z_); }

    friend bool operator==(const UnitDiscPoint&, const UnitDiscPoint&) = default;

private:
    cplx z_{0.0, 0.0};
};

/// A complex number of modulus one, renormalized exactly at construction.
class UnimodularConstant {
public:
    UnimodularConstant() = default;

    explicit UnimodularConstant(cplx c)
    {
        const double m = std::abs(c);
        if (!std::isfinite(m) || std::abs(m - 1.0) > kTol.unimodular)
            throw DomainError("constant " + to_string(c) + " is not unimodular");
        c_ = c / m;
    }

    static UnimodularConstant from_radians(double angle)
    {
        if (!std::isfinite(angle))
            throw DomainError("non-finite angle");
        const cplx c{std::cos(angle), std::sin(angle)};
        return UnimodularConstant(c / std::abs(c));
    }

    static UnimodularConstant from_degrees(double degrees)
    {
        return from_radians(degrees * std::numbers::pi / 180.0);
    }

    [[nodiscard]] cplx value() const { return c_; }

    friend bool operator==(const UnimodularConstant&, const UnimodularConstant&) = default;

private:
    cplx c_{1.0, 0.0};
};

/// Polar sampling of the disc: radii equally spaced in (0, r_max], angles in [0, 2pi).
struct DiscSamplingPlan {
    int radii_count = 64;
    int angles_count = 256;
    double r_max = 0.999;

    DiscSamplingPlan() = default;

    DiscSamplingPlan(int radii, int angles, double rmax)
        : radii_count(radii), angles_count(angles), r_max(rmax)
    {
        if (radii < 1 || angles < 1)
            throw DomainError("sampling plan counts must be >= 1");
        if (!(rmax > 0.0 && rmax < 1.0))
            throw DomainError("sampling plan r_max must lie in (0, 1)");
    }

    [[nodiscard]] std::size_t size() const
    {
        return static_cast<std::size_t>(radii_count) * static_cast<std::size_t>(angles_count);
    }

    friend bool operator==(const DiscSamplingPlan&, const DiscSamplingPlan&) = default;
};

/// Disc automorphism w -> (alpha - w) / (1 - alpha w); an involution swapping 0 and alpha.
inline cplx blaschke(double alpha, cplx w)
{
    const cplx den = 1.0 - alpha * w;
    if (std::abs(den) < kTol.pole)
        throw PoleError("blaschke factor evaluated at its pole w = " + to_string(w));
    return (alpha - w) / den;
}

/// Cayley map z -> (1 + z) / (1 - z), disc onto the right half-plane.
inline cplx cayley(UnitDiscPoint z)
{
    const cplx v = z.value();
    return (1.0 + v) / (1.0 - v);
}

/// Inverse Cayley map w -> (w - 1) / (w + 1), right half-plane onto the disc.
inline UnitDiscPoint cayley_inverse(cplx w)
{
    if (!(w.real() > 0.0))
        throw DomainError("cayley_inverse needs Re(w) > 0, got " + to_string(w));
    const cplx z = (w - 1.0) / (w + 1.0);
    // Rounding reaches |z| = 1 only for enormous |w|; UnitDiscPoint rejects it.
    return UnitDiscPoint(z);
}

/// (1 + cz) / (1 - cz): the half-plane factor of the extremal exponent.
inline cplx halfplane_exponent(UnitDiscPoint z, UnimodularConstant c)
{
    const cplx cz = c.value() * z.value();
    return (1.0 + cz) / (1.0 - cz);
}

/// Radius-major polar grid; excludes the origin.
inline std::vector<UnitDiscPoint> disc_grid(const DiscSamplingPlan& plan)
{
    std::vector<UnitDiscPoint> out;
    out.reserve(plan.size());
    for (int j = 1; j <= plan.radii_count; ++j) {
        const double r = plan.r_max * static_cast<double>(j) / plan.radii_count;
        for (int m = 0; m < plan.angles_count; ++m) {
            const double theta = 2.0 * std::numbers::pi * m / plan.angles_count;
            out.push_back(UnitDiscPoint::polar(r, theta));
        }
    }
    return out;
}

/// Phase difference reduced to (-pi, pi].
inline double wrap_phase(double d)
{
    constexpr double two_pi = 2.0 * std::numbers::pi;
    d = std::remainder(d, two_pi);
    if (d <= -std::numbers::pi)
        d += two_pi;
    return d;
}

/// exp(w) - 1 without cancellation for small w.
inline cplx expm1(cplx w)
{
    const double x = w.real();
    const double y = w.imag();
    const double s = std::sin(0.5 * y);
    return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

} // namespace subord

#endif // SUBORD_CORE_MAPS_HPP
