#ifndef SUBORD_TWO_VALUE_DISCRIMINANT_HPP
#define SUBORD_TWO_VALUE_DISCRIMINANT_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "subord/bounds.hpp"
#include "subord/core_maps.hpp"
#include "subord/detail/continuation.hpp"
#include "subord/errors.hpp"
#include "subord/tolerances.hpp"

namespace subord {

/// Two distinct omitted values and the rotation of the candidate extremal map.
class TwoValueSpec {
public:
    TwoValueSpec(double alpha1, double alpha2, UnimodularConstant c = {})
        : alpha1_(alpha1), alpha2_(alpha2), c_(c)
    {
        detail::require_open_unit_interval(alpha1, "alpha1");
        detail::require_open_unit_interval(alpha2, "alpha2");
        if (!(std::abs(alpha1 - alpha2) > kTol.distinct_pair))
            throw DomainError("alpha1 and alpha2 must be distinct, got " + detail::fmt_real(alpha1) +
                              " twice");
    }

    [[nodiscard]] double alpha1() const { return alpha1_; }
    [[nodiscard]] double alpha2() const { return alpha2_; }
    [[nodiscard]] UnimodularConstant c() const { return c_; }
    [[nodiscard]] double product() const { return alpha1_ * alpha2_; }
    [[nodiscard]] double sum() const { return alpha1_ + alpha2_; }

    friend bool operator==(const TwoValueSpec&, const TwoValueSpec&) = default;

private:
    double alpha1_;
    double alpha2_;
    UnimodularConstant c_;
};

/// ln u(z) = ln(alpha1 alpha2) (1 + cz) / (1 - cz), written as ln p + ln p * 2cz / (1 - cz)
/// so that the value at z = 0 is exact.
inline cplx log_u_map(const TwoValueSpec& spec, UnitDiscPoint z)
{
    const double lp = std::log(spec.product());
    const cplx cz = spec.c().value() * z.value();
    return lp + lp * (2.0 * cz / (1.0 - cz));
}

/// u(z) = exp(ln(alpha1 alpha2) (1 + cz) / (1 - cz)); maps the disc into the punctured disc.
inline cplx u_map(const TwoValueSpec& spec, UnitDiscPoint z)
{
    const double lp = std::log(spec.product());
    const cplx cz = spec.c().value() * z.value();
    return spec.product() * std::exp(lp * (2.0 * cz / (1.0 - cz)));
}

/// a_lead u^2 + a_mid u + a_const, the discriminant of the quadratic in f as a polynomial in u.
struct DiscriminantQuadratic {
    double a_lead = 0.0;
    double a_mid = 0.0;
    double a_const = 0.0;

    [[nodiscard]] cplx operator()(cplx w) const { return (a_lead * w + a_mid) * w + a_const; }
};

inline DiscriminantQuadratic discriminant_quadratic(double alpha1, double alpha2)
{
    const TwoValueSpec spec(alpha1, alpha2); // validates
    const double d = alpha1 - alpha2;
    const double p = spec.product();
    const double s = spec.sum();
    const double lead = d * d;
    // 4 + 4p^2 - 2s^2 rewritten so that nothing cancels near alpha1 = alpha2 = 1
    const double mid = 2.0 * lead + 4.0 * (1.0 - alpha1) * (1.0 - alpha2) * (1.0 + p + s);
    return {lead, mid, lead};
}

/// Unexpanded discriminant (u - 1)^2 (a1 + a2)^2 - 4 (1 - a1 a2 u)(a1 a2 - u).
inline cplx discriminant_unexpanded(double alpha1, double alpha2, cplx u)
{
    const double p = alpha1 * alpha2;
    const double s = alpha1 + alpha2;
    const cplx um1 = u - 1.0;
    return um1 * um1 * (s * s) - 4.0 * (1.0 - p * u) * (p - u);
}

struct RootPair {
    cplx first;  ///< larger magnitude (sign-matched formula)
    cplx second; ///< from the product relation
};

/// Roots of a_lead w^2 + a_mid w + (a_const - t) = 0.
inline RootPair discriminant_roots(const DiscriminantQuadratic& q, double t)
{
    if (!(t >= 0.0))
        throw DomainError("discriminant_roots needs t >= 0, got " + detail::fmt_real(t));
    const double c = q.a_const - t;
    const double disc = q.a_mid * q.a_mid - 4.0 * q.a_lead * c;
    if (disc >= 0.0) {
        const double big = -0.5 * (q.a_mid + std::copysign(std::sqrt(disc), q.a_mid));
        if (big == 0.0)
            return {0.0, 0.0};
        return {big / q.a_lead, c / big};
    }
    const double re = -q.a_mid / (2.0 * q.a_lead);
    const double im = std::sqrt(-disc) / (2.0 * q.a_lead);
    return {{re, im}, {re, -im}};
}

/// 4 beta^4 + 8 beta^2 - 4 < 0, i.e. beta < sqrt(sqrt(2) - 1).
inline bool beta_condition(double beta)
{
    detail::require_open_unit_interval(beta, "beta");
    const double b2 = beta * beta;
    return 4.0 * b2 * b2 + 8.0 * b2 - 4.0 < 0.0;
}

/// One point of the two-value candidate: u, the discriminant, the continued
/// square-root branch and both roots of the quadratic in f.
struct TwoValueBranch {
    cplx u;
    cplx log_u;
    cplx discriminant;
    cplx sqrt_branch;
    cplx f;          ///< root selected by the branch (vanishes at z = 0)
    cplx other_root; ///< the companion root of the same quadratic
    double residual = 0.0;
};

namespace detail {

/// Both roots [(1-u)s -/+ r] / [2(1 - pu)] without cancellation.
inline void two_value_roots(double p, double s, cplx u, cplx root, cplx& f, cplx& other)
{
    const cplx lin = (1.0 - u) * s;
    const cplx den = 2.0 * (1.0 - p * u);
    const cplx minus = lin - root;
    const cplx plus = lin + root;
    // f * other = (p - u) / (1 - pu)
    if (std::abs(plus) >= std::abs(minus)) {
        other = plus / den;
        f = 2.0 * (p - u) / plus;
    } else {
        f = minus / den;
        other = 2.0 * (p - u) / minus;
    }
}

inline double quadratic_residual(double p, double s, cplx u, cplx f)
{
    const cplx a = 1.0 - p * u;
    const cplx b = (u - 1.0) * s;
    const cplx c = p - u;
    const double scale = std::abs(a) * std::norm(f) + std::abs(b) * std::abs(f) + std::abs(c) +
                         std::numeric_limits<double>::min();
    return std::abs((a * f + b) * f + c) / scale;
}

} // namespace detail

/// Evaluates the candidate at z, continuing sqrt(discriminant(u(tz))) radially
/// from the root +(1 - a1 a2)(a1 + a2) at t = 0.
inline TwoValueBranch two_value_branch(const TwoValueSpec& spec, UnitDiscPoint z)
{
    const double p = spec.product();
    const double s = spec.sum();
    TwoValueBranch out;
    if (z.value() == cplx{0.0, 0.0}) {
        out.log_u = std::log(p);
        out.u = p;
        out.sqrt_branch = (1.0 - p) * s;
        out.discriminant = out.sqrt_branch * out.sqrt_branch;
    } else {
        auto sample = [&](double t) {
            const UnitDiscPoint zt(t * z.value());
            return detail::LogPolar::of(discriminant_unexpanded(spec.alpha1(), spec.alpha2(), u_map(spec, zt)),
                                        "discriminant");
        };
        std::vector<detail::PhaseNode> nodes;
        try {
            nodes = detail::continue_phase(sample, 0.0);
        } catch (const BranchError& e) {
            throw BranchError("square-root branch point on the path to z = " + to_string(z.value()) + ": " +
                              e.what());
        }
        const detail::PhaseNode& last = nodes.back();
        out.log_u = log_u_map(spec, z);
        out.u = u_map(spec, z);
        out.discriminant = std::polar(std::exp(last.value.log_modulus), last.value.arg);
        out.sqrt_branch = std::polar(std::exp(0.5 * last.value.log_modulus), 0.5 * last.phase);
    }
    detail::two_value_roots(p, s, out.u, out.sqrt_branch, out.f, out.other_root);
    out.residual = detail::quadratic_residual(p, s, out.u, out.f);
    if (!(out.residual < kTol.residual))
        throw NumericalDefect("quadratic residual " + detail::fmt_real(out.residual) + " at z = " +
                              to_string(z.value()));
    return out;
}

/// Number of zeros of z -> discriminant(u(z)) inside |z| < radius (argument principle).
inline int discriminant_zero_count(const TwoValueSpec& spec, double radius)
{
    if (!(radius > 0.0 && radius < 1.0))
        throw DomainError("radius must lie in (0, 1)");
    auto sample = [&](double t) {
        const UnitDiscPoint z = UnitDiscPoint::polar(radius, 2.0 * std::numbers::pi * t);
        return detail::LogPolar::of(discriminant_unexpanded(spec.alpha1(), spec.alpha2(), u_map(spec, z)),
                                    "discriminant");
    };
    const auto nodes = detail::continue_phase(sample, 0.0, 256);
    return static_cast<int>(std::lround(nodes.back().phase / (2.0 * std::numbers::pi)));
}

/// Zero of z -> discriminant(u(z)) nearest the origin, located by solving
/// u(z) = w for the root w of the discriminant quadratic inside the unit disc.
inline std::optional<cplx> discriminant_nearest_zero(const TwoValueSpec& spec)
{
    const auto q = discriminant_quadratic(spec.alpha1(), spec.alpha2());
    const RootPair roots = discriminant_roots(q, 0.0);
    const cplx w = std::abs(roots.first) < std::abs(roots.second) ? roots.first : roots.second;
    if (!(std::abs(w) < 1.0) || w == cplx{0.0, 0.0})
        return std::nullopt;

    const double lp = std::log(spec.product());
    std::optional<cplx> best;
    double best_modulus = std::numeric_limits<double>::infinity();
    for (int m = -64; m <= 64; ++m) {
        const cplx log_w{std::log(std::abs(w)), std::arg(w) + 2.0 * std::numbers::pi * m};
        const cplx half_plane = log_w / lp; // = (1 + cz) / (1 - cz)
        if (!(half_plane.real() > 0.0))
            continue;
        const cplx z = (half_plane - 1.0) / (half_plane + 1.0) / spec.c().value();
        if (std::abs(z) < best_modulus) {
            best_modulus = std::abs(z);
            best = z;
        }
    }
    return best;
}

} // namespace subord

#endif // SUBORD_TWO_VALUE_DISCRIMINANT_HPP
