#ifndef SUBORD_EXTREMAL_K1_HPP
#define SUBORD_EXTREMAL_K1_HPP

#include <cmath>

#include "subord/analytic_map.hpp"
#include "subord/bounds.hpp"
#include "subord/core_maps.hpp"

namespace subord {

struct ExtremalSpec {
    double alpha;
    UnimodularConstant c;

    ExtremalSpec(double a, UnimodularConstant rotation = {}) : alpha(a), c(rotation)
    {
        detail::require_open_unit_interval(a, "alpha");
    }
};

/// The map attaining equality in the single-omitted-value bound.
///
/// Accuracy degrades beyond |z| = 0.9999 in the direction of conj(c), where
/// (1 + cz) / (1 - cz) blows up; no compensated arithmetic is attempted.
inline AnalyticMap extremal_map(const ExtremalSpec& spec) { return AnalyticMap::extremal_k1(spec.alpha, spec.c); }

/// f'(0) = 2 c alpha ln(1/alpha) / (1 - alpha^2), by the chain rule through psi_alpha o exp.
inline cplx extremal_derivative_closed_form(const ExtremalSpec& spec)
{
    return bound_k1(spec.alpha) * spec.c.value();
}

} // namespace subord

#endif // SUBORD_EXTREMAL_K1_HPP
