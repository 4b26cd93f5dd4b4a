#ifndef SUBORD_DETAIL_CONTINUATION_HPP
#define SUBORD_DETAIL_CONTINUATION_HPP

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "subord/core_maps.hpp"
#include "subord/errors.hpp"
#include "subord/tolerances.hpp"

namespace subord::detail {

/// A nonzero complex number held as ln|v| and its principal argument.
/// Magnitudes far below the double range stay representable.
///
/// `anchor` is the part of the argument already known as a continuous function
/// of the path (0 when nothing is known); continuation steps are refined until
/// it moves by less than pi/2, so fast windings cannot alias.
struct LogPolar {
    double log_modulus = 0.0;
    double arg = 0.0;
    double anchor = 0.0;

    static LogPolar of(cplx v, const char* what)
    {
        if (v == cplx{0.0, 0.0} || !std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw BranchError(std::string(what) + " vanished or is not finite on the continuation path");
        return {std::log(std::abs(v)), std::arg(v)};
    }

    /// From an arbitrary logarithm (any branch).
    static LogPolar from_log(cplx log_value, double anchor = 0.0)
    {
        return {log_value.real(), wrap_phase(log_value.imag()), anchor};
    }
};

struct PhaseNode {
    double t = 0.0;
    LogPolar value;
    double phase = 0.0; ///< continued argument; equals value.arg modulo 2 pi
};

/// Continues the argument of a zero-free path t -> v(t), t in [0, 1], starting
/// from `initial_phase` at t = 0. The path is cut into `initial_steps` equal
/// pieces; any piece whose anchor increment or remaining principal phase
/// increment is not below pi/2 is bisected, until at most `budget` pieces exist.
template <class Sample>
std::vector<PhaseNode> continue_phase(Sample&& sample, double initial_phase,
                                      int initial_steps = kInitialSteps, int budget = kStepBudget)
{
    struct Pending {
        double t;
        LogPolar v;
    };

    std::vector<PhaseNode> nodes;
    nodes.reserve(static_cast<std::size_t>(initial_steps) + 1);
    const LogPolar start = sample(0.0);
    nodes.push_back({0.0, start, initial_phase});

    std::vector<Pending> pending;
    pending.reserve(static_cast<std::size_t>(initial_steps));
    for (int k = initial_steps; k >= 1; --k) {
        const double t = static_cast<double>(k) / initial_steps;
        pending.push_back({t, sample(t)});
    }

    int steps = initial_steps;
    while (!pending.empty()) {
        const PhaseNode last = nodes.back();
        const Pending next = pending.back();
        const double da = next.v.anchor - last.value.anchor;
        const double dr = wrap_phase((next.v.arg - next.v.anchor) - (last.value.arg - last.value.anchor));
        const double d = da + dr;
        if (std::abs(da) >= 0.5 * std::numbers::pi || std::abs(dr) >= 0.5 * std::numbers::pi) {
            const double mid = 0.5 * (last.t + next.t);
            if (steps >= budget || !(mid > last.t && mid < next.t))
                throw BranchError("phase continuation exceeded its step budget near t = " + std::to_string(last.t));
            pending.push_back({mid, sample(mid)});
            ++steps;
            continue;
        }
        pending.pop_back();
        nodes.push_back({next.t, next.v, last.phase + d});
    }
    return nodes;
}

} // namespace subord::detail

#endif // SUBORD_DETAIL_CONTINUATION_HPP
