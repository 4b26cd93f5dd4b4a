#ifndef SUBORD_ANALYTIC_ENGINE_HPP
#define SUBORD_ANALYTIC_ENGINE_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "subord/analytic_map.hpp"
#include "subord/bounds.hpp"
#include "subord/core_maps.hpp"
#include "subord/detail/continuation.hpp"
#include "subord/detail/parallel.hpp"
#include "subord/errors.hpp"
#include "subord/tolerances.hpp"

namespace subord {

/// h(f) = prod_j psi_{alpha_j}(f).
inline cplx h_product(const ExceptionalSet& set, cplx fval)
{
    cplx h{1.0, 0.0};
    for (double a : set.alphas())
        h *= blaschke(a, fval);
    return h;
}

namespace detail {

/// True when every structural alpha of `v` is an element of `set`.
inline bool structure_applies(const ExceptionalSet& set, const MapValue& v)
{
    if (v.structural_alphas.empty())
        return false;
    return std::all_of(v.structural_alphas.begin(), v.structural_alphas.end(),
                       [&](double a) { return set.contains(a); });
}

/// ln h(f(z)) modulo 2 pi i, through the structural identity where it applies.
inline LogPolar h_log(const ExceptionalSet& set, const MapValue& v)
{
    const bool structural = structure_applies(set, v);
    cplx sum = structural ? v.structural_log : cplx{0.0, 0.0};
    for (double a : set.alphas()) {
        if (structural && std::any_of(v.structural_alphas.begin(), v.structural_alphas.end(),
                                      [&](double s) { return std::abs(s - a) <= kTol.duplicate_alpha; }))
            continue;
        const LogPolar lp = LogPolar::of(blaschke(a, v.f), "h");
        sum += cplx{lp.log_modulus, lp.arg};
    }
    return LogPolar::from_log(sum, structural ? v.structural_log.imag() : 0.0);
}

/// ln|alpha - f(z)|; -inf when f(z) = alpha in floating point and no structure is known.
inline double log_distance(const ExceptionalSet& set, const MapValue& v, double alpha)
{
    const double log_den = std::log(std::abs(1.0 - alpha * v.f));
    const bool structural = structure_applies(set, v) &&
                            std::any_of(v.structural_alphas.begin(), v.structural_alphas.end(),
                                        [&](double s) { return std::abs(s - alpha) <= kTol.duplicate_alpha; });
    if (!structural)
        return std::log(std::abs(alpha - v.f));
    // ln|psi_alpha(f)| = Re(structural_log) - sum over the other structural factors.
    double log_psi = v.structural_log.real();
    for (double s : v.structural_alphas)
        if (std::abs(s - alpha) > kTol.duplicate_alpha)
            log_psi -= std::log(std::abs(blaschke(s, v.f)));
    return log_psi + log_den;
}

/// Below this |h| the direct product loses too many digits to serve as a residual reference.
inline constexpr double kDirectProductFloor = 1e-4;

} // namespace detail

/// Radial continuation of g = log h(f(tz)), t in [0, 1].
struct ContinuationTrace {
    std::vector<UnitDiscPoint> path;
    std::vector<cplx> log_values;
    cplx final{0.0, 0.0};
};

/// g(z) continued along [0, z] from g(0) = sum_j ln(alpha_j).
inline ContinuationTrace analytic_log(const AnalyticMap& map, const ExceptionalSet& set, UnitDiscPoint z)
{
    ContinuationTrace trace;
    if (z.value() == cplx{0.0, 0.0}) {
        trace.path.push_back(z);
        trace.log_values.push_back(set.log_product());
        trace.final = trace.log_values.back();
        return trace;
    }

    auto sample = [&](double t) { return detail::h_log(set, evaluate_detailed(map, UnitDiscPoint(t * z.value()))); };
    std::vector<detail::PhaseNode> nodes;
    try {
        nodes = detail::continue_phase(sample, 0.0);
    } catch (const BranchError& e) {
        throw BranchError("log h continuation failed on the path to z = " + to_string(z.value()) + ": " + e.what());
    }

    trace.path.reserve(nodes.size());
    trace.log_values.reserve(nodes.size());
    for (const auto& n : nodes) {
        trace.path.emplace_back(n.t * z.value());
        trace.log_values.emplace_back(n.value.log_modulus, n.phase);
    }
    trace.final = trace.log_values.back();
    return trace;
}

/// Relative residual |exp(g) - h| / |h| at z. Uses the directly multiplied h
/// where it is well conditioned, otherwise compares in log space.
inline double log_residual(const ExceptionalSet& set, const MapValue& v, cplx g)
{
    const cplx direct = h_product(set, v.f);
    if (std::abs(direct) >= detail::kDirectProductFloor)
        return std::abs(std::exp(g) - direct) / std::abs(direct);
    const detail::LogPolar lp = detail::h_log(set, v);
    return std::abs(subord::expm1(cplx{lp.log_modulus - g.real(), wrap_phase(lp.arg - g.imag())}));
}

/// First Taylor coefficient at 0 from the trapezoidal Cauchy integral.
struct DerivativeEstimate {
    cplx value{0.0, 0.0};
    double radius = 0.0;
    int nodes = 0;
    double error_indicator = 0.0; ///< |value(radius) - value(radius / 2)|

    [[nodiscard]] bool accepted() const
    {
        return error_indicator < kTol.derivative_accept * std::max(1.0, std::abs(value));
    }
};

namespace detail {

inline void validate_contour(double radius, int nodes)
{
    if (!(radius > 0.0 && radius <= 0.75))
        throw DomainError("contour radius must lie in (0, 0.75], got " + fmt_real(radius));
    if (nodes < 64 || !std::has_single_bit(static_cast<unsigned>(nodes)))
        throw DomainError("contour node count must be a power of two >= 64, got " + std::to_string(nodes));
}

template <class Fn>
cplx cauchy_first_coefficient(Fn&& fn, double radius, int nodes)
{
    std::vector<cplx> terms(static_cast<std::size_t>(nodes));
    detail::parallel_for(terms.size(), [&](std::size_t m) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(m) / nodes;
        const cplx e = std::polar(1.0, theta);
        terms[m] = fn(UnitDiscPoint(radius * e)) * std::conj(e);
    });
    cplx sum{0.0, 0.0};
    for (const cplx& t : terms)
        sum += t;
    return sum / (static_cast<double>(nodes) * radius);
}

} // namespace detail

/// Contour estimate of fn'(0) for any function analytic on |z| <= radius.
template <class Fn>
DerivativeEstimate contour_derivative(Fn&& fn, double radius = 0.5, int nodes = 256)
{
    detail::validate_contour(radius, nodes);
    const cplx outer = detail::cauchy_first_coefficient(fn, radius, nodes);
    const cplx inner = detail::cauchy_first_coefficient(fn, 0.5 * radius, nodes);
    return {outer, radius, nodes, std::abs(outer - inner)};
}

inline DerivativeEstimate derivative_at_zero(const AnalyticMap& map, double radius = 0.5, int nodes = 256)
{
    return contour_derivative([&](UnitDiscPoint z) { return evaluate(map, z); }, radius, nodes);
}

/// g'(0) by contour differentiation of the continued logarithm.
inline DerivativeEstimate log_derivative_at_zero(const AnalyticMap& map, const ExceptionalSet& set,
                                                 double radius = 0.5, int nodes = 256)
{
    return contour_derivative([&](UnitDiscPoint z) { return analytic_log(map, set, z).final; }, radius, nodes);
}

/// |rho'(0)| for rho = g / sum_j ln(alpha_j); at most 2 when the map omits the set.
inline double rho_prime_zero(const AnalyticMap& map, const ExceptionalSet& set)
{
    const DerivativeEstimate gp = log_derivative_at_zero(map, set);
    return std::abs(gp.value) / std::abs(set.log_product());
}

/// Zeros of z -> h(f(z)) inside |z| < radius, i.e. points where f attains some alpha_j,
/// by the argument principle on the circle |z| = radius.
inline int omitted_value_hits(const AnalyticMap& map, const ExceptionalSet& set, double radius)
{
    if (!(radius > 0.0 && radius < 1.0))
        throw DomainError("radius must lie in (0, 1)");
    auto sample = [&](double t) {
        const UnitDiscPoint z = UnitDiscPoint::polar(radius, 2.0 * std::numbers::pi * t);
        return detail::h_log(set, evaluate_detailed(map, z));
    };
    const auto nodes = detail::continue_phase(sample, 0.0, 256);
    return static_cast<int>(std::lround(nodes.back().phase / (2.0 * std::numbers::pi)));
}

/// Hypotheses and conclusion of the omitted-value bound, checked on a sample of the disc.
struct VerificationReport {
    std::string map_descriptor;
    DiscSamplingPlan plan;
    double self_map_margin = 0.0; ///< 1 - max sampled |f|
    cplx origin_value{0.0, 0.0};
    double omitted_min_distance = 0.0;     ///< may underflow to 0; see omitted_min_log_distance
    double omitted_min_log_distance = 0.0; ///< min ln|f(z) - alpha_j|; finite iff no sample hits an alpha
    DerivativeEstimate derivative;
    DerivativeEstimate log_derivative; ///< g'(0)
    BoundReport bound;
    double slack = 0.0; ///< bound - |f'(0)|
    double rho_prime = 0.0;
    double identity_error = 0.0; ///< | |g'(0)| - |f'(0)| sum (1 - alpha^2) / alpha |
    std::optional<int> omitted_hits; ///< omitted_value_hits at r_max; nullopt if it could not be computed
    std::size_t evaluation_failures = 0;
    std::string first_failure; ///< message for the lowest failing sample index
    std::optional<int> branch_points_inside; ///< two-value candidates: discriminant zeros with |z| < r_max

    [[nodiscard]] bool origin_ok() const { return origin_value == cplx{0.0, 0.0}; }
    [[nodiscard]] bool self_map_ok() const { return self_map_margin > 0.0; }
    [[nodiscard]] bool omission_ok() const
    {
        return std::isfinite(omitted_min_log_distance) && omitted_hits.value_or(-1) == 0;
    }

    [[nodiscard]] bool hypotheses_ok() const
    {
        return origin_ok() && self_map_ok() && omission_ok() && evaluation_failures == 0 &&
               branch_points_inside.value_or(0) == 0;
    }

    [[nodiscard]] bool attains_bound() const { return std::abs(slack) < kTol.slack; }
    /// Negative slack with every hypothesis check passing.
    [[nodiscard]] bool theorem_violation() const { return hypotheses_ok() && slack < -kTol.slack; }
};

inline VerificationReport verify_bound(const AnalyticMap& map, const ExceptionalSet& set, const DiscSamplingPlan& plan)
{
    const std::vector<UnitDiscPoint> grid = disc_grid(plan);
    struct Sample {
        double modulus = 0.0;
        double log_distance = std::numeric_limits<double>::infinity();
        std::optional<std::string> error;
    };
    std::vector<Sample> samples(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        try {
            const MapValue v = evaluate_detailed(map, grid[i]);
            samples[i].modulus = std::abs(v.f);
            for (double a : set.alphas())
                samples[i].log_distance = std::min(samples[i].log_distance, detail::log_distance(set, v, a));
        } catch (const Error& e) {
            samples[i].error = e.what();
        }
    });

    const auto nan = std::numeric_limits<double>::quiet_NaN();
    VerificationReport r{.map_descriptor = map.descriptor(),
                         .plan = plan,
                         .derivative = {},
                         .log_derivative = {},
                         .bound = bound_k(set),
                         .omitted_hits = std::nullopt,
                         .first_failure = {},
                         .branch_points_inside = std::nullopt};
    double max_modulus = 0.0;
    // The origin maps to 0, at distance alpha_j from each omitted value.
    r.omitted_min_log_distance = std::log(set[0]);
    for (const Sample& s : samples) {
        if (s.error) {
            if (r.evaluation_failures++ == 0)
                r.first_failure = *s.error;
            continue;
        }
        max_modulus = std::max(max_modulus, s.modulus);
        r.omitted_min_log_distance = std::min(r.omitted_min_log_distance, s.log_distance);
    }
    r.self_map_margin = 1.0 - max_modulus;
    r.omitted_min_distance = std::exp(r.omitted_min_log_distance);

    auto record = [&](const Error& e) {
        if (r.evaluation_failures++ == 0)
            r.first_failure = e.what();
    };
    try {
        r.origin_value = evaluate(map, UnitDiscPoint{});
    } catch (const Error& e) {
        r.origin_value = {nan, nan};
        record(e);
    }
    try {
        r.derivative = derivative_at_zero(map);
    } catch (const Error& e) {
        r.derivative.value = {nan, nan};
        record(e);
    }
    try {
        r.log_derivative = log_derivative_at_zero(map, set);
    } catch (const Error& e) {
        r.log_derivative.value = {nan, nan};
        record(e);
    }
    try {
        r.omitted_hits = omitted_value_hits(map, set, plan.r_max);
    } catch (const Error& e) {
        record(e);
    }
    if (const auto* tv = std::get_if<TwoValueCandidate>(&map.kind())) {
        try {
            r.branch_points_inside = discriminant_zero_count(tv->spec, plan.r_max);
        } catch (const Error& e) {
            record(e);
        }
    }

    const double fprime = std::abs(r.derivative.value);
    r.slack = r.bound.bound - fprime;
    r.rho_prime = std::abs(r.log_derivative.value) / std::abs(set.log_product());
    r.identity_error = std::abs(std::abs(r.log_derivative.value) - fprime * set.derivative_weight());
    return r;
}

/// exp(g) = h and Re(g) < 0 over every sample of a plan.
struct LogConsistency {
    std::size_t points = 0;
    double max_residual = 0.0;
    double max_real_part = -std::numeric_limits<double>::infinity();
    double max_phase_step = 0.0; ///< largest |Im| increment between consecutive trace nodes
};

inline LogConsistency log_consistency(const AnalyticMap& map, const ExceptionalSet& set, const DiscSamplingPlan& plan)
{
    const std::vector<UnitDiscPoint> grid = disc_grid(plan);
    struct Row {
        double residual;
        double real_part;
        double step;
    };
    std::vector<Row> rows(grid.size());
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        const ContinuationTrace tr = analytic_log(map, set, grid[i]);
        const MapValue v = evaluate_detailed(map, grid[i]);
        double step = 0.0;
        for (std::size_t n = 1; n < tr.log_values.size(); ++n)
            step = std::max(step, std::abs(tr.log_values[n].imag() - tr.log_values[n - 1].imag()));
        rows[i] = {log_residual(set, v, tr.final), tr.final.real(), step};
    });

    LogConsistency out;
    out.points = rows.size();
    for (const Row& row : rows) {
        out.max_residual = std::max(out.max_residual, row.residual);
        out.max_real_part = std::max(out.max_real_part, row.real_part);
        out.max_phase_step = std::max(out.max_phase_step, row.step);
    }
    return out;
}

} // namespace subord

#endif // SUBORD_ANALYTIC_ENGINE_HPP
