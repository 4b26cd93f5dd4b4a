#ifndef SUBORD_TWO_VALUE_CANDIDATE_HPP
#define SUBORD_TWO_VALUE_CANDIDATE_HPP

#include <cmath>
#include <string>

#include "subord/analytic_engine.hpp"
#include "subord/analytic_map.hpp"
#include "subord/errors.hpp"
#include "subord/two_value/discriminant.hpp"
#include "subord/two_value/feasibility.hpp"

namespace subord {

/// Candidate extremal map for two omitted values. Requires a feasible pair;
/// otherwise the discriminant has zeros in the disc and no analytic square root exists.
inline AnalyticMap candidate_extremal_map(const TwoValueSpec& spec, int t_samples = kDefaultTSamples)
{
    const FeasibilityReport r = feasibility_check(spec.alpha1(), spec.alpha2(), t_samples);
    if (r.verdict != Verdict::feasible)
        throw PreconditionError("pair (" + detail::fmt_real(spec.alpha1()) + ", " + detail::fmt_real(spec.alpha2()) +
                                ") is " + std::string(to_string(r.verdict)) + " (min root modulus " +
                                detail::fmt_real(r.min_root_modulus) + ")");
    return AnalyticMap::two_value_candidate(spec);
}

/// The same construction without the feasibility gate. Evaluation is meaningful
/// on discs free of discriminant zeros (see discriminant_nearest_zero).
inline AnalyticMap candidate_map_unchecked(const TwoValueSpec& spec) { return AnalyticMap::two_value_candidate(spec); }

struct SharpnessReport {
    VerificationReport report;
    double bound_gap = 0.0;   ///< | |f'(0)| - bound |
    bool matches_bound = false; ///< bound_gap < 1e-6
};

inline constexpr double kSharpnessTolerance = 1e-6;

/// Verification of an already constructed two-value candidate against the k = 2 bound.
inline SharpnessReport verify_candidate(const AnalyticMap& candidate, const DiscSamplingPlan& plan)
{
    const auto set = candidate.declared_set();
    if (!set || set->size() != 2)
        throw DomainError("verify_candidate expects a map declaring two omitted values");
    SharpnessReport s{verify_bound(candidate, *set, plan)};
    s.bound_gap = std::abs(std::abs(s.report.derivative.value) - s.report.bound.bound);
    s.matches_bound = s.bound_gap < kSharpnessTolerance;
    return s;
}

inline SharpnessReport sharpness_verify(const TwoValueSpec& spec, const DiscSamplingPlan& plan)
{
    return verify_candidate(candidate_extremal_map(spec), plan);
}

} // namespace subord

#endif // SUBORD_TWO_VALUE_CANDIDATE_HPP
