#ifndef SUBORD_TOLERANCES_HPP
#define SUBORD_TOLERANCES_HPP

namespace subord {

/// Default numerical tolerances shared by every module.
struct Tolerances {
    double round_trip = 1e-12;       ///< involution / bijection round trips
    double residual = 1e-9;          ///< exp(g) = h, quadratic residuals
    double unimodular = 1e-12;       ///< accepted | |c| - 1 | before renormalizing
    double duplicate_alpha = 1e-12;  ///< exceptional values closer than this are duplicates
    double distinct_pair = 1e-9;     ///< minimum |alpha1 - alpha2| for the two-value analysis
    double verdict_band = 1e-9;      ///< width of the "inconclusive" band around modulus 1
    double derivative_accept = 1e-9; ///< accepted error_indicator relative to max(1, |f'(0)|)
    double slack = 1e-7;             ///< |bound - |f'(0)|| treated as equality
    double pole = 1e-300;            ///< |1 - alpha w| below this is a pole
};

inline constexpr Tolerances kTol{};

/// Budgets for the adaptive phase continuation.
inline constexpr int kInitialSteps = 64;
inline constexpr int kStepBudget = 1 << 16;

} // namespace subord

#endif // SUBORD_TOLERANCES_HPP
