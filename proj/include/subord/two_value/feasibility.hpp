#ifndef SUBORD_TWO_VALUE_FEASIBILITY_HPP
#define SUBORD_TWO_VALUE_FEASIBILITY_HPP

#include <cmath>
#include <limits>
#include <string_view>
#include <vector>

#include "subord/detail/parallel.hpp"
#include "subord/errors.hpp"
#include "subord/tolerances.hpp"
#include "subord/two_value/discriminant.hpp"

namespace subord {

enum class Verdict { feasible, infeasible, inconclusive };

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::feasible:
        return "feasible";
    case Verdict::infeasible:
        return "infeasible";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

/// Whether every root w of discriminant(w) = t, t >= 0, lies outside the open unit disc.
struct FeasibilityReport {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    DiscriminantQuadratic quadratic;
    double t_max = 0.0;
    int t_samples = 0;
    double min_root_modulus = 0.0; ///< over both roots and the whole t-grid
    double argmin_t = 0.0;
    double t0_min_root_modulus = 0.0; ///< smaller root modulus at t = 0
    bool t0_circle_test = false;      ///< both t = 0 roots on the unit circle: |a_mid| <= 2 a_lead
    double one_root_min_modulus = 0.0; ///< min over t of the single root (b - sqrt(b^2 - 4a(a - t))) / 2a, b = -a_mid
    Verdict verdict = Verdict::inconclusive;
};

inline Verdict classify(double min_root_modulus, bool t0_circle_test)
{
    if (min_root_modulus < 1.0 - kTol.verdict_band)
        return Verdict::infeasible;
    if (min_root_modulus >= 1.0 + kTol.verdict_band && t0_circle_test)
        return Verdict::feasible;
    return Verdict::inconclusive;
}

inline constexpr int kDefaultTSamples = 1024;

inline FeasibilityReport feasibility_check(double alpha1, double alpha2, int t_samples = kDefaultTSamples)
{
    if (t_samples < 2)
        throw DomainError("t_samples must be >= 2");
    FeasibilityReport r;
    r.alpha1 = alpha1;
    r.alpha2 = alpha2;
    r.quadratic = discriminant_quadratic(alpha1, alpha2);
    const DiscriminantQuadratic& q = r.quadratic;
    // |w| < 1 implies |q(w)| <= a_lead + |a_mid| + a_const, so larger t cannot give inside roots.
    r.t_max = 2.0 * q.a_lead + std::abs(q.a_mid);
    r.t_samples = t_samples;
    r.t0_circle_test = std::abs(q.a_mid) <= 2.0 * q.a_lead;

    r.min_root_modulus = std::numeric_limits<double>::infinity();
    r.one_root_min_modulus = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t_samples; ++i) {
        const double t = i == t_samples - 1 ? r.t_max : r.t_max * static_cast<double>(i) / (t_samples - 1);
        const RootPair roots = discriminant_roots(q, t);
        const double m = std::min(std::abs(roots.first), std::abs(roots.second));
        if (i == 0)
            r.t0_min_root_modulus = m;
        if (m < r.min_root_modulus) {
            r.min_root_modulus = m;
            r.argmin_t = t;
        }
        // With b = -a_mid, (b - sqrt(b^2 - 4 a (a - t))) / 2a is the sign-matched root when a_mid > 0.
        const double b = -q.a_mid;
        const cplx disc = cplx{b * b - 4.0 * q.a_lead * (q.a_const - t), 0.0};
        const double one = std::abs((b - std::sqrt(disc)) / (2.0 * q.a_lead));
        r.one_root_min_modulus = std::min(r.one_root_min_modulus, one);
    }
    r.verdict = classify(r.min_root_modulus, r.t0_circle_test);
    return r;
}

struct ScanCell {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    Verdict verdict = Verdict::inconclusive;
    double min_root_modulus = 0.0;
    double one_root_min_modulus = 0.0;
};

struct RegionScan {
    int resolution = 0;
    int t_samples = 0;
    std::vector<ScanCell> cells; ///< row-major over (i, j), diagonal omitted
    std::size_t feasible = 0;
    std::size_t infeasible = 0;
    std::size_t inconclusive = 0;
    std::size_t one_root_feasible = 0; ///< cells whose one-root modulus is >= 1 + band
};

/// Feasibility on the grid (i / (R + 1), j / (R + 1)), 1 <= i, j <= R, i != j.
inline RegionScan region_scan(int resolution, int t_samples = kDefaultTSamples)
{
    if (resolution < 2)
        throw DomainError("scan resolution must be >= 2");
    RegionScan scan;
    scan.resolution = resolution;
    scan.t_samples = t_samples;
    const double step = 1.0 / (resolution + 1);
    for (int i = 1; i <= resolution; ++i)
        for (int j = 1; j <= resolution; ++j)
            if (i != j)
                scan.cells.push_back({i * step, j * step});

    detail::parallel_for(scan.cells.size(), [&](std::size_t n) {
        ScanCell& cell = scan.cells[n];
        const FeasibilityReport r = feasibility_check(cell.alpha1, cell.alpha2, t_samples);
        cell.verdict = r.verdict;
        cell.min_root_modulus = r.min_root_modulus;
        cell.one_root_min_modulus = r.one_root_min_modulus;
    });

    for (const ScanCell& c : scan.cells) {
        switch (c.verdict) {
        case Verdict::feasible:
            ++scan.feasible;
            break;
        case Verdict::infeasible:
            ++scan.infeasible;
            break;
        case Verdict::inconclusive:
            ++scan.inconclusive;
            break;
        }
        if (c.one_root_min_modulus >= 1.0 + kTol.verdict_band)
            ++scan.one_root_feasible;
    }
    return scan;
}

} // namespace subord

#endif // SUBORD_TWO_VALUE_FEASIBILITY_HPP
