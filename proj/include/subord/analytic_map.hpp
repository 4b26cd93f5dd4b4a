#ifndef SUBORD_ANALYTIC_MAP_HPP
#define SUBORD_ANALYTIC_MAP_HPP

#include <cmath>
#include <complex>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "subord/bounds.hpp"
#include "subord/core_maps.hpp"
#include "subord/errors.hpp"
#include "subord/two_value/discriminant.hpp"

namespace subord {

class AnalyticMap;

/// z -> d z, |d| <= 1.
struct ScaledIdentity {
    cplx d;
};

/// The one-value extremal map psi_alpha(exp(ln(alpha) (1 + cz) / (1 - cz))).
struct ExtremalK1 {
    double alpha;
    UnimodularConstant c;
};

/// psi_alpha(exp(ln(alpha) (1 + v) / (1 - v))) with v = inner(z); ExtremalK1 is the case inner(z) = cz.
struct SchwarzFamily {
    double alpha;
    std::shared_ptr<const AnalyticMap> inner;
};

/// The root of (1 - a1 a2 u) f^2 + (u - 1)(a1 + a2) f + a1 a2 - u = 0 selected by radial
/// continuation of the square root of its discriminant.
struct TwoValueCandidate {
    TwoValueSpec spec;
};

/// A closed catalog of analytic self-maps of the disc fixing the origin.
class AnalyticMap {
public:
    using Kind = std::variant<ScaledIdentity, ExtremalK1, SchwarzFamily, TwoValueCandidate>;

    /// `declared` lists values the caller knows the map omits (may be empty).
    static AnalyticMap scaled_identity(cplx d, std::vector<double> declared = {})
    {
        if (!(std::abs(d) <= 1.0))
            throw DomainError("scaled_identity needs |d| <= 1, got " + to_string(d));
        return AnalyticMap(ScaledIdentity{d}, std::move(declared));
    }

    static AnalyticMap extremal_k1(double alpha, UnimodularConstant c)
    {
        detail::require_open_unit_interval(alpha, "alpha");
        return AnalyticMap(ExtremalK1{alpha, c}, {alpha});
    }

    static AnalyticMap schwarz_family(double alpha, AnalyticMap inner)
    {
        detail::require_open_unit_interval(alpha, "alpha");
        return AnalyticMap(SchwarzFamily{alpha, std::make_shared<const AnalyticMap>(std::move(inner))}, {alpha});
    }

    /// No feasibility check; see candidate_extremal_map for the checked constructor.
    static AnalyticMap two_value_candidate(const TwoValueSpec& spec)
    {
        return AnalyticMap(TwoValueCandidate{spec}, {spec.alpha1(), spec.alpha2()});
    }

    [[nodiscard]] const Kind& kind() const { return kind_; }
    [[nodiscard]] const std::vector<double>& declared() const { return declared_; }

    [[nodiscard]] std::optional<ExceptionalSet> declared_set() const
    {
        if (declared_.empty())
            return std::nullopt;
        return ExceptionalSet(declared_);
    }

    [[nodiscard]] std::string descriptor() const
    {
        std::ostringstream os;
        os.precision(12);
        std::visit(
            [&](const auto& k) {
                using K = std::decay_t<decltype(k)>;
                if constexpr (std::is_same_v<K, ScaledIdentity>)
                    os << "scaled_identity(d=" << to_string(k.d) << ")";
                else if constexpr (std::is_same_v<K, ExtremalK1>)
                    os << "extremal_k1(alpha=" << k.alpha << ", c=" << to_string(k.c.value()) << ")";
                else if constexpr (std::is_same_v<K, SchwarzFamily>)
                    os << "schwarz_family(alpha=" << k.alpha << ", inner=" << k.inner->descriptor() << ")";
                else
                    os << "two_value_candidate(alpha1=" << k.spec.alpha1() << ", alpha2=" << k.spec.alpha2()
                       << ", c=" << to_string(k.spec.c().value()) << ")";
            },
            kind_);
        return os.str();
    }

private:
    AnalyticMap(Kind kind, std::vector<double> declared) : kind_(std::move(kind)), declared_(std::move(declared)) {}

    Kind kind_;
    std::vector<double> declared_;
};

/// f(z) together with what the construction knows exactly: for the listed alphas,
/// prod psi_alpha(f(z)) = exp(structural_log). Lets callers work with
/// |f - alpha| and h far below the double range.
struct MapValue {
    cplx f;
    std::vector<double> structural_alphas;
    cplx structural_log{0.0, 0.0};
};

namespace detail {

/// psi_alpha(exp(s)) with s = ln(alpha) (1 + v) / (1 - v), returning f and s.
inline MapValue schwarz_value(double alpha, cplx v)
{
    const double la = std::log(alpha);
    const cplx w = la * (2.0 * v / (1.0 - v)); // s - ln(alpha); zero at v = 0
    const cplx s = la + w;
    if (!(s.real() < 0.0) || !std::isfinite(s.real()))
        throw NumericalDefect("extremal exponent has Re(s) = " + fmt_real(s.real()) + " (must be negative)");
    // f = (alpha - alpha e^w) / (1 - alpha^2 e^w)
    const cplx f = -alpha * subord::expm1(w) / (1.0 - alpha * alpha * std::exp(w));
    return {f, {alpha}, s};
}

} // namespace detail

inline MapValue evaluate_detailed(const AnalyticMap& map, UnitDiscPoint z);

inline cplx evaluate(const AnalyticMap& map, UnitDiscPoint z) { return evaluate_detailed(map, z).f; }

inline MapValue evaluate_detailed(const AnalyticMap& map, UnitDiscPoint z)
{
    return std::visit(
        [&](const auto& k) -> MapValue {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, ScaledIdentity>) {
                return {k.d * z.value(), {}, {}};
            } else if constexpr (std::is_same_v<K, ExtremalK1>) {
                return detail::schwarz_value(k.alpha, k.c.value() * z.value());
            } else if constexpr (std::is_same_v<K, SchwarzFamily>) {
                const cplx v = evaluate(*k.inner, z);
                if (!(std::norm(v) < 1.0))
                    throw NumericalDefect("inner map left the disc at z = " + to_string(z.value()));
                return detail::schwarz_value(k.alpha, v);
            } else {
                const TwoValueBranch b = two_value_branch(k.spec, z);
                return {b.f, {k.spec.alpha1(), k.spec.alpha2()}, b.log_u};
            }
        },
        map.kind());
}

} // namespace subord

#endif // SUBORD_ANALYTIC_MAP_HPP
