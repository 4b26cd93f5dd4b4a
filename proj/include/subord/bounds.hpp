#ifndef SUBORD_BOUNDS_HPP
#define SUBORD_BOUNDS_HPP

#include <algorithm>
#include <cmath>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "subord/errors.hpp"
#include "subord/tolerances.hpp"

namespace subord {

namespace detail {

inline std::string fmt_real(double x)
{
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

inline void require_open_unit_interval(double alpha, const char* what)
{
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError(std::string(what) + " " + fmt_real(alpha) + " is not in (0, 1)");
}

} // namespace detail

/// Omitted values alpha_1 < ... < alpha_k, all strictly inside (0, 1).
class ExceptionalSet {
public:
    explicit ExceptionalSet(std::vector<double> alphas) : alphas_(std::move(alphas))
    {
        if (alphas_.empty())
            throw DomainError("exceptional set is empty");
        for (double a : alphas_)
            detail::require_open_unit_interval(a, "exceptional value");
        std::sort(alphas_.begin(), alphas_.end());
        for (std::size_t i = 1; i < alphas_.size(); ++i)
            if (alphas_[i] - alphas_[i - 1] <= kTol.duplicate_alpha)
                throw DomainError("duplicate exceptional value " + detail::fmt_real(alphas_[i]));
    }

    ExceptionalSet(std::initializer_list<double> alphas) : ExceptionalSet(std::vector<double>(alphas)) {}

    [[nodiscard]] std::span<const double> alphas() const { return alphas_; }
    [[nodiscard]] std::size_t size() const { return alphas_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return alphas_[i]; }

    /// sum_j ln(alpha_j) = g(0); always negative.
    [[nodiscard]] double log_product() const
    {
        double s = 0.0;
        for (double a : alphas_)
            s += std::log(a);
        return s;
    }

    /// sum_j (1 - alpha_j^2) / alpha_j.
    [[nodiscard]] double derivative_weight() const
    {
        double s = 0.0;
        for (double a : alphas_)
            s += (1.0 - a) * (1.0 + a) / a;
        return s;
    }

    /// True when some element lies within the duplicate tolerance of alpha.
    [[nodiscard]] bool contains(double alpha) const
    {
        return std::any_of(alphas_.begin(), alphas_.end(),
                           [&](double a) { return std::abs(a - alpha) <= kTol.duplicate_alpha; });
    }

    friend bool operator==(const ExceptionalSet&, const ExceptionalSet&) = default;

private:
    std::vector<double> alphas_;
};

struct BoundReport {
    std::size_t k = 0;
    ExceptionalSet alphas;
    double numerator = 0.0;   ///< 2 ln(1 / prod alpha_j)
    double denominator = 0.0; ///< sum (1 - alpha_j^2) / alpha_j
    double bound = 0.0;
};

/// Upper bound on |f'(0)| for self-maps of the disc fixing 0 and omitting every alpha_j.
inline BoundReport bound_k(const ExceptionalSet& set)
{
    // Summing logs keeps the numerator finite for many tiny alphas.
    const double numerator = -2.0 * set.log_product();
    const double denominator = set.derivative_weight();
    return BoundReport{set.size(), set, numerator, denominator, numerator / denominator};
}

/// Single omitted value: 2 alpha ln(1/alpha) / (1 - alpha^2).
inline double bound_k1(double alpha)
{
    detail::require_open_unit_interval(alpha, "alpha");
    return -2.0 * alpha * std::log(alpha) / ((1.0 - alpha) * (1.0 + alpha));
}

} // namespace subord

#endif // SUBORD_BOUNDS_HPP
