#ifndef SUBORD_IO_RENDER_HPP
#define SUBORD_IO_RENDER_HPP

// Machine-readable rendering of reports. Requires nlohmann/json.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "subord/subord.hpp"

namespace subord::io {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "subord";
inline constexpr const char* kToolVersion = "0.1.0";

/// Text form of a double at 12 significant digits, locale independent.
inline std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// x rounded to 12 significant digits; non-finite values become JSON null.
inline json number(double x)
{
    if (!std::isfinite(x))
        return nullptr;
    return std::strtod(format_number(x).c_str(), nullptr);
}

inline json number(cplx z) { return json{{"re", number(z.real())}, {"im", number(z.imag())}}; }

inline json alphas_json(const ExceptionalSet& set)
{
    json a = json::array();
    for (double x : set.alphas())
        a.push_back(number(x));
    return a;
}

inline json plan_json(const DiscSamplingPlan& p)
{
    return {{"radii", p.radii_count}, {"angles", p.angles_count}, {"r_max", number(p.r_max)}};
}

inline json to_json(const BoundReport& b)
{
    return {{"k", b.k},
            {"alphas", alphas_json(b.alphas)},
            {"numerator", number(b.numerator)},
            {"denominator", number(b.denominator)},
            {"bound", number(b.bound)}};
}

inline json to_json(const DerivativeEstimate& d)
{
    const double deg = std::arg(d.value) * 180.0 / std::numbers::pi;
    return {{"value", number(d.value)},
            {"modulus", number(std::abs(d.value))},
            {"argument_deg", number(deg)},
            {"radius", number(d.radius)},
            {"nodes", d.nodes},
            {"error_indicator", number(d.error_indicator)},
            {"accepted", d.accepted()}};
}

inline json to_json(const VerificationReport& r)
{
    json j{{"map", r.map_descriptor},
           {"plan", plan_json(r.plan)},
           {"origin_value", number(r.origin_value)},
           {"self_map_margin", number(r.self_map_margin)},
           {"omitted_min_distance", number(r.omitted_min_distance)},
           {"omitted_min_log_distance", number(r.omitted_min_log_distance)},
           {"derivative", to_json(r.derivative)},
           {"log_derivative", to_json(r.log_derivative)},
           {"bound", to_json(r.bound)},
           {"slack", number(r.slack)},
           {"rho_prime", number(r.rho_prime)},
           {"identity_error", number(r.identity_error)},
           {"omitted_hits", r.omitted_hits ? json(*r.omitted_hits) : json(nullptr)},
           {"evaluation_failures", r.evaluation_failures},
           {"first_failure", r.first_failure}};
    if (r.branch_points_inside)
        j["branch_points_inside"] = *r.branch_points_inside;
    j["checks"] = {{"origin_ok", r.origin_ok()},
                   {"self_map_ok", r.self_map_ok()},
                   {"omission_ok", r.omission_ok()},
                   {"hypotheses_ok", r.hypotheses_ok()},
                   {"attains_bound", r.attains_bound()},
                   {"theorem_violation", r.theorem_violation()}};
    return j;
}

inline json to_json(const FeasibilityReport& r)
{
    return {{"alpha1", number(r.alpha1)},
            {"alpha2", number(r.alpha2)},
            {"a_lead", number(r.quadratic.a_lead)},
            {"a_mid", number(r.quadratic.a_mid)},
            {"a_const", number(r.quadratic.a_const)},
            {"t_max", number(r.t_max)},
            {"t_samples", r.t_samples},
            {"min_root_modulus", number(r.min_root_modulus)},
            {"argmin_t", number(r.argmin_t)},
            {"t0_min_root_modulus", number(r.t0_min_root_modulus)},
            {"t0_circle_test", r.t0_circle_test},
            {"one_root_min_modulus", number(r.one_root_min_modulus)},
            {"verdict", std::string(to_string(r.verdict))}};
}

inline json scan_summary_json(const RegionScan& s)
{
    return {{"resolution", s.resolution},
            {"t_samples", s.t_samples},
            {"cells", s.cells.size()},
            {"feasible", s.feasible},
            {"infeasible", s.infeasible},
            {"inconclusive", s.inconclusive},
            {"one_root_feasible", s.one_root_feasible}};
}

inline json to_json(const SharpnessReport& s)
{
    return {{"verification", to_json(s.report)},
            {"bound_gap", number(s.bound_gap)},
            {"matches_bound", s.matches_bound}};
}

/// Report wrapped with the tool identity and the effective parameters.
inline json envelope(const std::string& command, json parameters, json report)
{
    return {{"tool", kToolName},
            {"version", kToolVersion},
            {"command", command},
            {"parameters", std::move(parameters)},
            {"report", std::move(report)}};
}

namespace detail {

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string scalar_text(const json& v)
{
    if (v.is_null())
        return "nan";
    if (v.is_boolean())
        return v.get<bool>() ? "true" : "false";
    if (v.is_number_float())
        return format_number(v.get<double>());
    if (v.is_number())
        return v.dump();
    return v.get<std::string>();
}

inline void flatten(const json& v, const std::string& prefix, std::ostringstream& os)
{
    if (v.is_object()) {
        for (const auto& [k, child] : v.items())
            flatten(child, prefix.empty() ? k : prefix + "." + k, os);
        return;
    }
    std::string text;
    if (v.is_array()) {
        for (std::size_t i = 0; i < v.size(); ++i)
            text += (i ? ";" : "") + scalar_text(v[i]);
    } else {
        text = scalar_text(v);
    }
    os << csv_field(prefix) << ',' << csv_field(text) << '\n';
}

} // namespace detail

/// Two-column field,value CSV of a (possibly nested) JSON document; nested keys are dotted.
inline std::string to_csv(const json& doc)
{
    std::ostringstream os;
    os << "field,value\n";
    detail::flatten(doc, "", os);
    return os.str();
}

/// Region scan rows: alpha1,alpha2,verdict,min_root_modulus.
inline std::string scan_csv(const RegionScan& s)
{
    std::ostringstream os;
    os << "alpha1,alpha2,verdict,min_root_modulus\n";
    for (const ScanCell& c : s.cells)
        os << format_number(c.alpha1) << ',' << format_number(c.alpha2) << ',' << to_string(c.verdict) << ','
           << format_number(c.min_root_modulus) << '\n';
    return os.str();
}

} // namespace subord::io

#endif // SUBORD_IO_RENDER_HPP
