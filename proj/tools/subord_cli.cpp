// Command-line front end: omitted-value derivative bounds, extremal maps and
// the two-value feasibility analysis.
//
// Exit codes: 0 success, 2 invalid input, 3 precondition failure,
// 4 internal numerical defect.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subord/io/render.hpp"
#include "subord/subord.hpp"

namespace {

using subord::io::json;

enum ExitCode { kOk = 0, kInvalidInput = 2, kPrecondition = 3, kDefect = 4 };

struct Output {
    std::string format = "json";

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    }

    void print(const json& doc) const
    {
        if (format == "csv")
            std::cout << subord::io::to_csv(doc);
        else
            std::cout << doc.dump(2) << '\n';
    }
};

struct PlanOption {
    std::string text;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--plan", text, "Sampling plan RADII,ANGLES,R_MAX (default 64,256,0.999)");
    }

    [[nodiscard]] subord::DiscSamplingPlan get() const
    {
        if (text.empty())
            return {};
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string item; std::getline(ss, item, ',');)
            parts.push_back(item);
        if (parts.size() != 3)
            throw subord::DomainError("--plan expects RADII,ANGLES,R_MAX, got '" + text + "'");
        try {
            const int radii = std::stoi(parts[0]);
            const int angles = std::stoi(parts[1]);
            const double r_max = std::stod(parts[2]);
            return {radii, angles, r_max};
        } catch (const std::logic_error&) {
            throw subord::DomainError("--plan expects RADII,ANGLES,R_MAX, got '" + text + "'");
        }
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Omitted-value derivative bounds and extremal maps of the unit disc"};
    app.set_version_flag("--version", std::string(subord::io::kToolVersion));
    app.require_subcommand(1);

    // bound
    auto* bound = app.add_subcommand("bound", "Evaluate the derivative bound for a set of omitted values");
    std::vector<double> alphas;
    Output bound_out;
    bound->add_option("--alphas", alphas, "Omitted values in (0,1), comma separated")->required()->delimiter(',');
    bound_out.add_to(bound);

    // extremal
    auto* extremal = app.add_subcommand("extremal", "Build and verify the single-value extremal map");
    double ext_alpha = 0.5;
    double ext_c_arg = 0.0;
    bool ext_verify = false;
    Output ext_out;
    PlanOption ext_plan;
    extremal->add_option("--alpha", ext_alpha, "Omitted value in (0,1)")->required();
    extremal->add_option("--c-arg", ext_c_arg, "Rotation angle of c in degrees")->capture_default_str();
    extremal->add_flag("--verify", ext_verify, "Also check exp(g) = h over the sampling plan");
    ext_plan.add_to(extremal);
    ext_out.add_to(extremal);

    // two-value
    auto* two = app.add_subcommand("two-value", "Two omitted values: feasibility, region scan, sharpness");
    two->require_subcommand(1);

    auto* feas = two->add_subcommand("feasibility", "Root-modulus feasibility of one pair");
    double f_a1 = 0.0, f_a2 = 0.0;
    int f_t = subord::kDefaultTSamples;
    Output feas_out;
    feas->add_option("--a1", f_a1, "First omitted value")->required();
    feas->add_option("--a2", f_a2, "Second omitted value")->required();
    feas->add_option("--t-samples", f_t, "Samples of t in [0, t_max]")->capture_default_str();
    feas_out.add_to(feas);

    auto* scan = two->add_subcommand("scan", "Feasibility over a grid of pairs");
    int s_res = 50;
    int s_t = subord::kDefaultTSamples;
    std::string s_out_file;
    Output scan_out;
    scan->add_option("--resolution", s_res, "Grid points per axis")->required();
    scan->add_option("--t-samples", s_t, "Samples of t in [0, t_max]")->capture_default_str();
    scan->add_option("--out", s_out_file, "Write the CSV rows to FILE");
    scan_out.add_to(scan);

    auto* sharp = two->add_subcommand("sharpness", "Construct and verify the two-value candidate map");
    double h_a1 = 0.0, h_a2 = 0.0, h_c_arg = 0.0;
    Output sharp_out;
    PlanOption sharp_plan;
    sharp->add_option("--a1", h_a1, "First omitted value")->required();
    sharp->add_option("--a2", h_a2, "Second omitted value")->required();
    sharp->add_option("--c-arg", h_c_arg, "Rotation angle of c in degrees")->capture_default_str();
    sharp_plan.add_to(sharp);
    sharp_out.add_to(sharp);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInvalidInput;
    }

    try {
        if (*bound) {
            const subord::BoundReport r = subord::bound_k(subord::ExceptionalSet(alphas));
            json params{{"alphas", json::array()}};
            for (double a : alphas)
                params["alphas"].push_back(subord::io::number(a));
            bound_out.print(subord::io::envelope("bound", params, subord::io::to_json(r)));
        } else if (*extremal) {
            const subord::ExtremalSpec spec(ext_alpha, subord::UnimodularConstant::from_degrees(ext_c_arg));
            const subord::DiscSamplingPlan plan = ext_plan.get();
            const subord::AnalyticMap map = subord::extremal_map(spec);
            const subord::ExceptionalSet set{ext_alpha};
            const subord::VerificationReport rep = subord::verify_bound(map, set, plan);
            json report{{"closed_form_derivative", subord::io::number(subord::extremal_derivative_closed_form(spec))},
                        {"verification", subord::io::to_json(rep)}};
            if (ext_verify) {
                const subord::LogConsistency lc = subord::log_consistency(map, set, plan);
                const bool ok = rep.hypotheses_ok() && rep.attains_bound() && lc.max_residual < subord::kTol.residual &&
                                lc.max_real_part < 0.0;
                report["log_consistency"] = {{"points", lc.points},
                                             {"max_residual", subord::io::number(lc.max_residual)},
                                             {"max_real_part", subord::io::number(lc.max_real_part)},
                                             {"max_phase_step", subord::io::number(lc.max_phase_step)}};
                report["verified"] = ok;
            }
            json params{{"alpha", subord::io::number(ext_alpha)},
                        {"c_arg_deg", subord::io::number(ext_c_arg)},
                        {"verify", ext_verify},
                        {"plan", subord::io::plan_json(plan)}};
            ext_out.print(subord::io::envelope("extremal", params, report));
        } else if (*feas) {
            const subord::FeasibilityReport r = subord::feasibility_check(f_a1, f_a2, f_t);
            json params{{"a1", subord::io::number(f_a1)}, {"a2", subord::io::number(f_a2)}, {"t_samples", f_t}};
            feas_out.print(subord::io::envelope("two-value feasibility", params, subord::io::to_json(r)));
        } else if (*scan) {
            const subord::RegionScan r = subord::region_scan(s_res, s_t);
            const std::string rows = subord::io::scan_csv(r);
            json params{{"resolution", s_res}, {"t_samples", s_t}, {"out", s_out_file}};
            const json summary = subord::io::envelope("two-value scan", params, subord::io::scan_summary_json(r));
            const std::string summary_text =
                scan_out.format == "csv" ? subord::io::to_csv(summary) : summary.dump() + "\n";
            if (s_out_file.empty()) {
                std::cout << rows;
                std::cerr << summary_text;
            } else {
                std::ofstream f(s_out_file, std::ios::binary);
                if (!f)
                    throw subord::DomainError("cannot open --out file '" + s_out_file + "'");
                f << rows;
                std::cout << summary_text;
            }
        } else if (*sharp) {
            const subord::TwoValueSpec spec(h_a1, h_a2, subord::UnimodularConstant::from_degrees(h_c_arg));
            const subord::DiscSamplingPlan plan = sharp_plan.get();
            const subord::SharpnessReport r = subord::sharpness_verify(spec, plan);
            json params{{"a1", subord::io::number(h_a1)},
                        {"a2", subord::io::number(h_a2)},
                        {"c_arg_deg", subord::io::number(h_c_arg)},
                        {"plan", subord::io::plan_json(plan)}};
            sharp_out.print(subord::io::envelope("two-value sharpness", params, subord::io::to_json(r)));
        }
    } catch (const subord::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const subord::PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return kPrecondition;
    } catch (const subord::NumericalDefect& e) {
        std::cerr << "numerical defect: " << e.what() << '\n';
        return kDefect;
    }
    return kOk;
}
