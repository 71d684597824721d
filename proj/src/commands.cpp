#include "slideocam/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "CLI11.hpp"

#include "slideocam/error.hpp"
#include "slideocam/format.hpp"
#include "slideocam/presets.hpp"
#include "slideocam/svg.hpp"

namespace slideocam {

namespace fs = std::filesystem;

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

double degrees(double rad) { return rad * 180.0 / numerics::pi; }

std::string num(double value) { return format_number(value); }

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

const char* flag(bool ok) { return ok ? "1" : "0"; }

void print_validity(std::ostream& out, const ValidityReport& report)
{
    out << "eta_above_lower_bound " << flag(report.eta_above_lower_bound) << '\n'
        << "convex_everywhere     " << flag(report.convex_everywhere) << '\n'
        << "pushing_side_valid    " << flag(report.pushing_side_valid) << '\n'
        << "closed                " << flag(report.closed) << '\n';
    if (report.extended_angle) out << "extended_angle_deg    " << num(degrees(*report.extended_angle)) << '\n';
    if (report.min_driving_radius) out << "min_driving_rho_c_mm  " << num(*report.min_driving_radius) << '\n';
}

const DesignParams& require_design(const RunConfig& config)
{
    if (!config.design) throw Error(Errc::InvalidArgument, "config: this command needs a single 'design'");
    return *config.design;
}

std::ofstream open_output(const fs::path& path)
{
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(Errc::InvalidArgument, "cannot write " + path.string());
    return file;
}

std::string length_tag(double L) { return "sweep_L" + num(L) + ".csv"; }

std::string describe(const DesignParams& params)
{
    std::ostringstream s;
    s << "p=" << num(params.p()) << " e=" << num(params.e()) << " a4=" << num(params.a4())
      << " n=" << params.n() << " m=" << params.m() << " (phi_cam=" << num(params.phi_cam())
      << " phi_bear=" << num(params.phi_bear()) << " eta=" << num(params.eta()) << ")";
    return s.str();
}

} // namespace

AnalysisReport analyze_design(const DesignParams& params, const RunConfig& config)
{
    if (!config.load) throw Error(Errc::InvalidArgument, "config: missing 'load'");
    if (!config.mat_cam || !config.mat_roller) {
        throw Error(Errc::InvalidArgument, "config: missing material for cam or roller");
    }
    if (config.L_values.empty()) throw Error(Errc::InvalidArgument, "config: missing 'L_mm'");

    AnalysisReport report;
    report.validity = profile_validity(params);
    report.tau_c = params.phi_cam() > 0.0 ? camshaft_stress(params, *config.load) : nan;
    report.tau_b = bearing_shaft_stress(params, *config.load);

    DesignSpace limits{{1.0, 2.0, 2}, {1.0, 2.0, 2}, config.L_values, params.p(), params.n(),
                       params.m(), *config.load, *config.mat_cam, *config.mat_roller,
                       config.mu_limit, config.hertz_limit};
    report.hertz_allowable = hertz_allowable(limits);

    auto& flags = report.flags_without_hertz;
    flags.profile_valid = report.validity.valid();
    flags.camshaft_ok = report.tau_c <= config.load->tau_c_max;
    flags.bearing_ok = report.tau_b <= config.load->tau_b_max;
    report.mu_max = nan;
    report.psi_predicted = nan;

    if (!report.validity.closed) {
        flags = {};
        for (double L : config.L_values) report.lengths.push_back({L, nan, nan, false});
        return report;
    }
    const double delta = *report.validity.extended_angle;
    report.psi_predicted = numerics::pi / params.n() - delta;
    try {
        report.mu_max = max_pressure_angle(params, delta).mu_max;
    } catch (const Error&) {
        report.mu_max = nan;
    }
    flags.pressure_angle_ok = std::isfinite(report.mu_max) && report.mu_max < config.mu_limit;

    for (double L : config.L_values) {
        LengthVerdict row{L, nan, nan, false};
        try {
            const auto peak =
                max_hertz_pressure(params, *config.load, L, *config.mat_cam, *config.mat_roller, delta);
            row.P_h_max = peak.P_h_max;
            row.psi_crit = peak.psi_crit;
            row.hertz_ok = peak.P_h_max <= report.hertz_allowable;
        } catch (const Error&) {
        }
        report.lengths.push_back(row);
    }
    return report;
}

int cmd_profile(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto& params = require_design(config);
    const auto validity = profile_validity(params);
    // Only an open or lapped-back driving flank makes the outline undrawable.
    if (!validity.closed || !validity.pushing_side_valid) {
        err << "invalid design: " << describe(params) << '\n';
        print_validity(err, validity);
        return exit_invalid_design;
    }
    if (!validity.valid()) {
        err << "warning: design outside the validity bounds, drawing anyway\n";
        print_validity(err, validity);
    }

    const auto samples = sample_profile(params, config.samples);
    const fs::path csv_path = config.output_dir / "profile.csv";
    {
        auto csv = open_output(csv_path);
        write_csv_row(csv, {"psi_rad", "u_c_mm", "v_c_mm", "u_p_mm", "v_p_mm", "rho_c_mm", "mu_rad"});
        for (const auto& s : samples) {
            write_csv_row(csv, {num(s.psi), num(s.u_c), num(s.v_c), num(s.u_p), num(s.v_p),
                                num(s.rho_c), num(pressure_angle(params, s.psi).mu)});
        }
    }
    const fs::path svg_path = config.output_dir / "profile.svg";
    {
        auto svg = open_output(svg_path);
        svg << render_cam_assembly_svg(params, config.samples);
    }
    out << "wrote " << csv_path.string() << '\n' << "wrote " << svg_path.string() << '\n';
    return exit_success;
}

int cmd_analyze(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto& params = require_design(config);
    const auto report = analyze_design(params, config);
    const auto& flags = report.flags_without_hertz;

    if (config.format == OutputFormat::Csv) {
        write_csv_row(out, {"L_mm", "mu_max_deg", "delta_deg", "min_rho_c_mm", "tau_c_MPa",
                            "tau_b_MPa", "P_h_max_MPa", "psi_crit_deg", "psi_predicted_deg",
                            "pressure_angle_ok", "profile_valid", "camshaft_ok", "bearing_ok",
                            "hertz_ok", "feasible"});
        const double delta = report.validity.extended_angle.value_or(nan);
        const double rho = report.validity.min_driving_radius.value_or(nan);
        for (const auto& row : report.lengths) {
            FeasibilityFlags all = flags;
            all.hertz_ok = row.hertz_ok;
            write_csv_row(out, {num(row.L), num(degrees(report.mu_max)), num(degrees(delta)),
                                num(rho), num(report.tau_c), num(report.tau_b), num(row.P_h_max),
                                num(degrees(row.psi_crit)), num(degrees(report.psi_predicted)),
                                flag(flags.pressure_angle_ok), flag(flags.profile_valid),
                                flag(flags.camshaft_ok), flag(flags.bearing_ok), flag(row.hertz_ok),
                                flag(all.all())});
        }
    } else {
        out << "design              " << describe(params) << '\n';
        if (report.validity.extended_angle) {
            out << "extended angle      " << num(degrees(*report.validity.extended_angle)) << " deg\n";
        }
        out << "mu_max              " << num(degrees(report.mu_max)) << " deg (limit "
            << num(degrees(config.mu_limit)) << ")  " << verdict(flags.pressure_angle_ok) << '\n';
        out << "min rho_c driving   " << num(report.validity.min_driving_radius.value_or(nan))
            << " mm  " << verdict(flags.profile_valid) << '\n';
        out << "tau_c               " << num(report.tau_c) << " MPa (limit "
            << num(config.load->tau_c_max) << ")  " << verdict(flags.camshaft_ok) << '\n';
        out << "tau_b               " << num(report.tau_b) << " MPa (limit "
            << num(config.load->tau_b_max) << ")  " << verdict(flags.bearing_ok) << '\n';
        out << "materials           " << config.mat_cam->name << " / " << config.mat_roller->name
            << ", hertz limit " << num(report.hertz_allowable) << " MPa\n";
        for (const auto& row : report.lengths) {
            out << "L=" << num(row.L) << " mm  P_h_max " << num(row.P_h_max) << " MPa at psi "
                << num(degrees(row.psi_crit)) << " deg (predicted pi/n - Delta = "
                << num(degrees(report.psi_predicted)) << " deg)  hertz " << verdict(row.hertz_ok)
                << '\n';
        }
        bool all_ok = true;
        for (const auto& row : report.lengths) {
            FeasibilityFlags all = flags;
            all.hertz_ok = row.hertz_ok;
            all_ok = all_ok && all.all();
        }
        out << "verdict             " << (all_ok ? "all constraints pass" : "constraint violated")
            << '\n';
    }

    if (!report.validity.valid()) {
        err << "infeasible geometry: " << describe(params) << '\n';
        print_validity(err, report.validity);
        return exit_invalid_design;
    }
    return exit_success;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto space = config.design_space();
    const auto grids = sweep_lengths(space);
    bool any_feasible = false;
    for (const auto& grid : grids) {
        const fs::path path = config.output_dir / length_tag(grid.L);
        {
            auto csv = open_output(path);
            write_csv_row(csv, {"phi_bear_mm", "phi_cam_mm", "mu_max_deg", "P_h_max_MPa",
                                "tau_c_MPa", "tau_b_MPa", "feasible"});
            for (const auto& cell : grid.cells) {
                write_csv_row(csv, {num(cell.phi_bear), num(cell.phi_cam), num(degrees(cell.mu_max)),
                                    num(cell.P_h_max), num(cell.tau_c), num(cell.tau_b),
                                    flag(cell.feasible.all())});
            }
        }
        const auto best = best_feasible(grid);
        out << "L=" << num(grid.L) << " mm  " << path.string() << "  ";
        if (best) {
            any_feasible = true;
            out << "optimum phi_bear=" << num(best->phi_bear) << " phi_cam=" << num(best->phi_cam)
                << " P_h_max=" << num(best->P_h_max) << " MPa mu_max=" << num(degrees(best->mu_max))
                << " deg\n";
        } else {
            out << "no feasible cell\n";
        }
    }
    if (!any_feasible) {
        err << "no feasible design in the sweep\n";
        return exit_no_feasible;
    }
    return exit_success;
}

int cmd_optimize(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    const auto space = config.design_space();
    OptimizationResult result;
    try {
        result = optimize(space);
    } catch (const Error& ex) {
        if (ex.code() != Errc::NoFeasibleDesign) throw;
        err << ex.what() << '\n';
        return exit_no_feasible;
    }
    if (config.format == OutputFormat::Csv) {
        write_csv_row(out, {"L_mm", "phi_bear_mm", "phi_cam_mm", "P_h_max_MPa", "mu_max_deg",
                            "tau_c_MPa", "tau_b_MPa"});
        for (const auto& row : result.per_length) {
            if (!row.best) {
                write_csv_row(out, {num(row.L), "nan", "nan", "nan", "nan", "nan", "nan"});
                continue;
            }
            const auto& b = *row.best;
            write_csv_row(out, {num(row.L), num(b.phi_bear), num(b.phi_cam), num(b.P_h_max),
                                num(degrees(b.mu_max)), num(b.tau_c), num(b.tau_b)});
        }
        return exit_success;
    }
    const auto& best = result.optimum;
    out << "optimum at L=" << num(best.L) << " mm: phi_bear=" << num(best.phi_bear)
        << " mm phi_cam=" << num(best.phi_cam) << " mm P_h_max=" << num(best.P_h_max)
        << " MPa mu_max=" << num(degrees(best.mu_max)) << " deg tau_c=" << num(best.tau_c)
        << " MPa tau_b=" << num(best.tau_b) << " MPa\n";
    for (const auto& row : result.per_length) {
        out << "  L=" << num(row.L) << " mm: ";
        if (row.best) {
            out << "phi_bear=" << num(row.best->phi_bear) << " phi_cam=" << num(row.best->phi_cam)
                << " P_h_max=" << num(row.best->P_h_max) << " MPa\n";
        } else {
            out << "no feasible cell\n";
        }
    }
    return exit_success;
}

int cmd_table2(const RunConfig& config, std::ostream& out, std::ostream& /*err*/)
{
    RunConfig base = orthoglide_config();
    const auto params = config.design ? *config.design : *base.design;
    const auto load = config.load ? *config.load : *base.load;
    const auto& materials = config.study_materials.empty() ? base.study_materials : config.study_materials;

    DesignSpace space = orthoglide::design_space();
    space.p = params.p();
    space.n = params.n();
    space.m = params.m();
    space.load = load;
    space.L_values.assign(orthoglide::table2_lengths.begin(), orthoglide::table2_lengths.end());
    const auto rows = length_study(space, params.phi_bear(), params.phi_cam(), materials);

    auto reference = [](std::size_t material, std::size_t row) {
        if (material == 0) return orthoglide::table2_steel[row];
        if (material == 1) return orthoglide::table2_aluminum[row];
        return nan;
    };

    if (config.format == OutputFormat::Csv) {
        std::vector<std::string> header{"L_mm"};
        for (const auto& mat : materials) {
            header.push_back(mat.name + "_MPa");
            header.push_back(mat.name + "_ref_MPa");
            header.push_back(mat.name + "_rel_err");
        }
        write_csv_row(out, header);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            std::vector<std::string> fields{num(rows[r].L)};
            for (std::size_t k = 0; k < materials.size(); ++k) {
                const double ref = reference(k, r);
                fields.push_back(num(rows[r].P_h_max[k]));
                fields.push_back(num(ref));
                fields.push_back(num(rows[r].P_h_max[k] / ref - 1.0));
            }
            write_csv_row(out, fields);
        }
        return exit_success;
    }

    out << "Maximal Hertz pressure [MPa] at phi_bear=" << num(params.phi_bear())
        << " mm, phi_cam=" << num(params.phi_cam()) << " mm\n";
    out << "L_mm";
    for (const auto& mat : materials) out << "  " << mat.name << " (nu=" << num(mat.nu) << ") ref rel_err";
    out << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out << num(rows[r].L);
        for (std::size_t k = 0; k < materials.size(); ++k) {
            const double ref = reference(k, r);
            out << "  " << num(rows[r].P_h_max[k]) << ' ' << num(ref) << ' '
                << num(100.0 * (rows[r].P_h_max[k] / ref - 1.0)) << '%';
        }
        out << '\n';
    }
    return exit_success;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Slide-o-Cam transmission design toolkit", "slideocam"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string preset;
    std::string out_dir;
    std::string format = "text";
    std::size_t samples = 0;
    app.add_option("--config", config_path, "JSON run configuration");
    app.add_option("--preset", preset, "named constants set")->check(CLI::IsMember({"orthoglide"}));
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--samples", samples, "profile samples per lobe")->check(CLI::Range(16, 1000000));

    auto* profile = app.add_subcommand("profile", "write profile CSV and assembly SVG");
    auto* analyze = app.add_subcommand("analyze", "evaluate one design against all constraints");
    auto* sweep_cmd = app.add_subcommand("sweep", "write (phi_bear, phi_cam) grids per L");
    auto* optimize_cmd = app.add_subcommand("optimize", "grid optimum of P_h_max");
    auto* table2 = app.add_subcommand("table2", "Hertz pressure versus L at the case-study optimum");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& ex) {
        std::ostringstream help_out;
        std::ostringstream help_err;
        const int code = app.exit(ex, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return code == 0 ? exit_success : exit_usage;
    }

    try {
        RunConfig config = preset.empty() ? RunConfig{} : preset_config(preset);
        if (!config_path.empty()) load_config_file(config, config_path);
        if (!out_dir.empty()) config.output_dir = out_dir;
        if (samples != 0) config.samples = samples;
        config.format = format == "csv" ? OutputFormat::Csv : OutputFormat::Text;

        if (profile->parsed()) return cmd_profile(config, out, err);
        if (analyze->parsed()) return cmd_analyze(config, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(config, out, err);
        if (optimize_cmd->parsed()) return cmd_optimize(config, out, err);
        if (table2->parsed()) return cmd_table2(config, out, err);
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        switch (ex.code()) {
        case Errc::InvalidArgument:
            return exit_usage;
        case Errc::NoFeasibleDesign:
            return exit_no_feasible;
        default:
            return exit_invalid_design;
        }
    } catch (const fs::filesystem_error& ex) {
        err << "error: " << ex.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace slideocam
