#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "slideocam/cam_geometry.hpp"
#include "slideocam/design_optimizer.hpp"
#include "slideocam/force_transmission.hpp"
#include "slideocam/hertz_contact.hpp"

namespace slideocam {

enum class OutputFormat { Text, Csv };

/// Grid description before load and materials are attached.
struct GridSpec {
    double p;
    int n;
    int m;
    AxisRange phi_bear;
    AxisRange phi_cam;
};

/// Everything a subcommand may need. Internal units: mm, N mm, MPa, rad.
///
/// JSON keys (config units in brackets):
///   preset                 "orthoglide"
///   design                 {p, n, m, e, a4} or {p, n, m, phi_bear, phi_cam}   [mm]
///   space                  {p, n, m, phi_bear: {min, max, steps}, phi_cam: {...}}   [mm]
///   load                   {torque_Nm [N m], tau_c_max_MPa, tau_b_max_MPa}
///   materials              {cam, roller}; each a built-in name or an object
///                          {base?, name?, E_MPa?, nu?, P_stat_MPa?, P_max_recommended_MPa?}
///   material               shorthand setting both cam and roller
///   study_materials        list of materials for the length study
///   L_mm                   number or list   [mm]
///   mu_limit_deg           [deg]
///   hertz_limit            "fatigue" | "static" | "none"
///   samples, output_dir
/// A config file may hold `design` or `space`, not both.
struct RunConfig {
    std::optional<DesignParams> design;
    std::optional<GridSpec> space;
    std::optional<LoadCase> load;
    std::optional<Material> mat_cam;
    std::optional<Material> mat_roller;
    std::vector<Material> study_materials;
    std::vector<double> L_values;
    double mu_limit = default_mu_limit;
    HertzLimit hertz_limit = HertzLimit::Fatigue;
    std::filesystem::path output_dir = ".";
    std::size_t samples = 720;
    OutputFormat format = OutputFormat::Text;

    /// Throws Error(InvalidArgument) naming whatever is missing.
    DesignSpace design_space() const;
};

/// Orthoglide constants: optimum design, grid, load, steel/steel,
/// L in {20, 30, 40, 50}, study materials steel and aluminum.
RunConfig orthoglide_config();

/// Named preset; throws Error(InvalidArgument) for unknown names.
RunConfig preset_config(const std::string& name);

/// Overlays the JSON document on `base`. Throws Error(InvalidArgument).
void apply_config(RunConfig& base, const nlohmann::json& doc);

/// Reads and overlays a config file.
void load_config_file(RunConfig& base, const std::filesystem::path& path);

Material parse_material(const nlohmann::json& spec);

} // namespace slideocam
