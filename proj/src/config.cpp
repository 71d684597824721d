#include "slideocam/config.hpp"

#include <fstream>
#include <set>

#include "slideocam/error.hpp"
#include "slideocam/presets.hpp"

namespace slideocam {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& what)
{
    throw Error(Errc::InvalidArgument, "config: " + what);
}

double positive_number(const json& node, const std::string& key)
{
    if (!node.contains(key)) config_error("missing '" + key + "'");
    if (!node.at(key).is_number()) config_error("'" + key + "' must be a number");
    const double value = node.at(key).get<double>();
    if (!(value > 0.0)) config_error("'" + key + "' must be positive");
    return value;
}

int positive_count(const json& node, const std::string& key, int fallback)
{
    if (!node.contains(key)) return fallback;
    if (!node.at(key).is_number_integer()) config_error("'" + key + "' must be an integer");
    const int value = node.at(key).get<int>();
    if (value < 1) config_error("'" + key + "' must be at least 1");
    return value;
}

void reject_unknown(const json& node, const std::set<std::string>& known, const std::string& where)
{
    for (const auto& [key, value] : node.items()) {
        if (!known.contains(key)) config_error("unknown key '" + key + "' in " + where);
    }
}

DesignParams parse_design(const json& node)
{
    if (!node.is_object()) config_error("'design' must be an object");
    reject_unknown(node, {"p", "n", "m", "e", "a4", "phi_bear", "phi_cam"}, "design");
    const double p = positive_number(node, "p");
    const int n = positive_count(node, "n", 1);
    const int m = positive_count(node, "m", 1);
    const bool by_offsets = node.contains("e") || node.contains("a4");
    const bool by_diameters = node.contains("phi_bear") || node.contains("phi_cam");
    if (by_offsets == by_diameters) {
        config_error("design needs either {e, a4} or {phi_bear, phi_cam}");
    }
    if (by_offsets) {
        return DesignParams(p, positive_number(node, "e"), positive_number(node, "a4"), n, m);
    }
    return DesignParams::from_diameters(p, positive_number(node, "phi_bear"),
                                        positive_number(node, "phi_cam"), n, m);
}

AxisRange parse_range(const json& node, const std::string& name)
{
    if (!node.is_object()) config_error("'" + name + "' must be {min, max, steps}");
    reject_unknown(node, {"min", "max", "steps"}, name);
    AxisRange range{positive_number(node, "min"), positive_number(node, "max"),
                    positive_count(node, "steps", 0)};
    try {
        range.validate(name.c_str());
    } catch (const Error& err) {
        config_error(err.what());
    }
    return range;
}

GridSpec parse_space(const json& node)
{
    if (!node.is_object()) config_error("'space' must be an object");
    reject_unknown(node, {"p", "n", "m", "phi_bear", "phi_cam"}, "space");
    if (!node.contains("phi_bear") || !node.contains("phi_cam")) {
        config_error("space needs phi_bear and phi_cam ranges");
    }
    return {positive_number(node, "p"), positive_count(node, "n", 1), positive_count(node, "m", 1),
            parse_range(node.at("phi_bear"), "phi_bear"), parse_range(node.at("phi_cam"), "phi_cam")};
}

LoadCase parse_load(const json& node)
{
    if (!node.is_object()) config_error("'load' must be an object");
    reject_unknown(node, {"torque_Nm", "tau_c_max_MPa", "tau_b_max_MPa"}, "load");
    return {positive_number(node, "torque_Nm") * 1000.0, positive_number(node, "tau_c_max_MPa"),
            positive_number(node, "tau_b_max_MPa")};
}

HertzLimit parse_hertz_limit(const json& node)
{
    const std::string mode = node.is_string() ? node.get<std::string>() : "";
    if (mode == "fatigue") return HertzLimit::Fatigue;
    if (mode == "static") return HertzLimit::Static;
    if (mode == "none") return HertzLimit::None;
    config_error("hertz_limit must be \"fatigue\", \"static\" or \"none\"");
}

} // namespace

Material parse_material(const json& spec)
{
    if (spec.is_string()) {
        const auto name = spec.get<std::string>();
        auto found = find_material(name);
        if (!found) config_error("unknown material '" + name + "'");
        return *found;
    }
    if (!spec.is_object()) config_error("a material is a name or an object");
    reject_unknown(spec, {"base", "name", "E_MPa", "nu", "P_stat_MPa", "P_max_recommended_MPa"},
                   "material");

    Material mat;
    if (spec.contains("base")) {
        mat = parse_material(spec.at("base"));
    } else {
        for (const char* key : {"name", "E_MPa", "nu", "P_stat_MPa", "P_max_recommended_MPa"}) {
            if (!spec.contains(key)) config_error(std::string("material without base needs '") + key + "'");
        }
    }
    if (spec.contains("name")) mat.name = spec.at("name").get<std::string>();
    if (spec.contains("E_MPa")) mat.E = positive_number(spec, "E_MPa");
    if (spec.contains("nu")) mat.nu = positive_number(spec, "nu");
    if (spec.contains("P_stat_MPa")) mat.P_stat = mat.P_stat_min = positive_number(spec, "P_stat_MPa");
    if (spec.contains("P_max_recommended_MPa")) {
        mat.P_max_recommended = mat.P_max_recommended_min =
            positive_number(spec, "P_max_recommended_MPa");
    }
    try {
        mat.validate();
    } catch (const Error& err) {
        config_error(err.what());
    }
    return mat;
}

DesignSpace RunConfig::design_space() const
{
    if (!space) config_error("this command needs a design space ('space' or --preset)");
    if (!load) config_error("missing 'load'");
    if (!mat_cam || !mat_roller) config_error("missing material for cam or roller");
    if (L_values.empty()) config_error("missing 'L_mm'");
    DesignSpace result{space->phi_bear, space->phi_cam, L_values, space->p, space->n, space->m,
                       *load, *mat_cam, *mat_roller, mu_limit, hertz_limit};
    try {
        result.validate();
    } catch (const Error& err) {
        config_error(err.what());
    }
    return result;
}

RunConfig orthoglide_config()
{
    const auto space = orthoglide::design_space();
    RunConfig config;
    config.design = orthoglide::optimum_design();
    config.space = GridSpec{space.p, space.n, space.m, space.phi_bear, space.phi_cam};
    config.load = space.load;
    config.mat_cam = space.mat_cam;
    config.mat_roller = space.mat_roller;
    config.study_materials = {*find_material("improved_steel"), *find_material("aluminum")};
    config.L_values = space.L_values;
    return config;
}

RunConfig preset_config(const std::string& name)
{
    if (name == "orthoglide") return orthoglide_config();
    config_error("unknown preset '" + name + "'");
}

void apply_config(RunConfig& base, const json& doc)
{
    if (!doc.is_object()) config_error("top level must be an object");
    reject_unknown(doc,
                   {"preset", "design", "space", "load", "materials", "material", "study_materials",
                    "L_mm", "mu_limit_deg", "hertz_limit", "samples", "output_dir"},
                   "config");
    if (doc.contains("design") && doc.contains("space")) {
        config_error("give either 'design' or 'space', not both");
    }
    if (doc.contains("preset")) {
        if (!doc.at("preset").is_string()) config_error("'preset' must be a string");
        base = preset_config(doc.at("preset").get<std::string>());
    }
    if (doc.contains("design")) {
        base.design = parse_design(doc.at("design"));
        base.space.reset();
    }
    if (doc.contains("space")) {
        base.space = parse_space(doc.at("space"));
        base.design.reset();
    }
    if (doc.contains("load")) base.load = parse_load(doc.at("load"));
    if (doc.contains("material")) base.mat_cam = base.mat_roller = parse_material(doc.at("material"));
    if (doc.contains("materials")) {
        const auto& mats = doc.at("materials");
        if (!mats.is_object()) config_error("'materials' must be {cam, roller}");
        reject_unknown(mats, {"cam", "roller"}, "materials");
        if (mats.contains("cam")) base.mat_cam = parse_material(mats.at("cam"));
        if (mats.contains("roller")) base.mat_roller = parse_material(mats.at("roller"));
    }
    if (doc.contains("study_materials")) {
        const auto& list = doc.at("study_materials");
        if (!list.is_array() || list.empty()) config_error("'study_materials' must be a non-empty list");
        base.study_materials.clear();
        for (const auto& item : list) base.study_materials.push_back(parse_material(item));
    }
    if (doc.contains("L_mm")) {
        const auto& node = doc.at("L_mm");
        base.L_values.clear();
        if (node.is_number()) {
            base.L_values.push_back(positive_number(doc, "L_mm"));
        } else if (node.is_array() && !node.empty()) {
            for (const auto& item : node) {
                if (!item.is_number() || !(item.get<double>() > 0.0)) {
                    config_error("'L_mm' entries must be positive numbers");
                }
                base.L_values.push_back(item.get<double>());
            }
        } else {
            config_error("'L_mm' must be a number or a non-empty list");
        }
    }
    if (doc.contains("mu_limit_deg")) {
        base.mu_limit = positive_number(doc, "mu_limit_deg") * numerics::pi / 180.0;
    }
    if (doc.contains("hertz_limit")) base.hertz_limit = parse_hertz_limit(doc.at("hertz_limit"));
    if (doc.contains("samples")) {
        base.samples = static_cast<std::size_t>(positive_count(doc, "samples", 0));
        if (base.samples < 16) config_error("'samples' must be at least 16");
    }
    if (doc.contains("output_dir")) {
        if (!doc.at("output_dir").is_string()) config_error("'output_dir' must be a string");
        base.output_dir = doc.at("output_dir").get<std::string>();
    }
}

void load_config_file(RunConfig& base, const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) config_error("cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::exception& ex) {
        config_error(path.string() + ": " + ex.what());
    }
    apply_config(base, doc);
}

} // namespace slideocam
