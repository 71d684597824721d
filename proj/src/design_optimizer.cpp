#include "slideocam/design_optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "slideocam/error.hpp"

namespace slideocam {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

/// Everything about a grid point that does not depend on L.
struct CellAnalysis {
    double phi_bear = 0.0;
    double phi_cam = 0.0;
    std::optional<DesignParams> params;
    double mu_max = nan;
    double psi_crit = nan;
    double tau_c = nan;
    double tau_b = nan;
    bool geometry_ok = false;
    bool profile_valid = false;
    bool hertz_defined = false;
};

CellAnalysis analyze_cell(const DesignSpace& space, double phi_bear, double phi_cam)
{
    CellAnalysis cell;
    cell.phi_bear = phi_bear;
    cell.phi_cam = phi_cam;
    const auto params = DesignParams::from_diameters(space.p, phi_bear, phi_cam, space.n, space.m);
    cell.params = params;
    cell.tau_c = camshaft_stress(params, space.load);
    cell.tau_b = bearing_shaft_stress(params, space.load);

    if (params.eta_degenerate()) return cell;
    const auto validity = profile_validity(params);
    if (!validity.closed) return cell;
    cell.geometry_ok = true;
    cell.profile_valid = validity.valid();

    const double delta = *validity.extended_angle;
    try {
        cell.mu_max = max_pressure_angle(params, delta).mu_max;
    } catch (const Error&) {
        cell.mu_max = nan;
    }
    try {
        // The maximizing angle does not depend on L or the materials: P_h
        // scales as 1/sqrt(L (K1 + K2)).
        const auto peak = max_hertz_pressure(params, space.load, 1.0, space.mat_cam,
                                             space.mat_roller, delta);
        cell.psi_crit = peak.psi_crit;
        cell.hertz_defined = true;
    } catch (const Error&) {
        cell.hertz_defined = false;
    }
    return cell;
}

CandidateResult candidate_at(const DesignSpace& space, const CellAnalysis& cell, double L)
{
    CandidateResult result{cell.phi_bear, cell.phi_cam, L, nan, nan, nan, cell.tau_c, cell.tau_b, {}};
    if (!cell.geometry_ok) return result;

    result.mu_max = cell.mu_max;
    if (cell.hertz_defined) {
        result.psi_crit = cell.psi_crit;
        result.P_h_max = hertz_pressure_at(*cell.params, space.load, L, space.mat_cam,
                                           space.mat_roller, cell.psi_crit);
    }

    auto& flags = result.feasible;
    flags.pressure_angle_ok = std::isfinite(result.mu_max) && result.mu_max < space.mu_limit;
    flags.profile_valid = cell.profile_valid;
    flags.camshaft_ok = cell.tau_c <= space.load.tau_c_max;
    flags.bearing_ok = cell.tau_b <= space.load.tau_b_max;
    flags.hertz_ok = std::isfinite(result.P_h_max) && result.P_h_max <= hertz_allowable(space);
    return result;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    }
}

std::vector<CellAnalysis> analyze_grid(const DesignSpace& space, unsigned threads)
{
    const auto rows = static_cast<std::size_t>(space.phi_bear.steps);
    const auto cols = static_cast<std::size_t>(space.phi_cam.steps);
    std::vector<CellAnalysis> cells(rows * cols);
    parallel_for(cells.size(), threads, [&](std::size_t i) {
        const int r = static_cast<int>(i / cols);
        const int c = static_cast<int>(i % cols);
        cells[i] = analyze_cell(space, space.phi_bear.at(r), space.phi_cam.at(c));
    });
    return cells;
}

SweepResult assemble(const DesignSpace& space, const std::vector<CellAnalysis>& cells, double L)
{
    SweepResult result{L, space.phi_bear.steps, space.phi_cam.steps, {}};
    result.cells.reserve(cells.size());
    for (const auto& cell : cells) result.cells.push_back(candidate_at(space, cell, L));
    return result;
}

} // namespace

double AxisRange::at(int i) const
{
    if (i == steps - 1) return max;
    return min + (max - min) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void AxisRange::validate(const char* name) const
{
    if (!(min > 0.0) || !(min < max) || steps < 2) {
        std::ostringstream msg;
        msg << name << " range needs 0 < min < max and at least 2 steps";
        throw Error(Errc::InvalidArgument, msg.str());
    }
}

void DesignSpace::validate() const
{
    phi_bear.validate("phi_bear");
    phi_cam.validate("phi_cam");
    if (L_values.empty()) throw Error(Errc::InvalidArgument, "at least one contact width L is required");
    for (double L : L_values) {
        if (!(L > 0.0)) throw Error(Errc::InvalidArgument, "contact widths must be positive");
    }
    if (!(p > 0.0) || n < 1 || m < 1) {
        throw Error(Errc::InvalidArgument, "pitch must be positive and n, m at least 1");
    }
    if (!(mu_limit > 0.0)) throw Error(Errc::InvalidArgument, "mu_limit must be positive");
    load.validate();
    mat_cam.validate();
    mat_roller.validate();
}

double hertz_allowable(const DesignSpace& space)
{
    switch (space.hertz_limit) {
    case HertzLimit::Fatigue:
        return std::min(space.mat_cam.P_max_recommended, space.mat_roller.P_max_recommended);
    case HertzLimit::Static:
        return std::min(space.mat_cam.P_stat, space.mat_roller.P_stat);
    case HertzLimit::None:
        break;
    }
    return std::numeric_limits<double>::infinity();
}

CandidateResult evaluate_candidate(const DesignSpace& space, double phi_bear, double phi_cam,
                                   double L)
{
    return candidate_at(space, analyze_cell(space, phi_bear, phi_cam), L);
}

SweepResult sweep(const DesignSpace& space, double L, unsigned threads)
{
    space.validate();
    return assemble(space, analyze_grid(space, threads), L);
}

std::vector<SweepResult> sweep_lengths(const DesignSpace& space, unsigned threads)
{
    space.validate();
    const auto cells = analyze_grid(space, threads);
    std::vector<SweepResult> results;
    results.reserve(space.L_values.size());
    for (double L : space.L_values) results.push_back(assemble(space, cells, L));
    return results;
}

std::optional<CandidateResult> best_feasible(const SweepResult& result)
{
    // Row-major order already visits smaller phi_bear, then smaller phi_cam,
    // first; a strict comparison keeps the earliest cell on ties.
    std::optional<CandidateResult> best;
    for (const auto& cell : result.cells) {
        if (!cell.feasible.all()) continue;
        if (!best || cell.P_h_max < best->P_h_max) best = cell;
    }
    return best;
}

OptimizationResult optimize(const DesignSpace& space, unsigned threads)
{
    const auto sweeps = sweep_lengths(space, threads);
    OptimizationResult result{};
    std::optional<CandidateResult> at_max_length;
    double max_length = -std::numeric_limits<double>::infinity();
    for (const auto& grid : sweeps) {
        auto best = best_feasible(grid);
        result.per_length.push_back({grid.L, best});
        if (grid.L > max_length) {
            max_length = grid.L;
            at_max_length = best;
        }
    }
    if (!at_max_length) {
        std::ostringstream msg;
        msg << "no feasible design at L = " << max_length << " mm";
        throw Error(Errc::NoFeasibleDesign, msg.str());
    }
    result.optimum = *at_max_length;
    return result;
}

std::vector<LengthStudyRow> length_study(const DesignSpace& space, double phi_bear, double phi_cam,
                                         const std::vector<Material>& materials)
{
    const auto params = DesignParams::from_diameters(space.p, phi_bear, phi_cam, space.n, space.m);
    const double delta = extended_angle(params);
    std::vector<LengthStudyRow> rows;
    rows.reserve(space.L_values.size());
    for (double L : space.L_values) {
        LengthStudyRow row{L, {}};
        for (const auto& mat : materials) {
            row.P_h_max.push_back(max_hertz_pressure(params, space.load, L, mat, mat, delta).P_h_max);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace slideocam
