#pragma once

#include <optional>
#include <vector>

#include "slideocam/cam_geometry.hpp"
#include "slideocam/force_transmission.hpp"
#include "slideocam/hertz_contact.hpp"

namespace slideocam {

/// Closed interval sampled at `steps` evenly spaced points.
struct AxisRange {
    double min;
    double max;
    int steps;

    double at(int i) const;
    void validate(const char* name) const;
};

/// Which allowable pressure the hertz_ok flag is checked against.
enum class HertzLimit { Fatigue, Static, None };

/// Grid over (phi_bear, phi_cam) with everything else held fixed.
struct DesignSpace {
    AxisRange phi_bear;
    AxisRange phi_cam;
    std::vector<double> L_values;
    double p;
    int n;
    int m;
    LoadCase load;
    Material mat_cam;
    Material mat_roller;
    double mu_limit = default_mu_limit;
    HertzLimit hertz_limit = HertzLimit::Fatigue;

    void validate() const;
};

struct FeasibilityFlags {
    bool pressure_angle_ok = false;
    bool profile_valid = false;
    bool camshaft_ok = false;
    bool bearing_ok = false;
    bool hertz_ok = false;

    bool all() const noexcept
    {
        return pressure_angle_ok && profile_valid && camshaft_ok && bearing_ok && hertz_ok;
    }
};

struct CandidateResult {
    double phi_bear;
    double phi_cam;
    double L;
    double mu_max;   ///< rad; NaN when the geometry has no driving contact
    double P_h_max;  ///< MPa; NaN when undefined
    double psi_crit; ///< lobe-local angle of P_h_max; NaN when undefined
    double tau_c;
    double tau_b;
    FeasibilityFlags feasible;
};

/// Row-major grid: row = phi_bear index, column = phi_cam index.
struct SweepResult {
    double L;
    int rows;
    int cols;
    std::vector<CandidateResult> cells;

    const CandidateResult& at(int row, int col) const
    {
        return cells[static_cast<std::size_t>(row * cols + col)];
    }
};

struct LengthOptimum {
    double L;
    std::optional<CandidateResult> best;
};

struct OptimizationResult {
    CandidateResult optimum; ///< at the largest L
    std::vector<LengthOptimum> per_length;
};

struct LengthStudyRow {
    double L;
    std::vector<double> P_h_max; ///< one entry per material, same order as given
};

/// Hertz limit of the pair under `mode`; +inf for HertzLimit::None.
double hertz_allowable(const DesignSpace& space);

/// Evaluates one grid point. Never throws for bad geometry: failures show up
/// as false flags and NaN measures.
CandidateResult evaluate_candidate(const DesignSpace& space, double phi_bear, double phi_cam,
                                   double L);

/// `threads` = 0 uses the hardware concurrency. Output order does not
/// depend on the thread count.
SweepResult sweep(const DesignSpace& space, double L, unsigned threads = 0);

/// One SweepResult per entry of space.L_values, sharing the geometric work.
std::vector<SweepResult> sweep_lengths(const DesignSpace& space, unsigned threads = 0);

/// Feasible cell with the smallest P_h_max; ties go to smaller phi_bear,
/// then smaller phi_cam. Returns nullopt when nothing is feasible.
std::optional<CandidateResult> best_feasible(const SweepResult& result);

/// Full-grid argmin at the largest L, plus the argmin at every L.
/// Throws Error(NoFeasibleDesign) when the largest-L grid is infeasible.
OptimizationResult optimize(const DesignSpace& space, unsigned threads = 0);

/// P_h_max of a fixed design at each L, each material used for both cam and
/// roller.
std::vector<LengthStudyRow> length_study(const DesignSpace& space, double phi_bear, double phi_cam,
                                         const std::vector<Material>& materials);

} // namespace slideocam
