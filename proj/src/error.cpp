#include "slideocam/error.hpp"

namespace slideocam {

std::string_view to_string(Errc code)
{
    switch (code) {
    case Errc::InvalidArgument: return "invalid_argument";
    case Errc::DegenerateEta: return "degenerate_eta";
    case Errc::NoRoot: return "no_root";
    case Errc::CurvatureSingularity: return "curvature_singularity";
    case Errc::NoDrivingCam: return "no_driving_cam";
    case Errc::ForceSingular: return "force_singular";
    case Errc::ZeroLoad: return "zero_load";
    case Errc::NoFeasibleDesign: return "no_feasible_design";
    }
    return "unknown";
}

} // namespace slideocam
