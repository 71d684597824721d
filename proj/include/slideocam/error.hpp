#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace slideocam {

enum class Errc {
    InvalidArgument,
    DegenerateEta,
    NoRoot,
    CurvatureSingularity,
    NoDrivingCam,
    ForceSingular,
    ZeroLoad,
    NoFeasibleDesign,
};

std::string_view to_string(Errc code);

/// Exception carrying a machine-checkable error code and, for geometry
/// failures raised while sampling, the cam angle at which it occurred.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::optional<double> psi = std::nullopt)
        : std::runtime_error(what), code_(code), psi_(psi) {}

    Errc code() const noexcept { return code_; }
    std::optional<double> psi() const noexcept { return psi_; }

private:
    Errc code_;
    std::optional<double> psi_;
};

} // namespace slideocam
