#include "slideocam/presets.hpp"

#include "slideocam/hertz_contact.hpp"

namespace slideocam::orthoglide {

LoadCase load() { return {torque_Nm * 1000.0, shaft_tau_max, shaft_tau_max}; }

DesignParams optimum_design()
{
    return DesignParams::from_diameters(pitch, phi_bear, phi_cam, lobes, cams);
}

DesignSpace design_space()
{
    const Material steel = *find_material("improved_steel");
    return {
        {1.8, 12.0, 103},
        {3.75, 12.0, 84},
        {20.0, 30.0, 40.0, 50.0},
        pitch,
        lobes,
        cams,
        load(),
        steel,
        steel,
    };
}

} // namespace slideocam::orthoglide
