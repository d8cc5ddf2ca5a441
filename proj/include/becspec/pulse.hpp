#pragma once

#include "becspec/constants.hpp"

namespace becspec {

/// Square two-photon Rabi pulse in the rotating-wave approximation.
struct PulseSpec {
    double rabi = 0.0;      // rad/s
    double duration = 0.0;  // s
    double detuning = 0.0;  // rad/s

    PulseSpec with_detuning_hz(double hz) const {
        PulseSpec p = *this;
        p.detuning = 2.0 * constants::pi * hz;
        return p;
    }
};

}  // namespace becspec
