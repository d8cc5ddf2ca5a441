#pragma once

#include <vector>

#include "becspec/fft.hpp"
#include "becspec/groundstate.hpp"
#include "becspec/pulse.hpp"
#include "becspec/spectra.hpp"

namespace becspec {

struct TwoComponentState {
    ComplexField psi1;
    ComplexField psi2;
    double time = 0.0;  // s, enters the drive phase exp(±i detuning t)
};

/// One Strang step of the coupled two-component equations: half kinetic on
/// both components, a full local step (potentials, both mean-field terms and
/// the Rabi coupling as an exact pointwise 2x2 unitary with densities frozen
/// and the drive phase taken at the substep midpoint), then half kinetic.
/// Positive detuning drives transitions to higher-energy modes.
void step_coupled(TwoComponentState& state, double dt, const PulseSpec& pulse,
                  const RealField& v1, const RealField& v2,
                  const CouplingSet& g, const FourierTransform& fft);

struct PropagationResult {
    double transfer_fraction = 0.0;  // N2 / (N1 + N2) at the end
    TwoComponentState final;
};

/// Propagates the ground state under the pulse for its full duration with
/// component 2 initially empty. Equivalent to composing step_coupled but with
/// adjacent half-kinetic steps merged.
PropagationResult propagate_pulse(const GroundState& ground, const PulseSpec& pulse,
                                  const RealField& v1, const RealField& v2,
                                  const CouplingSet& g, double dt);

/// Independent propagation per detuning, mapped over a worker pool. Results
/// are ordered by detuning index and bit-reproducible regardless of worker
/// scheduling. Points that fail are dropped with a stderr note; if every
/// point fails the error is rethrown.
Spectrum sweep_detuning(const GroundState& ground, const PulseSpec& pulse_template,
                        const std::vector<double>& detunings_hz,
                        const RealField& v1, const RealField& v2,
                        const CouplingSet& g, double dt, int workers = 0);

}  // namespace becspec
