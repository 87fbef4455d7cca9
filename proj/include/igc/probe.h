#pragma once

#include "igc/sim.h"

// Empirical estimates of the interconnection gains that have no closed form:
// gamma_0y (y1 -> y0 = -d(x1*)/dt in the guidance loop) and gamma_2y
// (y3 -> y2 = -d(x2*)/dt in the guidance + attitude-angle loop).
//
// Each estimate runs the isolated subsystem twice per input axis, once
// unforced and once with a constant injected input of size `amplitude`, over
// the scenario's flight from the initial range down to max(r_min,
// r_intercept), and returns max sup||output difference|| / amplitude.
namespace igc::analysis {

double probe_gamma0y(const sim::Scenario& sc, double amplitude = 1e-4);

double probe_gamma2y(const sim::Scenario& sc, double amplitude = 1e-4);

}  // namespace igc::analysis
