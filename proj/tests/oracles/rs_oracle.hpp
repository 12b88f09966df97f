#pragma once

// Independent Reeds-Shepp length oracle for tests. Enumerates the standard
// word families directly from their structure (steer pattern, gear-sign
// pattern, equal-arc and quarter-turn constraints), closes the final turn
// from the heading constraint and solves the two remaining magnitudes by a
// damped Newton iteration on the position residual, seeded on a parameter
// grid. Every accepted candidate is an exact path of its word family, so the
// returned minimum is always an upper bound on the true optimum.

namespace rs_oracle {

/// Minimum length over all word families from (0,0,0) to (x, y, phi) at unit
/// curvature. Returns +inf if no candidate converged (should not happen).
double min_length(double x, double y, double phi);

}  // namespace rs_oracle
