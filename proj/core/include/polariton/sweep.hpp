#pragma once

#include "polariton/hopfield.hpp"

#include <iosfwd>
#include <vector>

namespace polariton {

enum class SweepAxis { OmegaC, G };

// base supplies everything not swept. For the OmegaC axis, g_values holds
// one curve per entry (empty means the single coupling in base); for the G
// axis, g_values must be empty and base.omega_c is the fixed cavity energy.
// Swept g is interpreted per variant: phonon/plasmon as the coupling itself,
// exciton converted to chi = eps_inf (g/omega_0)^2 / pi.
struct SweepSpec {
    SweepAxis axis;
    double start; // meV; > 0 for OmegaC, >= 0 for G
    double stop;  // meV, > start
    int points;   // in [2, 100000]
    SystemParams base;
    std::vector<double> g_values;
};

struct SweepRow {
    double omega_c;
    double g; // variant-convention input coupling
    double omega_plus;
    double omega_minus;
    double c;
    double entropy_over_kB;
    double log_negativity;
};

// Rows ordered axis-major: all curves at the first axis point, then the
// next point. Serial and deterministic. Throws ConfigError on a malformed
// spec, InstabilityError if any point is unstable.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Header omega_c_meV,g_meV,omega_plus_meV,omega_minus_meV,c,entropy_over_kB,
// log_negativity; values in fixed 12-significant-digit scientific notation.
void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

} // namespace polariton
