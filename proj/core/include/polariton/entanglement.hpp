#pragma once

#include "polariton/bogoliubov.hpp"
#include "polariton/gaussian.hpp"

namespace polariton {

// Ground-state entanglement summary. Entropy uses natural log (reported as
// S/k_B), negativity uses base 2; the mixed bases are intentional.
struct EntanglementReport {
    double sigma;           // (sqrt(c^2+1) - 1)/2 = sinh^2(r/2)
    double entropy_over_kB; // (sigma+1) ln(sigma+1) - sigma ln sigma
    double r;               // asinh(c)
    double nu_tilde_minus;  // (sqrt(c^2+1) - c)/2 = e^-r / 2
    double log_negativity;  // max(0, -log2(2 nu_tilde_minus)) = r / ln 2
    double n_virtual;       // (a+b)/4 - 1/2
};

// S/k_B = (sigma+1) ln(sigma+1) - sigma ln sigma. Exactly 0 at sigma = 0;
// sigma < 1e-6 uses the series sigma(1 - ln sigma) + sigma^2/2 (the direct
// form multiplies 0-ish by a diverging log). Negative sigma throws
// ParameterError.
double entropy_from_sigma(double sigma);

// Same entropy through the c-only form
//   sqrt(c^2+1) ln((sqrt(c^2+1)+1)/c) + ln(c/2),
// valid for c > 0. Loses all precision below c ~ 1e-7; kept for cross-checks.
double entropy_from_c_closed_form(double c);

// Assembles the report from gs, cross-checking sigma against both reduced
// Wigner triples of cov (the two subsystem entropies are equal for a pure
// state). A mismatch beyond 1e-10 relative means gs and cov do not describe
// the same state and throws NumericalError.
EntanglementReport entanglement_report(const GroundStateGaussian& gs, const CovarianceMatrix& cov);

} // namespace polariton
