#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polariton {

enum class VariantTag { Phonon, Exciton, Plasmon };

// A measured polariton doublet plus the model context needed to invert it.
struct MeasuredDoublet {
    double omega_plus_meas;  // meV
    double omega_minus_meas; // meV
    double omega_0;          // meV, known matter excitation energy
    VariantTag variant;
    std::optional<double> sigma_plus;  // 1-sigma uncertainty, meV
    std::optional<double> sigma_minus; // meV
};

struct InversionResult {
    double omega_c; // omega_+ omega_- / omega_0
    double g;       // phonon-convention g for Phonon/Exciton, Omega for Plasmon
    double Omega;
    double c;       // 2 Omega / (omega_+ + omega_-)
};

// Closed-form inversion: omega_c from the product rule, then
//   g_pe = sqrt((sum_meas - sum_bare)(sum_meas + sum_bare)) / 2
// in factored form. A sum deficit within 8 ulp is an exactly uncoupled
// doublet (g = 0); beyond that throws InconsistentMeasurementError (no real
// coupling; equivalently omega_0 outside [omega_-, omega_+]). Invalid
// ordering or nonpositive energies throw ParameterError.
InversionResult invert_spectrum(const MeasuredDoublet& m);

enum class FitStatus { Ok, InvalidDoublet, InconsistentMeasurement };

// One input row with everything derived from it. Failed rows keep their
// inputs and status; derived fields are meaningless then and are written as
// empty CSV fields.
struct FitRow {
    double omega_plus_meas;
    double omega_minus_meas;
    std::optional<double> sigma_plus;
    std::optional<double> sigma_minus;
    FitStatus status;
    InversionResult inv{};
    double sigma = 0.0;
    double entropy_over_kB = 0.0;
    double log_negativity = 0.0;
    double nu_tilde_minus = 0.0;
    double n_virtual = 0.0;
    // First-order finite-difference propagation of the input uncertainties,
    // present only when the input carried them.
    std::optional<double> sigma_g;
    std::optional<double> sigma_log_negativity;
};

struct FitTable {
    std::vector<FitRow> rows;
    bool has_uncertainties = false;
};

// Input header `omega_plus_meV,omega_minus_meV`, optionally followed by
// `sigma_plus_meV,sigma_minus_meV`. Malformed structure throws ParseError
// with the 1-based line number; value-level failures become row statuses.
// An empty data section yields an empty table.
FitTable fit_from_csv(std::istream& in, double omega_0, VariantTag variant);

// Columns: omega_plus_meV,omega_minus_meV,omega_c_meV,g_meV,Omega_meV,c,
// sigma,entropy_over_kB,log_negativity,nu_tilde_minus,n_virtual,status,
// plus sigma_g_meV,sigma_log_negativity when the table has uncertainties.
// Byte-deterministic.
void write_fit_csv(const FitTable& table, std::ostream& out);

const char* to_string(FitStatus status);

} // namespace polariton
