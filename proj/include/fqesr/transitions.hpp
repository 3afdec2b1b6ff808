#pragma once

#include "fqesr/hamiltonian.hpp"

#include <cstddef>
#include <vector>

namespace fqesr {

struct TransitionEntry {
    double freq_hz = 0.0;
    double intensity = 0.0; // |<i|M|j>|^2 (p_i - p_j), M in mu_B units
    std::size_t lower = 0;
    std::size_t upper = 0;
};

struct TransitionList {
    std::vector<TransitionEntry> entries; // ascending in frequency
};

enum class Lineshape { lorentzian, gaussian };

struct SpectrumTrace {
    std::vector<double> frequencies; // Hz, strictly ascending
    std::vector<double> amplitudes;
    Lineshape kind = Lineshape::lorentzian;
    double fwhm_hz = 0.0;
};

std::vector<double> boltzmann_populations(const std::vector<double>& energies_j, double temp_k);

// Allowed transitions of one spin system within a frequency window.
// Drive operator: magnetic moment along drive_axis; thermal weighting by the
// Boltzmann population difference, clipped at zero; lines closer than 1 Hz
// are merged with summed intensity.
TransitionList transitions(const LabTensors& sys, const FieldVector& field, double temp_k,
                           const Vec3& drive_axis, double f_lo_hz, double f_hi_hz);
TransitionList transitions(const SpinSystem& sys, const FieldVector& field, double temp_k,
                           const Vec3& drive_axis, double f_lo_hz, double f_hi_hz);

// Continuous trace: sum of unit-area lineshapes of the given FWHM, each
// scaled by the line intensity.
SpectrumTrace synthesize_spectrum(const TransitionList& lines, const std::vector<double>& grid_hz,
                                  Lineshape kind, double fwhm_hz);

// One line of a multi-site crystal; intensity carries the site weight
// (weights split equally over the two subclasses).
struct CrystalLine {
    std::size_t site = 0;     // index into CrystalConfig::sites
    std::size_t subclass = 0; // 0 original, 1 rotated partner
    TransitionEntry entry;
};

std::vector<CrystalLine> crystal_transitions(const CrystalConfig& crystal, const FieldVector& field,
                                             double temp_k, const Vec3& drive_axis, double f_lo_hz,
                                             double f_hi_hz);

SpectrumTrace crystal_spectrum(const std::vector<CrystalLine>& lines,
                               const std::vector<double>& grid_hz, Lineshape kind, double fwhm_hz);

std::vector<double> linspace(double lo, double hi, std::size_t n);

} // namespace fqesr
