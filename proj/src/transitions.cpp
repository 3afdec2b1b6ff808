#include "fqesr/transitions.hpp"

#include "fqesr/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fqesr {

std::vector<double> boltzmann_populations(const std::vector<double>& energies_j, double temp_k) {
    if (!(temp_k > 0.0)) throw std::invalid_argument("boltzmann_populations: temperature must be > 0");
    const double e_min = *std::min_element(energies_j.begin(), energies_j.end());
    std::vector<double> p(energies_j.size());
    double z = 0.0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = std::exp(-(energies_j[k] - e_min) / (constants::k_boltzmann * temp_k));
        z += p[k];
    }
    for (double& v : p) v /= z;
    return p;
}

namespace {

// Merge entries closer than 1 Hz; the strongest member keeps the level tag.
TransitionList merge_lines(std::vector<TransitionEntry> raw) {
    std::sort(raw.begin(), raw.end(),
              [](const TransitionEntry& a, const TransitionEntry& b) { return a.freq_hz < b.freq_hz; });
    TransitionList out;
    for (const TransitionEntry& e : raw) {
        if (!out.entries.empty() && e.freq_hz - out.entries.back().freq_hz < 1.0) {
            TransitionEntry& last = out.entries.back();
            const double total = last.intensity + e.intensity;
            if (total > 0.0)
                last.freq_hz = (last.freq_hz * last.intensity + e.freq_hz * e.intensity) / total;
            if (e.intensity > last.intensity) {
                last.lower = e.lower;
                last.upper = e.upper;
            }
            last.intensity = total;
        } else {
            out.entries.push_back(e);
        }
    }
    return out;
}

} // namespace

TransitionList transitions(const LabTensors& sys, const FieldVector& field, double temp_k,
                           const Vec3& drive_axis, double f_lo_hz, double f_hi_hz) {
    if (!(temp_k > 0.0)) throw std::invalid_argument("transitions: temperature must be > 0");
    if (!(f_lo_hz <= f_hi_hz)) throw std::invalid_argument("transitions: invalid frequency window");

    const HermitianMatrix h = build_hamiltonian(sys, field);
    const EigenSystem es = eigensolve(h);
    const std::vector<double> pop = boltzmann_populations(es.values, temp_k);

    const std::size_t n = es.dim;
    const std::vector<cplx> m = moment_operator_mub(sys, drive_axis);

    // W = M V, then <i|M|j> = column_i(V)^dag column_j(W)
    std::vector<cplx> w(n * n, cplx(0.0, 0.0));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx mrk = m[r * n + k];
            if (mrk == cplx(0.0, 0.0)) continue;
            for (std::size_t c = 0; c < n; ++c) w[r * n + c] += mrk * es.vectors[k * n + c];
        }

    std::vector<TransitionEntry> raw;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double f = (es.values[j] - es.values[i]) / constants::h_planck;
            if (f < f_lo_hz || f > f_hi_hz) continue;
            const double dp = pop[i] - pop[j];
            if (dp <= 0.0) continue; // inverted weighting excluded
            cplx amp(0.0, 0.0);
            for (std::size_t r = 0; r < n; ++r) amp += std::conj(es.vectors[r * n + i]) * w[r * n + j];
            const double intensity = std::norm(amp) * dp;
            if (intensity <= 0.0) continue;
            raw.push_back({f, intensity, i, j});
        }
    }
    return merge_lines(std::move(raw));
}

TransitionList transitions(const SpinSystem& sys, const FieldVector& field, double temp_k,
                           const Vec3& drive_axis, double f_lo_hz, double f_hi_hz) {
    return transitions(lab_tensors(sys), field, temp_k, drive_axis, f_lo_hz, f_hi_hz);
}

namespace {

double lorentzian_unit(double df, double fwhm) {
    const double hwhm = 0.5 * fwhm;
    return hwhm / (M_PI * (df * df + hwhm * hwhm));
}

double gaussian_unit(double df, double fwhm) {
    const double sigma = fwhm / 2.3548200450309493; // FWHM / sqrt(8 ln 2)
    const double u = df / sigma;
    return std::exp(-0.5 * u * u) / (sigma * 2.5066282746310002);
}

void check_grid(const std::vector<double>& grid) {
    if (grid.empty()) throw std::invalid_argument("synthesize_spectrum: empty frequency grid");
    for (std::size_t k = 1; k < grid.size(); ++k)
        if (!(grid[k] > grid[k - 1]))
            throw std::invalid_argument("synthesize_spectrum: grid must be strictly ascending");
}

} // namespace

SpectrumTrace synthesize_spectrum(const TransitionList& lines, const std::vector<double>& grid_hz,
                                  Lineshape kind, double fwhm_hz) {
    check_grid(grid_hz);
    if (!(fwhm_hz > 0.0)) throw std::invalid_argument("synthesize_spectrum: width must be > 0");
    SpectrumTrace trace;
    trace.frequencies = grid_hz;
    trace.amplitudes.assign(grid_hz.size(), 0.0);
    trace.kind = kind;
    trace.fwhm_hz = fwhm_hz;
    for (const TransitionEntry& line : lines.entries) {
        for (std::size_t k = 0; k < grid_hz.size(); ++k) {
            const double df = grid_hz[k] - line.freq_hz;
            const double shape =
                (kind == Lineshape::lorentzian) ? lorentzian_unit(df, fwhm_hz) : gaussian_unit(df, fwhm_hz);
            trace.amplitudes[k] += line.intensity * shape;
        }
    }
    return trace;
}

std::vector<CrystalLine> crystal_transitions(const CrystalConfig& crystal, const FieldVector& field,
                                             double temp_k, const Vec3& drive_axis, double f_lo_hz,
                                             double f_hi_hz) {
    CrystalConfig cfg = crystal;
    cfg.validate();
    std::vector<CrystalLine> out;
    for (std::size_t s = 0; s < cfg.sites.size(); ++s) {
        const LabTensors base = lab_tensors(cfg.sites[s]);
        for (std::size_t sub = 0; sub < 2; ++sub) {
            const LabTensors t =
                (sub == 0) ? base : apply_subclass(base, cfg.subclass.axis, cfg.subclass.angle);
            const double weight = 0.5 * cfg.weights[s];
            const TransitionList list = transitions(t, field, temp_k, drive_axis, f_lo_hz, f_hi_hz);
            for (TransitionEntry e : list.entries) {
                e.intensity *= weight;
                out.push_back({s, sub, e});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CrystalLine& a, const CrystalLine& b) {
        return a.entry.freq_hz < b.entry.freq_hz;
    });
    return out;
}

SpectrumTrace crystal_spectrum(const std::vector<CrystalLine>& lines,
                               const std::vector<double>& grid_hz, Lineshape kind, double fwhm_hz) {
    TransitionList combined;
    combined.entries.reserve(lines.size());
    for (const CrystalLine& l : lines) combined.entries.push_back(l.entry);
    return synthesize_spectrum(combined, grid_hz, kind, fwhm_hz);
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n < 2 || !(hi > lo)) throw std::invalid_argument("linspace: need n >= 2 and hi > lo");
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k)
        out[k] = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(n - 1);
    return out;
}

} // namespace fqesr
