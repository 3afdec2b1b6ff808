#include "fqesr/fft.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace fqesr {

namespace {

constexpr double two_pi = 6.283185307179586476925286766559;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

// Iterative radix-2 Cooley-Tukey, length must be a power of two.
void fft_pow2(std::vector<cplx>& x) {
    const std::size_t n = x.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(x[i], x[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = -two_pi / static_cast<double>(len);
        const cplx wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            cplx w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const cplx u = x[i + k];
                const cplx t = w * x[i + k + len / 2];
                x[i + k] = u + t;
                x[i + k + len / 2] = u - t;
                w *= wlen;
            }
        }
    }
}

// Chirp phase e^{+-i pi n^2 / N} with the square reduced mod 2N so the
// argument stays small for long transforms.
cplx chirp(std::uint64_t n, std::uint64_t big_n, double sign) {
    const std::uint64_t m = (n % (2 * big_n)) * (n % (2 * big_n)) % (2 * big_n);
    const double ang = sign * two_pi * 0.5 * static_cast<double>(m) / static_cast<double>(big_n);
    return {std::cos(ang), std::sin(ang)};
}

void fft_bluestein(std::vector<cplx>& x) {
    const std::size_t n = x.size();
    const std::size_t m = next_pow2(2 * n - 1);
    std::vector<cplx> a(m, cplx(0.0, 0.0)), b(m, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        const cplx down = chirp(k, n, -1.0);
        a[k] = x[k] * down;
        const cplx up = std::conj(down);
        b[k] = up;
        if (k != 0) b[m - k] = up;
    }
    fft_pow2(a);
    fft_pow2(b);
    for (std::size_t k = 0; k < m; ++k) a[k] *= b[k];
    // inverse pow2 transform via conjugation
    for (auto& v : a) v = std::conj(v);
    fft_pow2(a);
    const double inv_m = 1.0 / static_cast<double>(m);
    for (std::size_t k = 0; k < n; ++k) x[k] = std::conj(a[k]) * inv_m * chirp(k, n, -1.0);
}

} // namespace

void fft(std::vector<cplx>& x) {
    if (x.empty()) throw std::invalid_argument("fft: empty input");
    if (x.size() == 1) return;
    if (is_pow2(x.size()))
        fft_pow2(x);
    else
        fft_bluestein(x);
}

void ifft(std::vector<cplx>& x) {
    if (x.empty()) throw std::invalid_argument("ifft: empty input");
    for (auto& v : x) v = std::conj(v);
    fft(x);
    const double inv_n = 1.0 / static_cast<double>(x.size());
    for (auto& v : x) v = std::conj(v) * inv_n;
}

RealSpectrum fft_real(const std::vector<double>& series, double fs) {
    if (series.size() < 2) throw std::invalid_argument("fft_real: need at least 2 samples");
    if (!(fs > 0.0)) throw std::invalid_argument("fft_real: sample rate must be positive");
    RealSpectrum out;
    out.fs = fs;
    const std::size_t n = series.size();
    out.bins.assign(series.begin(), series.end());
    fft(out.bins);
    out.frequencies.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        out.frequencies[k] = fs * static_cast<double>(k) / static_cast<double>(n);
    return out;
}

std::vector<double> inverse_fft_real(const std::vector<cplx>& bins) {
    if (bins.empty()) throw std::invalid_argument("inverse_fft_real: empty input");
    std::vector<cplx> work = bins;
    ifft(work);
    std::vector<double> out(work.size());
    for (std::size_t i = 0; i < work.size(); ++i) out[i] = work[i].real();
    return out;
}

} // namespace fqesr
