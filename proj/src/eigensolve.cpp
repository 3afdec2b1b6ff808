#include "fqesr/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fqesr {

HermitianMatrix::HermitianMatrix(std::size_t dim, std::vector<cplx> entries)
    : dim_(dim), a_(std::move(entries)) {
    if (dim_ < 1) throw std::invalid_argument("HermitianMatrix: dim must be >= 1");
    if (a_.size() != dim_ * dim_)
        throw std::invalid_argument("HermitianMatrix: entry count " + std::to_string(a_.size()) +
                                    " does not match dim " + std::to_string(dim_));
    validate();
}

HermitianMatrix HermitianMatrix::zero(std::size_t dim) {
    return HermitianMatrix(dim, std::vector<cplx>(dim * dim, cplx(0.0, 0.0)));
}

double HermitianMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const cplx& v : a_) sum += std::norm(v);
    return std::sqrt(sum);
}

void HermitianMatrix::validate() const {
    double amax = 0.0;
    for (const cplx& v : a_) amax = std::max(amax, std::abs(v));
    const double tol = 1e-12 * std::max(amax, 1e-300);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = i; j < dim_; ++j) {
            const cplx d = a_[i * dim_ + j] - std::conj(a_[j * dim_ + i]);
            if (std::abs(d) > tol)
                throw std::invalid_argument("HermitianMatrix: entries (" + std::to_string(i) + "," +
                                            std::to_string(j) + ") and (" + std::to_string(j) + "," +
                                            std::to_string(i) + ") violate Hermiticity");
        }
    }
}

namespace {

double offdiag_norm(const std::vector<cplx>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * std::norm(a[i * n + j]);
    return std::sqrt(sum);
}

} // namespace

EigenSystem eigensolve(const HermitianMatrix& h) {
    h.validate();
    const std::size_t n = h.dim();
    std::vector<cplx> a = h.entries();
    // Exact symmetrization so rotations see a_ji == conj(a_ij) to the last bit.
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = cplx(a[i * n + i].real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx m = 0.5 * (a[i * n + j] + std::conj(a[j * n + i]));
            a[i * n + j] = m;
            a[j * n + i] = std::conj(m);
        }
    }

    std::vector<cplx> v(n * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double fro = std::max(h.frobenius_norm(), 1e-300);
    const double target = 1e-15 * fro;
    const int max_sweeps = 80;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a, n) <= target) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a[p * n + q];
                const double mag = std::abs(apq);
                if (mag <= 1e-300) continue;
                const cplx phase = apq / mag; // e^{i phi}
                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const cplx sph = s * phase;           // s e^{i phi}
                const cplx sphc = std::conj(sph);     // s e^{-i phi}

                // Rows/columns outside the (p,q) plane.
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = a[k * n + p];
                    const cplx akq = a[k * n + q];
                    const cplx nkp = c * akp - sphc * akq;
                    const cplx nkq = sph * akp + c * akq;
                    a[k * n + p] = nkp;
                    a[k * n + q] = nkq;
                    a[p * n + k] = std::conj(nkp);
                    a[q * n + k] = std::conj(nkq);
                }
                const double shift = 2.0 * c * s * mag;
                a[p * n + p] = cplx(c * c * app - shift + s * s * aqq, 0.0);
                a[q * n + q] = cplx(s * s * app + shift + c * c * aqq, 0.0);
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v[k * n + p];
                    const cplx vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - sphc * vkq;
                    v[k * n + q] = sph * vkp + c * vkq;
                }
            }
        }
    }
    if (sweep == max_sweeps && offdiag_norm(a, n) > target)
        throw std::runtime_error("eigensolve: Jacobi sweeps did not converge after " +
                                 std::to_string(max_sweeps) + " sweeps (off-diagonal " +
                                 std::to_string(offdiag_norm(a, n) / fro) + " relative)");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * n + i].real() < a[j * n + j].real(); });

    EigenSystem es;
    es.dim = n;
    es.values.resize(n);
    es.vectors.assign(n * n, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < n; ++k) {
        es.values[k] = a[order[k] * n + order[k]].real();
        for (std::size_t r = 0; r < n; ++r) es.vectors[r * n + k] = v[r * n + order[k]];
    }
    return es;
}

} // namespace fqesr
