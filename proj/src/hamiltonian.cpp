#include "fqesr/hamiltonian.hpp"

#include "fqesr/constants.hpp"

#include <cmath>
#include <stdexcept>

namespace fqesr {

SpinOperators spin_operators(double spin) {
    const double doubled = 2.0 * spin;
    if (spin < 0.0 || std::abs(doubled - std::round(doubled)) > 1e-9)
        throw std::invalid_argument("spin_operators: spin must be a non-negative half-integer");
    const std::size_t dim = static_cast<std::size_t>(std::lround(doubled + 1.0));
    SpinOperators ops;
    ops.dim = dim;
    ops.x.assign(dim * dim, cplx(0.0, 0.0));
    ops.y.assign(dim * dim, cplx(0.0, 0.0));
    ops.z.assign(dim * dim, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < dim; ++k) {
        const double m = spin - static_cast<double>(k);
        ops.z[k * dim + k] = m;
        if (k > 0) {
            // <m+1| S_+ |m> with |m+1> at index k-1
            const double c = std::sqrt(spin * (spin + 1.0) - m * (m + 1.0));
            ops.x[(k - 1) * dim + k] += 0.5 * c;
            ops.x[k * dim + (k - 1)] += 0.5 * c;
            ops.y[(k - 1) * dim + k] += cplx(0.0, -0.5 * c);
            ops.y[k * dim + (k - 1)] += cplx(0.0, 0.5 * c);
        }
    }
    return ops;
}

std::vector<cplx> kron(const std::vector<cplx>& a, std::size_t da, const std::vector<cplx>& b,
                       std::size_t db) {
    std::vector<cplx> out(da * db * da * db, cplx(0.0, 0.0));
    const std::size_t n = da * db;
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            const cplx aij = a[i * da + j];
            if (aij == cplx(0.0, 0.0)) continue;
            for (std::size_t k = 0; k < db; ++k)
                for (std::size_t l = 0; l < db; ++l)
                    out[(i * db + k) * n + (j * db + l)] = aij * b[k * db + l];
        }
    return out;
}

namespace {

struct ProductOps {
    std::size_t dim = 0;
    std::vector<cplx> s[3]; // electron operators on the product space
    std::vector<cplx> i[3]; // nuclear operators on the product space
};

ProductOps product_operators(double spin_s, double spin_i) {
    const SpinOperators se = spin_operators(spin_s);
    const SpinOperators in = spin_operators(spin_i);
    std::vector<cplx> eye_e(se.dim * se.dim, cplx(0.0, 0.0));
    std::vector<cplx> eye_n(in.dim * in.dim, cplx(0.0, 0.0));
    for (std::size_t k = 0; k < se.dim; ++k) eye_e[k * se.dim + k] = 1.0;
    for (std::size_t k = 0; k < in.dim; ++k) eye_n[k * in.dim + k] = 1.0;

    ProductOps ops;
    ops.dim = se.dim * in.dim;
    const std::vector<cplx>* se_c[3] = {&se.x, &se.y, &se.z};
    const std::vector<cplx>* in_c[3] = {&in.x, &in.y, &in.z};
    for (int a = 0; a < 3; ++a) {
        ops.s[a] = kron(*se_c[a], se.dim, eye_n, in.dim);
        ops.i[a] = kron(eye_e, se.dim, *in_c[a], in.dim);
    }
    return ops;
}

void axpy(std::vector<cplx>& acc, double coeff, const std::vector<cplx>& m) {
    if (coeff == 0.0) return;
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += coeff * m[k];
}

std::vector<cplx> matprod(const std::vector<cplx>& a, const std::vector<cplx>& b, std::size_t n) {
    std::vector<cplx> out(n * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a[i * n + k];
            if (aik == cplx(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < n; ++j) out[i * n + j] += aik * b[k * n + j];
        }
    return out;
}

} // namespace

HermitianMatrix build_hamiltonian(const LabTensors& sys, const FieldVector& field) {
    field.validate();
    const ProductOps ops = product_operators(sys.S, sys.I);
    if (ops.dim > 64)
        throw std::invalid_argument("build_hamiltonian: Hilbert dimension exceeds the supported 64");
    const std::size_t n = ops.dim;
    std::vector<cplx> h(n * n, cplx(0.0, 0.0));

    const Vec3 b_vec = field.vector_t();

    // electron Zeeman: mu_B (B^T g)_b S_b
    const Vec3 bg = vecmat(b_vec, sys.g);
    for (int b = 0; b < 3; ++b) axpy(h, constants::mu_bohr * bg[b], ops.s[b]);

    // hyperfine: h A_ab I_a S_b  (A in Hz)
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const double coeff = constants::h_planck * sys.A[a][b];
            if (coeff == 0.0) continue;
            axpy(h, coeff, matprod(ops.i[a], ops.s[b], n));
        }

    // quadrupole: h Q_ab I_a I_b
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            const double coeff = constants::h_planck * sys.Q[a][b];
            if (coeff == 0.0) continue;
            axpy(h, coeff, matprod(ops.i[a], ops.i[b], n));
        }

    // nuclear Zeeman: -mu_n g_n B_a I_a
    for (int a = 0; a < 3; ++a) axpy(h, -constants::mu_nuclear * sys.g_n * b_vec[a], ops.i[a]);

    return HermitianMatrix(n, std::move(h));
}

HermitianMatrix build_hamiltonian(const SpinSystem& sys, const FieldVector& field) {
    return build_hamiltonian(lab_tensors(sys), field);
}

std::vector<cplx> moment_operator(const LabTensors& sys, const Vec3& axis) {
    std::vector<cplx> m = moment_operator_mub(sys, axis);
    for (cplx& v : m) v *= constants::mu_bohr;
    return m;
}

std::vector<cplx> moment_operator_mub(const LabTensors& sys, const Vec3& axis) {
    const Vec3 v = normalized(axis);
    const ProductOps ops = product_operators(sys.S, sys.I);
    std::vector<cplx> m(ops.dim * ops.dim, cplx(0.0, 0.0));
    const Vec3 vg = vecmat(v, sys.g);
    for (int b = 0; b < 3; ++b) axpy(m, -vg[b], ops.s[b]);
    const double nuc = constants::mu_nuclear / constants::mu_bohr * sys.g_n;
    for (int a = 0; a < 3; ++a) axpy(m, nuc * v[a], ops.i[a]);
    return m;
}

} // namespace fqesr
