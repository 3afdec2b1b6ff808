#pragma once

#include "fqesr/hermitian.hpp"
#include "fqesr/spin_system.hpp"

namespace fqesr {

// Dimensionless angular-momentum operators in the |m> basis, m descending.
struct SpinOperators {
    std::size_t dim = 0;
    std::vector<cplx> x, y, z; // row-major dim x dim
};

SpinOperators spin_operators(double spin);

std::vector<cplx> kron(const std::vector<cplx>& a, std::size_t da, const std::vector<cplx>& b,
                       std::size_t db);

// Spin Hamiltonian on the product space |m_S> (x) |m_I>, energies in joules:
// electron Zeeman + hyperfine + quadrupole + nuclear Zeeman, with the
// couplings taken from the lab-frame tensors (A, Q in Hz, multiplied by h).
HermitianMatrix build_hamiltonian(const LabTensors& sys, const FieldVector& field);
HermitianMatrix build_hamiltonian(const SpinSystem& sys, const FieldVector& field);

// Magnetic moment component along a unit axis, J/T:
// mu_axis = -(mu_B axis.g.S - mu_n g_n axis.I)
std::vector<cplx> moment_operator(const LabTensors& sys, const Vec3& axis);

// Same operator in Bohr-magneton units; transition intensities are squared
// matrix elements of this, so they come out of order one.
std::vector<cplx> moment_operator_mub(const LabTensors& sys, const Vec3& axis);

} // namespace fqesr
