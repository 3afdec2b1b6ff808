#include "fqesr/spin_system.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fqesr {

Mat3 euler_zyz_matrix(const std::array<double, 3>& angles) {
    return matmul(rotation_z(angles[0]), matmul(rotation_y(angles[1]), rotation_z(angles[2])));
}

Mat3 rotate_tensor(const TensorSpec& spec) {
    const Mat3 r = euler_zyz_matrix(spec.euler_zyz);
    const Mat3 d = mat3_diag(spec.principal_values[0], spec.principal_values[1],
                             spec.principal_values[2]);
    return matmul(r, matmul(d, transpose(r)));
}

Mat3 apply_subclass(const Mat3& tensor, const Vec3& axis, double angle) {
    if (norm(axis) < 1e-12) throw std::invalid_argument("apply_subclass: zero rotation axis");
    const Mat3 r = rotation_axis_angle(axis, angle);
    return matmul(r, matmul(tensor, transpose(r)));
}

Mat3 apply_subclass(const TensorSpec& spec, const Vec3& axis, double angle) {
    return apply_subclass(rotate_tensor(spec), axis, angle);
}

namespace {

void check_half_integer(double s, const char* what) {
    const double doubled = 2.0 * s;
    if (s < 0.0 || std::abs(doubled - std::round(doubled)) > 1e-9)
        throw std::invalid_argument(std::string(what) + " must be a non-negative half-integer, got " +
                                    std::to_string(s));
}

} // namespace

std::size_t SpinSystem::electron_dim() const {
    return static_cast<std::size_t>(std::lround(2.0 * S + 1.0));
}

std::size_t SpinSystem::nuclear_dim() const {
    return static_cast<std::size_t>(std::lround(2.0 * I + 1.0));
}

std::size_t SpinSystem::hilbert_dim() const { return electron_dim() * nuclear_dim(); }

void SpinSystem::validate() const {
    check_half_integer(S, "electron spin S");
    check_half_integer(I, "nuclear spin I");
    if (hilbert_dim() > 64)
        throw std::invalid_argument("SpinSystem '" + label + "': Hilbert dimension " +
                                    std::to_string(hilbert_dim()) + " exceeds the supported 64");
    if (hilbert_dim() < 2)
        throw std::invalid_argument("SpinSystem '" + label + "': Hilbert dimension must be >= 2");
}

LabTensors lab_tensors(const SpinSystem& sys) {
    sys.validate();
    LabTensors t;
    t.S = sys.S;
    t.I = sys.I;
    t.g = rotate_tensor(sys.g);
    t.A = rotate_tensor(sys.A);
    t.Q = rotate_tensor(sys.Q);
    t.g_n = sys.g_n;
    t.label = sys.label;
    return t;
}

LabTensors apply_subclass(const LabTensors& t, const Vec3& axis, double angle) {
    LabTensors out = t;
    out.g = apply_subclass(t.g, axis, angle);
    out.A = apply_subclass(t.A, axis, angle);
    out.Q = apply_subclass(t.Q, axis, angle);
    return out;
}

void CrystalConfig::validate() {
    if (sites.empty()) throw std::invalid_argument("CrystalConfig: no sites defined");
    if (weights.empty()) weights.assign(sites.size(), 1.0);
    if (weights.size() != sites.size())
        throw std::invalid_argument("CrystalConfig: weights count " + std::to_string(weights.size()) +
                                    " does not match site count " + std::to_string(sites.size()));
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw std::invalid_argument("CrystalConfig: negative site weight");
        sum += w;
    }
    if (sum <= 0.0) throw std::invalid_argument("CrystalConfig: weights sum to zero");
    for (double& w : weights) w /= sum;
    if (norm(subclass.axis) < 1e-12)
        throw std::invalid_argument("CrystalConfig: zero subclass rotation axis");
    for (const SpinSystem& s : sites) s.validate();
}

FieldVector FieldVector::along(const Vec3& dir, double tesla) {
    if (norm(dir) < 1e-12) throw std::invalid_argument("FieldVector: zero direction");
    FieldVector f;
    f.magnitude_t = tesla;
    f.direction = normalized(dir);
    return f;
}

void FieldVector::validate() const {
    if (std::abs(norm(direction) - 1.0) > 1e-12)
        throw std::invalid_argument("FieldVector: direction is not a unit vector");
}

} // namespace fqesr
