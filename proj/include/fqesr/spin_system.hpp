#pragma once

#include "fqesr/mat3.hpp"

#include <array>
#include <string>
#include <vector>

namespace fqesr {

// Interaction tensor given by its principal values and the z-y-z Euler
// angles (radians) taking the principal frame into the crystal frame.
// Units of the principal values: dimensionless for g, Hz for A and Q.
struct TensorSpec {
    std::array<double, 3> principal_values{0.0, 0.0, 0.0};
    std::array<double, 3> euler_zyz{0.0, 0.0, 0.0};

    static TensorSpec isotropic(double value) { return {{value, value, value}, {0, 0, 0}}; }
};

// Crystal-frame tensor R diag(principal) R^T.
Mat3 rotate_tensor(const TensorSpec& spec);

// Rotation matrix of the z-y-z Euler convention.
Mat3 euler_zyz_matrix(const std::array<double, 3>& angles);

// Conjugate a crystal-frame tensor by a rotation about an axis: the
// subclass operation. angle = pi gives the C2-related partner.
Mat3 apply_subclass(const Mat3& tensor, const Vec3& axis, double angle);
Mat3 apply_subclass(const TensorSpec& spec, const Vec3& axis, double angle);

// One electron spin S coupled to one nuclear spin I on a single site
// subclass. A and Q principal values are couplings divided by h, in Hz.
struct SpinSystem {
    double S = 0.5;
    double I = 0.0;
    TensorSpec g = TensorSpec::isotropic(2.0);
    TensorSpec A;      // hyperfine, Hz
    TensorSpec Q;      // nuclear quadrupole, Hz
    double g_n = 0.0;  // nuclear g-factor
    std::string label;

    std::size_t electron_dim() const;
    std::size_t nuclear_dim() const;
    std::size_t hilbert_dim() const;
    void validate() const; // half-integer spins, dimension bounds
};

// Lab-frame view of a SpinSystem: tensors resolved to crystal-frame
// matrices so subclass conjugation can be applied uniformly.
struct LabTensors {
    double S = 0.5;
    double I = 0.0;
    Mat3 g = mat3_diag(2.0, 2.0, 2.0);
    Mat3 A = mat3_zero(); // Hz
    Mat3 Q = mat3_zero(); // Hz
    double g_n = 0.0;
    std::string label;
};

LabTensors lab_tensors(const SpinSystem& sys);
LabTensors apply_subclass(const LabTensors& t, const Vec3& axis, double angle);

struct SubclassRotation {
    Vec3 axis{0.0, 0.0, 1.0};
    double angle = 3.14159265358979323846;
};

// Multi-site crystal: each site contributes two subclasses related by the
// subclass rotation, sharing the site weight equally.
struct CrystalConfig {
    std::vector<SpinSystem> sites;
    std::vector<double> weights; // normalized on validate()
    SubclassRotation subclass;

    void validate(); // normalizes weights, rejects negatives / size mismatch
};

// Static field in the crystal frame (D1, D2, b axes).
struct FieldVector {
    double magnitude_t = 0.0; // tesla
    Vec3 direction{0.0, 0.0, 1.0};

    static FieldVector along(const Vec3& dir, double tesla);
    Vec3 vector_t() const { return magnitude_t * direction; }
    void validate() const;
};

} // namespace fqesr
