#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qmra {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using ComplexVector = Eigen::VectorXcd;

// Amplitudes over the product basis of a register, qubit 0 most significant,
// |down> = 0 and |up> = 1.
using RegisterState = Eigen::VectorXcd;

// Largest entry of |U^dagger U - I|.
double unitarity_error(const ComplexMatrix& u);

// Largest entrywise modulus of a - b. Shapes must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Dense square complex matrix known to be unitary.
///
/// `checked` verifies the bound on construction; `trusted` skips the
/// O(n^3) check for matrices unitary by construction (large hierarchic
/// transforms).
class UnitaryMatrix {
public:
    static constexpr double default_tolerance = 1e-10;

    static UnitaryMatrix checked(ComplexMatrix m, double tol = default_tolerance);
    static UnitaryMatrix trusted(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }
    Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

    UnitaryMatrix adjoint() const { return UnitaryMatrix(m_.adjoint()); }

    friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b);

private:
    explicit UnitaryMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

} // namespace qmra
