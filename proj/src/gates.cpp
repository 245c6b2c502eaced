#include "qmra/gates.hpp"

#include <cmath>
#include <numbers>

#include "qmra/angular_momentum.hpp"
#include "qmra/error.hpp"

namespace qmra {

namespace {

// S_z of one qubit in product order: down = -1/2, up = +1/2.
double sz_of(int index, int which) {
    const int bit = which == 1 ? (index >> 1) & 1 : index & 1;
    return bit ? 0.5 : -0.5;
}

void require_qubit(int which) {
    if (which != 1 && which != 2) {
        throw ShapeError("qubit index must be 1 or 2, got " + std::to_string(which));
    }
}

double sign_of(PhaseConvention c) { return c == PhaseConvention::schrodinger ? -1.0 : 1.0; }

} // namespace

UnitaryMatrix pair_coupling_unitary() {
    return UnitaryMatrix::checked(couple_pair_matrix(SpinLabel::half(), SpinLabel::half()).cast<Complex>());
}

UnitaryMatrix cnot_product() {
    ComplexMatrix c = ComplexMatrix::Zero(4, 4);
    c(0, 0) = 1;
    c(1, 1) = 1;
    c(2, 3) = 1;
    c(3, 2) = 1;
    return UnitaryMatrix::checked(std::move(c));
}

UnitaryMatrix to_multiplet(const UnitaryMatrix& op, const UnitaryMatrix& a) {
    if (op.dim() != a.dim()) {
        throw ShapeError("operator and basis change differ in dimension");
    }
    return UnitaryMatrix::checked(a.matrix().inverse() * op.matrix() * a.matrix());
}

UnitaryMatrix in_basis(const UnitaryMatrix& product_op, BasisTag basis) {
    if (basis == BasisTag::product) return product_op;
    return to_multiplet(product_op, pair_coupling_unitary());
}

UnitaryMatrix single_spin_z_rotation(int which, double angle) {
    require_qubit(which);
    ComplexMatrix r = ComplexMatrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) r(i, i) = std::polar(1.0, angle * sz_of(i, which));
    return UnitaryMatrix::checked(std::move(r));
}

UnitaryMatrix hadamard(int which) {
    require_qubit(which);
    const double s = 1.0 / std::numbers::sqrt2;
    Eigen::Matrix2cd h;
    h << s, s, s, -s;
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    const Eigen::Matrix2cd& first = which == 1 ? h : id;
    const Eigen::Matrix2cd& second = which == 1 ? id : h;
    ComplexMatrix out(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = first(i, j) * second;
    }
    return UnitaryMatrix::checked(std::move(out));
}

UnitaryMatrix swap_gate() {
    ComplexMatrix s = ComplexMatrix::Zero(4, 4);
    s(0, 0) = 1;
    s(1, 2) = 1;
    s(2, 1) = 1;
    s(3, 3) = 1;
    return UnitaryMatrix::checked(std::move(s));
}

UnitaryMatrix sqrt_swap_gate(PhaseConvention convention) {
    // S1.S2 = swap/2 - I/4 and swap^2 = I, hence
    // exp(i theta S1.S2) = e^(-i theta/4) [cos(theta/2) I + i sin(theta/2) swap].
    const double theta = sign_of(convention) * std::numbers::pi / 2;
    const Complex global = std::polar(1.0, -theta / 4);
    const ComplexMatrix m = global * (std::cos(theta / 2) * ComplexMatrix::Identity(4, 4) +
                                      Complex(0.0, std::sin(theta / 2)) * swap_gate().matrix());
    return UnitaryMatrix::checked(m);
}

UnitaryMatrix xor_sequence(PhaseConvention convention) {
    const double pi = std::numbers::pi;
    const UnitaryMatrix root = sqrt_swap_gate(convention);
    return single_spin_z_rotation(1, pi / 2) * single_spin_z_rotation(2, -pi / 2) * root *
           single_spin_z_rotation(1, pi) * root;
}

UnitaryMatrix controlled_phase_flip() {
    ComplexMatrix z = ComplexMatrix::Identity(4, 4);
    z(3, 3) = -1;
    return UnitaryMatrix::checked(std::move(z));
}

double gate_fidelity(const UnitaryMatrix& u, const UnitaryMatrix& v) {
    if (u.dim() != v.dim()) {
        throw ShapeError("gate fidelity needs equal dimensions");
    }
    return std::abs((u.matrix().adjoint() * v.matrix()).trace()) / static_cast<double>(u.dim());
}

} // namespace qmra
