#pragma once

#include "qmra/linalg.hpp"

namespace qmra {

/// Two-qubit bases. Product order is (dd, du, ud, uu) with the first (control)
/// qubit most significant; multiplet order is (|0,0>, |1,-1>, |1,0>, |1,1>).
enum class BasisTag { product, multiplet };

/// Sign of the exponent in exchange-generated evolution. `schrodinger` is
/// exp(-i H t / hbar); `as_printed` flips it to exp(+i H t / hbar).
enum class PhaseConvention { schrodinger, as_printed };

/// Product-to-multiplet matrix for two spin-1/2, as a unitary.
UnitaryMatrix pair_coupling_unitary();

/// CNOT with the first qubit as control, product basis.
UnitaryMatrix cnot_product();

/// A^-1 op A. Throws ShapeError on mismatched dimensions.
UnitaryMatrix to_multiplet(const UnitaryMatrix& op, const UnitaryMatrix& a);

/// Convenience: op expressed in the requested two-qubit basis.
UnitaryMatrix in_basis(const UnitaryMatrix& product_op, BasisTag basis);

/// exp(i * angle * S_z) acting on qubit 1 or 2 of a pair. Throws ShapeError
/// for any other qubit index.
UnitaryMatrix single_spin_z_rotation(int which, double angle);

/// Hadamard on qubit 1 or 2 of a pair.
UnitaryMatrix hadamard(int which);

UnitaryMatrix swap_gate();

/// exp(-/+ i (pi/2) S1.S2): triplet phase e^(-i pi/8), singlet e^(3i pi/8)
/// under the default convention. Squares to swap up to a global phase.
UnitaryMatrix sqrt_swap_gate(PhaseConvention convention = PhaseConvention::schrodinger);

/// Exchange-based sequence
///   Rz1(pi/2) Rz2(-pi/2) sqrt_swap Rz1(pi) sqrt_swap,
/// applied right to left. Under the default convention this is the
/// conditional phase flip on |uu>, which becomes CNOT once the target is
/// conjugated by Hadamards.
UnitaryMatrix xor_sequence(PhaseConvention convention = PhaseConvention::schrodinger);

/// Conditional phase flip diag(1, 1, 1, -1) in product order, i.e. -1 on |uu>.
UnitaryMatrix controlled_phase_flip();

/// |tr(U^dagger V)| / dim, which is 1 iff U = e^(i phi) V.
double gate_fidelity(const UnitaryMatrix& u, const UnitaryMatrix& v);

} // namespace qmra
