#pragma once

#include <vector>

#include "qmra/constants.hpp"
#include "qmra/gates.hpp"
#include "qmra/linalg.hpp"

namespace qmra {

/// Hermitian operator on two spin-1/2, energies in meV (times in ns,
/// hbar = 0.6582119 meV ps).
class SpinPairOperator {
public:
    /// Throws ShapeError unless 4x4 and Hermitian to 1e-12.
    explicit SpinPairOperator(ComplexMatrix m);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Vector4d eigenvalues() const;

private:
    ComplexMatrix m_;
};

enum class Axis { x, y, z };

/// Spin-1/2 component S_axis of qubit 1 or 2 on the pair space.
ComplexMatrix spin_component(int which, Axis axis);

/// S1.S2 (dimensionless).
ComplexMatrix spin_dot_product();

/// (S1 + S2)^2 (dimensionless).
ComplexMatrix total_spin_squared();

/// J S1.S2.
SpinPairOperator heisenberg_hamiltonian(double j_meV);

/// (J/2)(S^2 - 3/2), algebraically equal to `heisenberg_hamiltonian`.
SpinPairOperator heisenberg_total_spin_form(double j_meV);

/// g mu_B B (S1z + S2z) with B along z in tesla.
SpinPairOperator zeeman_hamiltonian(double field_T, double g_factor);

/// Exchange coupling J(t) sampled at uniform times over [0, duration].
class PulseProfile {
public:
    /// Throws DomainError for duration <= 0, fewer than two samples or
    /// non-finite entries.
    PulseProfile(std::vector<double> j_meV, double duration_ns);

    static PulseProfile constant(double j_meV, double duration_ns);

    double duration_ns() const noexcept { return duration_; }
    const std::vector<double>& samples() const noexcept { return samples_; }
    double time_of(std::size_t i) const;

    /// Linear interpolation between samples.
    double value_at(double t_ns) const;

    /// Trapezoid integral of J in meV ns.
    double integral_meV_ns() const;
    /// Dimensionless pulse area, integral / hbar.
    double area() const { return integral_meV_ns() / constants::hbar_meV_ns; }

private:
    std::vector<double> samples_;
    double duration_;
};

/// exp(-/+ i H t / hbar) for a time-independent Hermitian H.
UnitaryMatrix evolve_constant(const SpinPairOperator& h, double t_ns,
                              PhaseConvention convention = PhaseConvention::schrodinger);

/// Midpoint-sampled piecewise-constant product of step exponentials, later
/// steps applied on the left. Second order; exact for constant J. Throws
/// DomainError for steps < 1.
UnitaryMatrix evolve_pulse(const PulseProfile& profile, int steps,
                           PhaseConvention convention = PhaseConvention::schrodinger);

/// exp(-/+ i area S1.S2), the exact result for any pulse of that area.
UnitaryMatrix exchange_closed_form(double area,
                                   PhaseConvention convention = PhaseConvention::schrodinger);

/// Constant pulse of height j0 lasting hbar * area / j0. Throws DomainError
/// when j0 = 0 or the duration is not positive.
PulseProfile pulse_for_area(double area, double j0_meV);

} // namespace qmra
