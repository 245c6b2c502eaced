#pragma once

namespace qmra {

/// GaAs double-dot parameters. Defaults are the standard GaAs set:
/// g = -0.44, hbar omega_0 = 3 meV, m = 0.067 m_e, epsilon = 13.1.
struct DotParameters {
    double g = -0.44;
    double hbar_omega0_meV = 3.0;
    double mass_ratio = 0.067;
    double epsilon = 13.1;
    double d = 0.7;      // half interdot distance in units of the Bohr radius
    double field_T = 0.0;

    /// Throws DomainError when an invariant is violated.
    void validate() const;
};

/// sqrt(hbar / (m omega_0)) in nm.
double bohr_radius(const DotParameters& p);

/// b = sqrt(1 + (omega_L / omega_0)^2) with the Larmor frequency
/// omega_L = e B / (2 m).
double dimensionless_field(const DotParameters& p);

/// Larmor energy hbar e B / (2 m) in meV.
double larmor_energy(const DotParameters& p);

/// Coulomb strength c = sqrt(pi/2) (e^2 / (epsilon a_B)) / (hbar omega_0).
double coulomb_parameter(const DotParameters& p);

/// Exchange coupling in units of hbar omega_0:
///   J = [c sqrt(b) (e^(-b d^2) I0(b d^2) - e^(d^2 (b - 1/b)) I0(d^2 (b - 1/b)))
///        + 3/(4b) (1 + b d^2)] / sinh(2 d^2 (2b - 1/b))
/// Throws DomainError for b < 1 or d <= 0.
double exchange_coupling(double b, double d, double c);

struct ExchangeResult {
    double b;
    double c;
    double j_meV;
};

/// J at the field and half-distance stored in `p`, in meV. The Coulomb
/// parameter is derived from `p` unless `c_override` is given.
ExchangeResult exchange_for(const DotParameters& p, const double* c_override = nullptr);

/// Modified Bessel function I0. Power series below x = 15, asymptotic
/// expansion above. Throws DomainError outside 0 <= x <= 700.
double bessel_i0(double x);

/// Double-well confinement (m omega_0^2 / 2)[(x^2 - a^2)^2 / (4 a^2) + y^2]
/// plus the bias e x E, with a = d a_B. Positions in nm, bias in V/nm,
/// result in meV.
double confinement_potential(double x_nm, double y_nm, const DotParameters& p, double bias_V_per_nm);

struct PhysicalEstimates {
    double bohr_radius_nm;
    double spin_orbit_ratio; // hbar omega_0 / (2 m c^2)
    double dipole_meV;       // (mu_0 / 4 pi) (g mu_B)^2 / a_B^3
};

PhysicalEstimates physical_estimates(const DotParameters& p);

} // namespace qmra
