#include "qmra/quantum_dot.hpp"

#include <cmath>
#include <numbers>

#include "qmra/constants.hpp"
#include "qmra/error.hpp"

namespace qmra {

namespace {

constexpr double bessel_series_limit = 15.0;
constexpr double bessel_max_argument = 700.0;

long double i0_series(long double x) {
    const long double q = x * x / 4;
    long double term = 1;
    long double sum = 1;
    for (int k = 1; k < 500; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (term < sum * 1e-21L) break;
    }
    return sum;
}

// e^x / sqrt(2 pi x) * sum_k ((2k-1)!!)^2 / (k! (8x)^k), truncated at the
// smallest term.
long double i0_asymptotic(long double x) {
    long double term = 1;
    long double sum = 1;
    for (int k = 1; k < 200; ++k) {
        const long double next = term * (2.0L * k - 1) * (2.0L * k - 1) / (8.0L * k * x);
        if (std::fabs(next) >= std::fabs(term)) break;
        term = next;
        sum += term;
        if (term < sum * 1e-21L) break;
    }
    return std::exp(x) / std::sqrt(2 * std::numbers::pi_v<long double> * x) * sum;
}

} // namespace

void DotParameters::validate() const {
    if (!(hbar_omega0_meV > 0.0)) throw DomainError("hbar omega_0 must be positive");
    if (!(mass_ratio > 0.0)) throw DomainError("effective mass ratio must be positive");
    if (!(epsilon >= 1.0)) throw DomainError("dielectric constant must be at least 1");
    if (!(d > 0.0)) throw DomainError("half-distance d must be positive");
    if (!std::isfinite(g) || !std::isfinite(field_T) || !std::isfinite(hbar_omega0_meV) ||
        !std::isfinite(mass_ratio) || !std::isfinite(epsilon) || !std::isfinite(d)) {
        throw DomainError("dot parameters must be finite");
    }
}

double bohr_radius(const DotParameters& p) {
    p.validate();
    const double mc2 = p.mass_ratio * constants::electron_rest_energy_meV;
    return constants::hbar_c_meV_nm / std::sqrt(mc2 * p.hbar_omega0_meV);
}

double larmor_energy(const DotParameters& p) {
    p.validate();
    // hbar e B / (2 m) = mu_B B m_e / m
    return constants::bohr_magneton_meV_per_T * p.field_T / p.mass_ratio;
}

double dimensionless_field(const DotParameters& p) {
    if (p.field_T < 0.0) throw DomainError("magnetic field must be non-negative");
    const double ratio = larmor_energy(p) / p.hbar_omega0_meV;
    return std::sqrt(1.0 + ratio * ratio);
}

double coulomb_parameter(const DotParameters& p) {
    const double a_b = bohr_radius(p);
    return std::sqrt(std::numbers::pi / 2) * (constants::coulomb_meV_nm / (p.epsilon * a_b)) /
           p.hbar_omega0_meV;
}

double bessel_i0(double x) {
    if (!(x >= 0.0) || x > bessel_max_argument) {
        throw DomainError("I0 argument must lie in [0, 700]");
    }
    const long double v = x < bessel_series_limit ? i0_series(x) : i0_asymptotic(x);
    return static_cast<double>(v);
}

double exchange_coupling(double b, double d, double c) {
    if (!(b >= 1.0) || !std::isfinite(b)) throw DomainError("dimensionless field b must be >= 1");
    if (!(d > 0.0) || !std::isfinite(d)) throw DomainError("half-distance d must be positive");
    if (!std::isfinite(c)) throw DomainError("Coulomb parameter must be finite");

    const double d2 = d * d;
    const double sinh_arg = 2.0 * d2 * (2.0 * b - 1.0 / b);
    if (!(sinh_arg > 0.0)) throw DomainError("sinh argument must be positive");

    const double shifted = d2 * (b - 1.0 / b);
    const double coulomb = c * std::sqrt(b) *
                           (std::exp(-b * d2) * bessel_i0(b * d2) - std::exp(shifted) * bessel_i0(shifted));
    const double confinement = 3.0 / (4.0 * b) * (1.0 + b * d2);
    return (coulomb + confinement) / std::sinh(sinh_arg);
}

ExchangeResult exchange_for(const DotParameters& p, const double* c_override) {
    const double b = dimensionless_field(p);
    const double c = c_override ? *c_override : coulomb_parameter(p);
    return {b, c, p.hbar_omega0_meV * exchange_coupling(b, p.d, c)};
}

double confinement_potential(double x_nm, double y_nm, const DotParameters& p, double bias_V_per_nm) {
    const double a_b = bohr_radius(p);
    const double a = p.d * a_b;
    // m omega_0^2 = hbar omega_0 / a_B^2
    const double stiffness = p.hbar_omega0_meV / (a_b * a_b);
    const double well = (x_nm * x_nm - a * a) * (x_nm * x_nm - a * a) / (4.0 * a * a) + y_nm * y_nm;
    return 0.5 * stiffness * well + 1000.0 * x_nm * bias_V_per_nm;
}

PhysicalEstimates physical_estimates(const DotParameters& p) {
    const double a_b = bohr_radius(p);
    const double mc2 = p.mass_ratio * constants::electron_rest_energy_meV;
    // (mu_0 / 4 pi) mu_B^2 = (e^2 / 4 pi eps_0) (hbar c / (2 m_e c^2))^2
    const double half_compton = constants::hbar_c_meV_nm / (2.0 * constants::electron_rest_energy_meV);
    const double dipole_scale = constants::coulomb_meV_nm * half_compton * half_compton;
    return {a_b, p.hbar_omega0_meV / (2.0 * mc2), p.g * p.g * dipole_scale / (a_b * a_b * a_b)};
}

} // namespace qmra
