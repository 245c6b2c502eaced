#include "qmra/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "qmra/error.hpp"

namespace qmra {

namespace {

Eigen::Matrix2cd pauli_half(Axis axis) {
    Eigen::Matrix2cd s;
    switch (axis) {
    case Axis::x: s << 0, 0.5, 0.5, 0; break;
    // Row/column 0 is |down>.
    case Axis::y: s << 0, Complex(0, 0.5), Complex(0, -0.5), 0; break;
    case Axis::z: s << -0.5, 0, 0, 0.5; break;
    }
    return s;
}

ComplexMatrix kron2(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
    ComplexMatrix out(4, 4);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) out.block(2 * i, 2 * j, 2, 2) = a(i, j) * b;
    }
    return out;
}

double sign_of(PhaseConvention c) { return c == PhaseConvention::schrodinger ? -1.0 : 1.0; }

// exp(i * phase_per_energy * H) through the eigendecomposition of H.
ComplexMatrix hermitian_exp(const ComplexMatrix& h, double phase_per_energy) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
    const Eigen::VectorXd& w = eig.eigenvalues();
    ComplexVector phases(w.size());
    for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::polar(1.0, phase_per_energy * w(i));
    return eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
}

} // namespace

SpinPairOperator::SpinPairOperator(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != 4 || m_.cols() != 4) {
        throw ShapeError("spin pair operator must be 4x4");
    }
    if (!m_.allFinite()) {
        throw DomainError("spin pair operator has non-finite entries");
    }
    const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
        throw ShapeError("spin pair operator is not Hermitian");
    }
}

Eigen::Vector4d SpinPairOperator::eigenvalues() const {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(m_, Eigen::EigenvaluesOnly);
    return eig.eigenvalues();
}

ComplexMatrix spin_component(int which, Axis axis) {
    if (which != 1 && which != 2) {
        throw ShapeError("qubit index must be 1 or 2, got " + std::to_string(which));
    }
    const Eigen::Matrix2cd s = pauli_half(axis);
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    return which == 1 ? kron2(s, id) : kron2(id, s);
}

ComplexMatrix spin_dot_product() {
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (Axis a : {Axis::x, Axis::y, Axis::z}) out += spin_component(1, a) * spin_component(2, a);
    return out;
}

ComplexMatrix total_spin_squared() {
    ComplexMatrix out = ComplexMatrix::Zero(4, 4);
    for (Axis a : {Axis::x, Axis::y, Axis::z}) {
        const ComplexMatrix s = spin_component(1, a) + spin_component(2, a);
        out += s * s;
    }
    return out;
}

SpinPairOperator heisenberg_hamiltonian(double j_meV) {
    if (!std::isfinite(j_meV)) throw DomainError("exchange coupling must be finite");
    return SpinPairOperator(j_meV * spin_dot_product());
}

SpinPairOperator heisenberg_total_spin_form(double j_meV) {
    if (!std::isfinite(j_meV)) throw DomainError("exchange coupling must be finite");
    return SpinPairOperator(0.5 * j_meV * (total_spin_squared() - 1.5 * ComplexMatrix::Identity(4, 4)));
}

SpinPairOperator zeeman_hamiltonian(double field_T, double g_factor) {
    if (!std::isfinite(field_T) || !std::isfinite(g_factor)) {
        throw DomainError("Zeeman parameters must be finite");
    }
    const double scale = g_factor * constants::bohr_magneton_meV_per_T * field_T;
    return SpinPairOperator(scale * (spin_component(1, Axis::z) + spin_component(2, Axis::z)));
}

PulseProfile::PulseProfile(std::vector<double> j_meV, double duration_ns)
    : samples_(std::move(j_meV)), duration_(duration_ns) {
    if (!(duration_ > 0.0) || !std::isfinite(duration_)) {
        throw DomainError("pulse duration must be positive and finite");
    }
    if (samples_.size() < 2) {
        throw DomainError("pulse profile needs at least two samples");
    }
    if (!std::all_of(samples_.begin(), samples_.end(), [](double v) { return std::isfinite(v); })) {
        throw DomainError("pulse profile has non-finite samples");
    }
}

PulseProfile PulseProfile::constant(double j_meV, double duration_ns) {
    return PulseProfile({j_meV, j_meV}, duration_ns);
}

double PulseProfile::time_of(std::size_t i) const {
    return duration_ * static_cast<double>(i) / static_cast<double>(samples_.size() - 1);
}

double PulseProfile::value_at(double t_ns) const {
    const double intervals = static_cast<double>(samples_.size() - 1);
    const double x = std::clamp(t_ns / duration_, 0.0, 1.0) * intervals;
    const auto i = std::min(static_cast<std::size_t>(x), samples_.size() - 2);
    const double frac = x - static_cast<double>(i);
    return samples_[i] + frac * (samples_[i + 1] - samples_[i]);
}

double PulseProfile::integral_meV_ns() const {
    const double h = duration_ / static_cast<double>(samples_.size() - 1);
    double sum = 0.5 * (samples_.front() + samples_.back());
    for (std::size_t i = 1; i + 1 < samples_.size(); ++i) sum += samples_[i];
    return sum * h;
}

UnitaryMatrix evolve_constant(const SpinPairOperator& h, double t_ns, PhaseConvention convention) {
    return UnitaryMatrix::checked(
        hermitian_exp(h.matrix(), sign_of(convention) * t_ns / constants::hbar_meV_ns));
}

UnitaryMatrix evolve_pulse(const PulseProfile& profile, int steps, PhaseConvention convention) {
    if (steps < 1) throw DomainError("pulse evolution needs at least one step");
    const double dt = profile.duration_ns() / steps;
    const double phase = sign_of(convention) * dt / constants::hbar_meV_ns;
    const ComplexMatrix dot = spin_dot_product();

    // H(t) = J(t) S1.S2 shares one eigenbasis at all times, but each step is
    // still exponentiated on its own so the integrator stays general.
    ComplexMatrix u = ComplexMatrix::Identity(4, 4);
    for (int k = 0; k < steps; ++k) {
        const double j = profile.value_at((k + 0.5) * dt);
        u = hermitian_exp(j * dot, phase) * u;
    }
    return UnitaryMatrix::checked(std::move(u));
}

UnitaryMatrix exchange_closed_form(double area, PhaseConvention convention) {
    return UnitaryMatrix::checked(hermitian_exp(spin_dot_product(), sign_of(convention) * area));
}

PulseProfile pulse_for_area(double area, double j0_meV) {
    if (j0_meV == 0.0 || !std::isfinite(j0_meV)) {
        throw DomainError("degenerate pulse: J0 must be finite and non-zero");
    }
    const double tau = constants::hbar_meV_ns * area / j0_meV;
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw DomainError("pulse of area " + std::to_string(area) + " at J0 = " + std::to_string(j0_meV) +
                          " meV has no positive duration");
    }
    return PulseProfile::constant(j0_meV, tau);
}

} // namespace qmra
