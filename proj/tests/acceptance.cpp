// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qmra/angular_momentum.hpp"
#include "qmra/cli.hpp"
#include "qmra/dynamics.hpp"
#include "qmra/gates.hpp"
#include "qmra/hierarchy.hpp"
#include "qmra/quantum_dot.hpp"
#include "qmra/wavelet.hpp"

using namespace qmra;

namespace {

const double pi = std::acos(-1.0);
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << v;
    return os.str();
}

Eigen::Index rank_of(const RealMatrix& p) {
    Eigen::SelfAdjointEigenSolver<RealMatrix> eig(p);
    return (eig.eigenvalues().array() > 0.5).count();
}

Outcome coupling_matrix_fixture() {
    RealMatrix a(4, 4);
    a << 0, 1, 0, 0, -inv_sqrt2, 0, inv_sqrt2, 0, inv_sqrt2, 0, inv_sqrt2, 0, 0, 0, 0, 1;
    const double err = (couple_pair_matrix(SpinLabel(1), SpinLabel(1)) - a).cwiseAbs().maxCoeff();
    return {err < 1e-12, "max entry error " + fmt(err)};
}

Outcome cnot_fixture() {
    ComplexMatrix f(4, 4);
    f << 0.5, 0, -0.5, inv_sqrt2, 0, 1, 0, 0, -0.5, 0, 0.5, inv_sqrt2, inv_sqrt2, 0, inv_sqrt2, 0;
    const auto got = to_multiplet(cnot_product(), pair_coupling_unitary());
    const double err = max_abs_diff(got.matrix(), f);
    return {err < 1e-12, "max entry error " + fmt(err)};
}

Outcome ladder_bookkeeping() {
    const auto d2 = ladder_dimensions(2);
    bool ok = d2.approximation.front() == 16 && d2.detail == std::vector<BigInt>{7, 4} && d2.approximation.back() == 5;
    int checked = 0;
    for (int m = 1; m <= 3; ++m) {
        const auto tree = build_coupling_tree(1 << m);
        const auto dims = ladder_dimensions(m);
        for (int j = 0; j <= m; ++j) {
            ok &= rank_of(approximation_projector(tree, j)) == dims.approximation[static_cast<std::size_t>(j)];
            ++checked;
        }
        for (int j = 1; j <= m; ++j) {
            ok &= rank_of(detail_projector(tree, j)) == dims.detail[static_cast<std::size_t>(j - 1)];
            ++checked;
        }
    }
    return {ok, "16 = 7 + 4 + 5; " + std::to_string(checked) + " projector ranks"};
}

Outcome multiplet_completeness() {
    bool ok = true;
    for (int n : {2, 4, 8, 12}) ok &= content_dimension(register_content(n)) == (BigInt(1) << n);
    for (int n : {2, 4, 8}) ok &= content_dimension(build_coupling_tree(n).root_content()) == (BigInt(1) << n);
    double worst = 0.0;
    for (int n : {1, 2, 4, 8}) worst = std::max(worst, unitarity_error(hierarchic_transform(build_coupling_tree(n)).matrix()));
    ok &= worst < 1e-10;
    return {ok, "dimension sums exact; unitarity error " + fmt(worst)};
}

Outcome swap_pulse() {
    const double f1 = gate_fidelity(evolve_pulse(pulse_for_area(pi, 1.0), 1024), swap_gate());
    const double f2 = gate_fidelity(evolve_pulse(pulse_for_area(pi / 2.0, 1.0), 1024), sqrt_swap_gate());
    const double e = std::max(std::abs(1.0 - f1), std::abs(1.0 - f2));
    return {e < 1e-8, "1 - fidelity " + fmt(e)};
}

Outcome xor_sequence_flip() {
    const auto x = xor_sequence();
    const double e1 = std::abs(1.0 - gate_fidelity(x, controlled_phase_flip()));
    const double e2 = std::abs(1.0 - gate_fidelity(hadamard(2) * x * hadamard(2), cnot_product()));
    return {e1 < 1e-10 && e2 < 1e-10, "phase flip " + fmt(e1) + ", CNOT after target Hadamards " + fmt(e2)};
}

Outcome singlet_triplet() {
    double worst = 0.0;
    for (double j : {1.0, -0.4, 2.7}) {
        Eigen::Vector4d ev = heisenberg_hamiltonian(j).eigenvalues();
        std::sort(ev.data(), ev.data() + 4);
        Eigen::Vector4d want(0.25 * j, 0.25 * j, 0.25 * j, -0.75 * j);
        std::sort(want.data(), want.data() + 4);
        worst = std::max(worst, (ev - want).cwiseAbs().maxCoeff());
        worst = std::max(worst, max_abs_diff(heisenberg_hamiltonian(j).matrix(), heisenberg_total_spin_form(j).matrix()));
    }
    return {worst < 1e-12, "max error " + fmt(worst)};
}

Outcome gaas_numbers() {
    const auto e = physical_estimates(DotParameters{});
    const bool ok = std::abs(e.bohr_radius_nm - 20.0) / 20.0 < 0.05 && e.spin_orbit_ratio >= 1e-8 &&
                    e.spin_orbit_ratio <= 1e-7 && e.dipole_meV >= 5e-10 && e.dipole_meV <= 5e-9;
    std::ostringstream os;
    os << "a_B " << e.bohr_radius_nm << " nm, spin-orbit " << e.spin_orbit_ratio << ", dipole " << e.dipole_meV << " meV";
    return {ok, os.str()};
}

Outcome exchange_sweep() {
    DotParameters p;
    p.d = 0.7;
    double lo = 1e300, hi = -1e300, max_abs = 0.0;
    for (int i = 0; i <= 200; ++i) {
        p.field_T = 0.01 * i;
        const double j = exchange_for(p).j_meV;
        lo = std::min(lo, j);
        hi = std::max(hi, j);
        max_abs = std::max(max_abs, std::abs(j));
    }
    const double golden = 0.25458704955150090581932419462137;
    const double rel = std::abs(exchange_coupling(1.0, 0.7, 2.36) - golden) / golden;
    const bool ok = max_abs >= 0.1 && max_abs <= 3.0 && lo < 0.0 && hi > 0.0 && rel < 1e-12;
    std::ostringstream os;
    os << "J in [" << lo << ", " << hi << "] meV, golden rel error " << fmt(rel);
    return {ok, os.str()};
}

Outcome bessel_oracle() {
    double worst = 0.0;
    for (double x : {0.1, 1.0, 2.0, 5.0, 10.0, 50.0}) {
        const double ref = static_cast<double>(oracle::bessel_i0_series(x));
        worst = std::max(worst, std::abs(bessel_i0(x) - ref) / ref);
    }
    return {worst < 1e-12, "max relative error " + fmt(worst)};
}

Outcome haar_round_trip() {
    std::mt19937 rng(1994);
    std::normal_distribution<double> dist;
    double worst_rt = 0.0, worst_energy = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 1 + trial % 16;
        std::vector<double> s(std::size_t{1} << m);
        for (auto& v : s) v = dist(rng);
        const auto p = pyramid_forward(s, m);
        const auto back = pyramid_inverse(p);
        for (std::size_t i = 0; i < s.size(); ++i) worst_rt = std::max(worst_rt, std::abs(back[i] - s[i]));
        const auto sq = [](const std::vector<double>& v) { return std::inner_product(v.begin(), v.end(), v.begin(), 0.0); };
        double e = sq(p.approximation);
        for (const auto& d : p.details) e += sq(d);
        worst_energy = std::max(worst_energy, std::abs(e - sq(s)) / sq(s));
    }
    const std::vector<double> pair{3.0, 1.0};
    const auto [a, d] = haar_step(pair);
    const bool hand = std::abs(a[0] - 2.0 * std::sqrt(2.0)) < 1e-15 && std::abs(d[0] - std::sqrt(2.0)) < 1e-15;
    return {worst_rt < 1e-12 && worst_energy < 1e-12 && hand,
            "round trip " + fmt(worst_rt) + ", Parseval " + fmt(worst_energy)};
}

Outcome state_analysis() {
    const auto tree = build_coupling_tree(4);
    RegisterState up = RegisterState::Zero(16);
    up(15) = 1.0;
    const double e1 = std::abs(analyze_state(up, tree).approximation - 1.0);
    const Eigen::Vector4cd singlet(0, -inv_sqrt2, inv_sqrt2, 0);
    RegisterState ss(16);
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) ss(4 * i + j) = singlet(i) * singlet(j);
    }
    const double e2 = std::abs(analyze_state(ss, tree).detail[0] - 1.0);
    return {e1 < 1e-12 && e2 < 1e-12, "V2 weight error " + fmt(e1) + ", W1 weight error " + fmt(e2)};
}

Outcome cli_determinism() {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "qmra_acceptance";
    fs::create_directories(dir);
    std::ofstream(dir / "state.json") << "[[0.5,0],[0,0.5],[0.5,0],[0,-0.5]]";
    std::ofstream(dir / "signal.csv") << "value\n3\n1\n4\n1\n5\n9\n2\n6\n";
    const std::string state = (dir / "state.json").string(), signal = (dir / "signal.csv").string();
    const std::vector<std::vector<std::string>> commands{
        {"decompose", "--qubits", "4"},
        {"ladder", "--levels", "2"},
        {"transform", "--qubits", "2", "--in", state},
        {"transform", "--qubits", "2", "--in", state, "--direction", "inverse"},
        {"analyze", "--qubits", "2", "--in", state},
        {"gate", "--name", "cnot", "--basis", "multiplet"},
        {"gate", "--name", "xor"},
        {"pulse", "--j0", "1", "--area", "pi", "--steps", "1024"},
        {"jsweep", "--bmin", "0", "--bmax", "2", "--points", "201", "--d", "0.7"},
        {"haar", "--in", signal, "--levels", "3"},
        {"estimates"},
        {"constants"},
    };
    bool ok = true;
    for (const auto& c : commands) {
        std::ostringstream o1, o2, e1, e2;
        const int r1 = cli::dispatch(c, o1, e1), r2 = cli::dispatch(c, o2, e2);
        ok &= r1 == 0 && r2 == 0 && o1.str() == o2.str() && !o1.str().empty();
    }
    fs::remove_all(dir);
    return {ok, std::to_string(commands.size()) + " invocations repeated"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"coupling matrix fixture", coupling_matrix_fixture},
        {"multiplet-basis CNOT fixture", cnot_fixture},
        {"ladder bookkeeping", ladder_bookkeeping},
        {"multiplet completeness", multiplet_completeness},
        {"swap pulse", swap_pulse},
        {"XOR sequence", xor_sequence_flip},
        {"singlet-triplet split", singlet_triplet},
        {"GaAs numbers", gaas_numbers},
        {"exchange sweep", exchange_sweep},
        {"Bessel oracle", bessel_oracle},
        {"Haar round trip", haar_round_trip},
        {"state analysis", state_analysis},
        {"CLI determinism", cli_determinism},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, check] : criteria) {
        Outcome r;
        try {
            r = check();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << index++ << ". " << name << ": " << r.detail << '\n';
        if (!r.pass) ++failures;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
