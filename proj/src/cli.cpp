#include "qmra/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qmra/constants.hpp"
#include "qmra/dynamics.hpp"
#include "qmra/error.hpp"
#include "qmra/gates.hpp"
#include "qmra/hierarchy.hpp"
#include "qmra/io.hpp"
#include "qmra/quantum_dot.hpp"
#include "qmra/wavelet.hpp"

namespace qmra::cli {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Writes to `path` when given, otherwise to `fallback`.
void emit(const std::string& text, const std::string& path, std::ostream& fallback) {
    if (path.empty()) {
        fallback << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + path);
    f << text;
}

PhaseConvention parse_sign(const std::string& s) {
    return s == "printed" ? PhaseConvention::as_printed : PhaseConvention::schrodinger;
}

std::string product_label(Eigen::Index index, int qubits) {
    std::string label;
    for (int q = qubits - 1; q >= 0; --q) label += ((index >> q) & 1) ? 'u' : 'd';
    return label;
}

void add_dot_flags(CLI::App* cmd, DotParameters& p) {
    cmd->add_option("--g", p.g, "Electron g-factor")->capture_default_str();
    cmd->add_option("--hw0", p.hbar_omega0_meV, "Confinement energy hbar omega_0 in meV")->capture_default_str();
    cmd->add_option("--mass-ratio", p.mass_ratio, "Effective mass m/m_e")->capture_default_str();
    cmd->add_option("--epsilon", p.epsilon, "Dielectric constant")->capture_default_str();
    cmd->add_option("--d", p.d, "Half interdot distance a/a_B")->capture_default_str();
}

struct Options {
    int qubits = 0;
    int levels = 0;
    bool sequential = false;
    std::string in;
    std::string out;
    std::string direction = "forward";
    std::string name;
    std::string basis = "product";
    std::string sign = "schrodinger";
    double angle = 0.0;
    double j0 = 1.0;
    std::string area = "pi";
    int steps = 1024;
    std::string profile;
    std::string write_profile;
    double bmin = 0.0;
    double bmax = 2.0;
    int points = 201;
    std::optional<double> c;
    bool inverse = false;
    DotParameters dot;
};

std::string run_decompose(const Options& o) {
    const SpinContent content =
        o.sequential ? register_content(o.qubits) : build_coupling_tree(o.qubits).root_content();
    std::ostringstream s;
    JsonWriter w(s);
    w.begin_object().key("content").begin_array();
    for (const auto& e : content) {
        w.begin_object().key("J").raw(format_half_integer(e.spin.twice())).key("mult").value(e.count).end_object();
    }
    w.end_array().key("check").value(content_dimension(content)).end_object();
    s << '\n';
    return s.str();
}

std::string run_ladder(const Options& o) {
    const auto dims = ladder_dimensions(o.levels);
    std::ostringstream s;
    JsonWriter w(s);
    w.begin_object().key("V0").value(dims.approximation.front()).key("W").begin_array();
    for (const auto& d : dims.detail) w.value(d);
    w.end_array().key("VM").value(dims.approximation.back()).end_object();
    s << '\n';
    return s.str();
}

std::string run_transform(const Options& o) {
    const auto tree = build_coupling_tree(o.qubits);
    const ComplexVector input = parse_amplitudes(read_file(o.in));
    const auto basis = hierarchic_basis(tree);
    if (input.size() != basis.columns.rows()) {
        throw ShapeError("input has " + std::to_string(input.size()) + " amplitudes, register needs " +
                         std::to_string(basis.columns.rows()));
    }
    const bool forward = o.direction == "forward";
    const ComplexVector output = forward ? ComplexVector(basis.columns.transpose().cast<Complex>() * input)
                                         : ComplexVector(basis.columns.cast<Complex>() * input);

    std::ostringstream s;
    JsonWriter w(s);
    w.begin_object().key("direction").value(o.direction);
    w.key("basis").value(forward ? "hierarchic" : "product");
    if (forward) {
        w.key("ordering").value(canonical_ordering_description);
        w.key("labels").begin_array();
        for (const auto& st : basis.states) {
            w.begin_object()
                .key("J")
                .raw(format_half_integer(st.terminal.twice_J()))
                .key("M")
                .raw(format_half_integer(st.terminal.twice_M()))
                .key("path")
                .begin_array();
            for (const auto& j : st.path) w.raw(format_half_integer(j.twice()));
            w.end_array().end_object();
        }
    } else {
        w.key("ordering").value("qubit 0 most significant, d = down, u = up");
        w.key("labels").begin_array();
        for (Eigen::Index i = 0; i < output.size(); ++i) w.value(product_label(i, tree.num_qubits()));
    }
    w.end_array();
    w.key("amplitudes").raw(serialize_amplitudes(output)).end_object();
    s << '\n';
    return s.str();
}

std::string run_analyze(const Options& o) {
    const auto tree = build_coupling_tree(o.qubits);
    const auto profile = analyze_state(parse_amplitudes(read_file(o.in)), tree);
    std::ostringstream s;
    JsonWriter w(s);
    w.begin_object().key("W").begin_array();
    for (double d : profile.detail) w.value(d);
    w.end_array().key("VM").value(profile.approximation).key("total").value(profile.total()).end_object();
    s << '\n';
    return s.str();
}

UnitaryMatrix named_gate(const Options& o) {
    const auto sign = parse_sign(o.sign);
    if (o.name == "cnot") return cnot_product();
    if (o.name == "swap") return swap_gate();
    if (o.name == "sqrt_swap") return sqrt_swap_gate(sign);
    if (o.name == "xor") return xor_sequence(sign);
    if (o.name == "cphase") return controlled_phase_flip();
    if (o.name == "rz1") return single_spin_z_rotation(1, o.angle);
    if (o.name == "rz2") return single_spin_z_rotation(2, o.angle);
    if (o.name == "hadamard1") return hadamard(1);
    if (o.name == "hadamard2") return hadamard(2);
    throw Error("unknown gate: " + o.name);
}

std::string run_gate(const Options& o) {
    const auto basis = o.basis == "multiplet" ? BasisTag::multiplet : BasisTag::product;
    const auto gate = in_basis(named_gate(o), basis);
    std::ostringstream s;
    JsonWriter w(s);
    w.begin_object().key("name").value(o.name).key("basis").value(o.basis);
    w.key("matrix").raw(serialize_matrix(gate.matrix())).end_object();
    s << '\n';
    return s.str();
}

std::string run_pulse(const Options& o) {
    const auto sign = parse_sign(o.sign);
    const PulseProfile profile = o.profile.empty()
                                     ? pulse_for_area(parse_area(o.area), o.j0)
                                     : [&] {
                                           std::istringstream in(read_file(o.profile));
                                           return read_pulse_csv(in);
                                       }();
    if (!o.write_profile.empty()) {
        std::ostringstream csv;
        write_pulse_csv(csv, profile);
        emit(csv.str(), o.write_profile, std::cout);
    }
    const auto u = evolve_pulse(profile, o.steps, sign);
    std::ostringstream s;
    JsonWriter w(s);
    w.begin_object();
    w.key("area").value(profile.area());
    w.key("tau_ns").value(profile.duration_ns());
    w.key("steps").value(o.steps);
    w.key("unitary").raw(serialize_matrix(u.matrix()));
    w.key("fidelity_vs_swap").value(gate_fidelity(u, swap_gate()));
    w.key("fidelity_vs_sqrt_swap").value(gate_fidelity(u, sqrt_swap_gate(sign)));
    w.end_object();
    s << '\n';
    return s.str();
}

std::string run_jsweep(const Options& o) {
    if (o.points < 1) throw DomainError("--points must be at least 1");
    if (o.bmin < 0.0 || o.bmax < o.bmin) throw DomainError("need 0 <= bmin <= bmax");
    std::ostringstream s;
    s << "B_tesla,b,J_meV\n";
    const double* c_override = o.c ? &*o.c : nullptr;
    for (int i = 0; i < o.points; ++i) {
        DotParameters p = o.dot;
        p.field_T = o.points == 1 ? o.bmin
                    : i == o.points - 1
                        ? o.bmax
                        : o.bmin + (o.bmax - o.bmin) * static_cast<double>(i) / (o.points - 1);
        const auto r = exchange_for(p, c_override);
        s << format_double(p.field_T) << ',' << format_double(r.b) << ',' << format_double(r.j_meV) << '\n';
    }
    return s.str();
}

std::string run_haar(const Options& o) {
    std::istringstream in(read_file(o.in));
    const auto values = read_values_csv(in);
    std::vector<double> result;
    if (o.inverse) {
        result = pyramid_inverse(unflatten(values, o.levels));
    } else {
        result = flatten(pyramid_forward(values, o.levels));
    }
    std::ostringstream s;
    write_values_csv(s, result);
    return s.str();
}

std::string run_estimates(const Options& o) {
    DotParameters p = o.dot;
    const auto est = physical_estimates(p);
    const auto exch = exchange_for(p, o.c ? &*o.c : nullptr);
    std::ostringstream s;
    JsonWriter w(s);
    w.begin_object();
    w.key("bohr_radius_nm").value(est.bohr_radius_nm);
    w.key("spin_orbit_ratio").value(est.spin_orbit_ratio);
    w.key("dipole_meV").value(est.dipole_meV);
    w.key("field_T").value(p.field_T);
    w.key("larmor_meV").value(larmor_energy(p));
    w.key("b").value(exch.b);
    w.key("c").value(exch.c);
    w.key("J_meV").value(exch.j_meV);
    w.end_object();
    s << '\n';
    return s.str();
}

std::string run_constants() {
    std::ostringstream s;
    JsonWriter w(s);
    w.begin_object();
    for (const auto& e : constants::table) {
        w.key(e.name).begin_object().key("value").value(e.value).key("unit").value(e.unit).end_object();
    }
    w.end_object();
    s << '\n';
    return s.str();
}

} // namespace

double parse_area(const std::string& text) {
    std::string t;
    std::remove_copy_if(text.begin(), text.end(), std::back_inserter(t), [](char ch) { return ch == ' '; });
    double denominator = 1.0;
    if (const auto slash = t.find('/'); slash != std::string::npos) {
        denominator = parse_double(t.substr(slash + 1));
        t = t.substr(0, slash);
        if (denominator == 0.0) throw DomainError("area denominator is zero");
    }
    double numerator = 0.0;
    if (t.size() >= 2 && t.compare(t.size() - 2, 2, "pi") == 0) {
        std::string coeff = t.substr(0, t.size() - 2);
        if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
        const double k = coeff.empty() ? 1.0 : coeff == "-" ? -1.0 : parse_double(coeff);
        numerator = k * std::numbers::pi;
    } else {
        numerator = parse_double(t);
    }
    return numerator / denominator;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hierarchic spin-register toolkit: multiplet bases, gates, exchange pulses, "
                 "quantum-dot exchange coupling and the Haar pyramid."};
    app.name("qmra");
    app.require_subcommand(1, 1);

    Options o;
    std::function<std::string()> action;

    auto* decompose = app.add_subcommand("decompose", "Multiplet content of the coupled register (JSON)");
    decompose->add_option("--qubits", o.qubits, "Register size (power of two)")->required();
    decompose->add_flag("--sequential", o.sequential, "Allow any register size by sequential coupling");
    decompose->add_option("--out", o.out, "Output file (default stdout)");
    decompose->callback([&] { action = [&] { return run_decompose(o); }; });

    auto* ladder = app.add_subcommand("ladder", "Dimensions of the V_j / W_j ladder (JSON)");
    ladder->add_option("--levels", o.levels, "Number of levels M, register of 2^M qubits")->required();
    ladder->add_option("--out", o.out, "Output file (default stdout)");
    ladder->callback([&] { action = [&] { return run_ladder(o); }; });

    auto* transform = app.add_subcommand("transform", "Product <-> hierarchic basis change (JSON)");
    transform->add_option("--qubits", o.qubits, "Register size (power of two)")->required();
    transform->add_option("--in", o.in, "JSON amplitudes")->required()->check(CLI::ExistingFile);
    transform->add_option("--direction", o.direction, "forward (product to hierarchic) or inverse")
        ->check(CLI::IsMember({"forward", "inverse"}))
        ->capture_default_str();
    transform->add_option("--out", o.out, "Output file (default stdout)");
    transform->callback([&] { action = [&] { return run_transform(o); }; });

    auto* analyze = app.add_subcommand("analyze", "Weights of a state on W_1 ... W_M and V_M (JSON)");
    analyze->add_option("--qubits", o.qubits, "Register size (power of two)")->required();
    analyze->add_option("--in", o.in, "JSON amplitudes in the product basis")->required()->check(CLI::ExistingFile);
    analyze->add_option("--out", o.out, "Output file (default stdout)");
    analyze->callback([&] { action = [&] { return run_analyze(o); }; });

    auto* gate = app.add_subcommand("gate", "Two-qubit gate matrix (JSON)");
    gate->add_option("--name", o.name, "Gate name")
        ->required()
        ->check(CLI::IsMember({"cnot", "swap", "sqrt_swap", "xor", "cphase", "rz1", "rz2", "hadamard1", "hadamard2"}));
    gate->add_option("--basis", o.basis, "product or multiplet")
        ->check(CLI::IsMember({"product", "multiplet"}))
        ->capture_default_str();
    gate->add_option("--angle", o.angle, "Rotation angle in radians for rz1/rz2")->capture_default_str();
    gate->add_option("--sign", o.sign, "Exponent sign: schrodinger (-i) or printed (+i)")
        ->check(CLI::IsMember({"schrodinger", "printed"}))
        ->capture_default_str();
    gate->add_option("--out", o.out, "Output file (default stdout)");
    gate->callback([&] { action = [&] { return run_gate(o); }; });

    auto* pulse = app.add_subcommand("pulse", "Evolve an exchange pulse (JSON)");
    auto* j0 = pulse->add_option("--j0", o.j0, "Constant coupling in meV")->capture_default_str();
    auto* area = pulse->add_option("--area", o.area, "Pulse area: pi, pi/2, 2pi or a number")->capture_default_str();
    pulse->add_option("--steps", o.steps, "Integrator steps")->capture_default_str()->check(CLI::PositiveNumber);
    pulse->add_option("--sign", o.sign, "Exponent sign: schrodinger (-i) or printed (+i)")
        ->check(CLI::IsMember({"schrodinger", "printed"}))
        ->capture_default_str();
    pulse->add_option("--profile", o.profile, "CSV pulse profile t_ns,J_meV")
        ->check(CLI::ExistingFile)
        ->excludes(j0)
        ->excludes(area);
    pulse->add_option("--write-profile", o.write_profile, "Write the evolved profile as CSV");
    pulse->add_option("--out", o.out, "Output file (default stdout)");
    pulse->callback([&] { action = [&] { return run_pulse(o); }; });

    auto* jsweep = app.add_subcommand("jsweep", "Exchange coupling versus magnetic field (CSV)");
    jsweep->add_option("--bmin", o.bmin, "Lowest field in tesla")->capture_default_str();
    jsweep->add_option("--bmax", o.bmax, "Highest field in tesla")->capture_default_str();
    jsweep->add_option("--points", o.points, "Number of field values")->capture_default_str();
    jsweep->add_option("--c", o.c, "Coulomb parameter (default derived from the dot)");
    add_dot_flags(jsweep, o.dot);
    jsweep->add_option("--out", o.out, "Output file (default stdout)");
    jsweep->callback([&] { action = [&] { return run_jsweep(o); }; });

    auto* haar = app.add_subcommand("haar", "Haar pyramid of a CSV signal (CSV)");
    haar->add_option("--in", o.in, "CSV, one value per line")->required()->check(CLI::ExistingFile);
    haar->add_option("--levels", o.levels, "Pyramid levels")->required();
    haar->add_flag("--inverse", o.inverse, "Reconstruct from coefficients s^L, d^L, ..., d^1");
    haar->add_option("--out", o.out, "Output file (default stdout)");
    haar->callback([&] { action = [&] { return run_haar(o); }; });

    auto* estimates = app.add_subcommand("estimates", "GaAs dot scales and order-of-magnitude estimates (JSON)");
    add_dot_flags(estimates, o.dot);
    estimates->add_option("--field", o.dot.field_T, "Magnetic field in tesla")->capture_default_str();
    estimates->add_option("--c", o.c, "Coulomb parameter (default derived from the dot)");
    estimates->add_option("--out", o.out, "Output file (default stdout)");
    estimates->callback([&] { action = [&] { return run_estimates(o); }; });

    auto* consts = app.add_subcommand("constants", "Physical constants table (JSON)");
    consts->add_option("--out", o.out, "Output file (default stdout)");
    consts->callback([&] { action = [] { return run_constants(); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_usage;
    }

    try {
        emit(action(), o.out, out);
    } catch (const qmra::Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_module_error;
    }
    return exit_ok;
}

} // namespace qmra::cli
