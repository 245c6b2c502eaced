#include "qmra/io.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "qmra/error.hpp"

namespace qmra {

namespace {

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

bool try_parse_double(std::string_view text, double& out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
    return ec == std::errc() && ptr == text.data() + text.size() && !text.empty();
}

nlohmann::json parse_json(std::string_view text) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw SerializationError(std::string("malformed JSON: ") + e.what());
    }
}

Complex complex_from(const nlohmann::json& entry) {
    if (entry.is_number()) return {entry.get<double>(), 0.0};
    if (entry.is_array() && entry.size() == 2 && entry[0].is_number() && entry[1].is_number()) {
        return {entry[0].get<double>(), entry[1].get<double>()};
    }
    throw SerializationError("expected a number or a [re, im] pair, got " + entry.dump());
}

} // namespace

std::string format_double(double v) {
    if (!std::isfinite(v)) {
        throw SerializationError("cannot serialize non-finite value");
    }
    // "-0" would parse back as the integer 0 and lose the sign.
    if (v == 0.0 && std::signbit(v)) return "-0.0";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw SerializationError("float formatting failed");
    return std::string(buf, ptr);
}

std::string format_half_integer(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return format_double(0.5 * twice);
}

double parse_double(std::string_view text) {
    double v = 0.0;
    if (!try_parse_double(text, v)) {
        throw SerializationError("not a number: '" + std::string(text) + "'");
    }
    return v;
}

void JsonWriter::separate() {
    if (after_key_) {
        after_key_ = false;
        return;
    }
    if (!first_.back()) out_ << ',';
    first_.back() = false;
}

JsonWriter& JsonWriter::begin_object() {
    separate();
    out_ << '{';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_object() {
    first_.pop_back();
    out_ << '}';
    return *this;
}

JsonWriter& JsonWriter::begin_array() {
    separate();
    out_ << '[';
    first_.push_back(true);
    return *this;
}

JsonWriter& JsonWriter::end_array() {
    first_.pop_back();
    out_ << ']';
    return *this;
}

JsonWriter& JsonWriter::key(std::string_view name) {
    separate();
    out_ << nlohmann::json(std::string(name)).dump() << ':';
    after_key_ = true;
    return *this;
}

JsonWriter& JsonWriter::value(double v) { return raw(format_double(v)); }

JsonWriter& JsonWriter::value(int v) { return raw(std::to_string(v)); }

JsonWriter& JsonWriter::value(std::size_t v) { return raw(std::to_string(v)); }

JsonWriter& JsonWriter::value(const BigInt& v) { return raw(v.str()); }

JsonWriter& JsonWriter::value(std::string_view s) { return raw(nlohmann::json(std::string(s)).dump()); }

JsonWriter& JsonWriter::value(Complex z) {
    begin_array();
    value(z.real());
    value(z.imag());
    return end_array();
}

JsonWriter& JsonWriter::raw(std::string_view json) {
    separate();
    out_ << json;
    return *this;
}

std::string serialize_matrix(const ComplexMatrix& m) {
    std::ostringstream out;
    JsonWriter w(out);
    w.begin_array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        w.begin_array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) w.value(m(r, c));
        w.end_array();
    }
    w.end_array();
    return out.str();
}

ComplexMatrix parse_matrix(std::string_view json) {
    const auto doc = parse_json(json);
    if (!doc.is_array()) throw SerializationError("matrix must be a JSON array of rows");
    const auto rows = static_cast<Eigen::Index>(doc.size());
    const auto cols = rows == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(doc[0].size());
    ComplexMatrix m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const auto& row = doc[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw SerializationError("matrix rows must be arrays of equal length");
        }
        for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = complex_from(row[static_cast<std::size_t>(c)]);
    }
    return m;
}

std::string serialize_amplitudes(const ComplexVector& v) {
    std::ostringstream out;
    JsonWriter w(out);
    w.begin_array();
    for (Eigen::Index i = 0; i < v.size(); ++i) w.value(v(i));
    w.end_array();
    return out.str();
}

ComplexVector parse_amplitudes(std::string_view json) {
    auto doc = parse_json(json);
    if (doc.is_object()) {
        if (!doc.contains("amplitudes")) throw SerializationError("object lacks an \"amplitudes\" member");
        doc = doc["amplitudes"];
    }
    if (!doc.is_array()) throw SerializationError("amplitudes must be a JSON array");
    ComplexVector v(static_cast<Eigen::Index>(doc.size()));
    for (std::size_t i = 0; i < doc.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from(doc[i]);
    return v;
}

std::vector<double> read_values_csv(std::istream& in) {
    std::vector<double> values;
    std::string line;
    bool first = true;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        double v = 0.0;
        if (!try_parse_double(t, v)) {
            if (first) {
                first = false;
                continue;
            }
            throw SerializationError("line " + std::to_string(line_no) + ": not a number: '" + std::string(t) + "'");
        }
        first = false;
        values.push_back(v);
    }
    return values;
}

void write_values_csv(std::ostream& out, std::span<const double> values) {
    for (double v : values) out << format_double(v) << '\n';
}

PulseProfile read_pulse_csv(std::istream& in) {
    std::vector<double> times, js;
    std::string line;
    bool first = true;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto comma = t.find(',');
        double tv = 0.0, jv = 0.0;
        const bool ok = comma != std::string_view::npos && try_parse_double(t.substr(0, comma), tv) &&
                        try_parse_double(t.substr(comma + 1), jv);
        if (!ok) {
            if (first) {
                first = false;
                continue;
            }
            throw SerializationError("line " + std::to_string(line_no) + ": expected t_ns,J_meV");
        }
        first = false;
        times.push_back(tv);
        js.push_back(jv);
    }
    if (times.size() < 2) throw SerializationError("pulse CSV needs at least two rows");
    const double duration = times.back() - times.front();
    if (times.front() != 0.0) throw SerializationError("pulse CSV must start at t = 0");
    const double step = duration / static_cast<double>(times.size() - 1);
    for (std::size_t i = 0; i < times.size(); ++i) {
        if (std::abs(times[i] - step * static_cast<double>(i)) > 1e-9 * std::max(1.0, duration)) {
            throw SerializationError("pulse CSV times must be uniformly spaced");
        }
    }
    return PulseProfile(std::move(js), duration);
}

void write_pulse_csv(std::ostream& out, const PulseProfile& profile) {
    out << "t_ns,J_meV\n";
    for (std::size_t i = 0; i < profile.samples().size(); ++i) {
        out << format_double(profile.time_of(i)) << ',' << format_double(profile.samples()[i]) << '\n';
    }
}

} // namespace qmra
