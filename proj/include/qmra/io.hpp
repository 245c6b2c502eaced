#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmra/dynamics.hpp"
#include "qmra/hierarchy.hpp"
#include "qmra/linalg.hpp"

namespace qmra {

/// Shortest representation that parses back to the same double ("1", "0.5",
/// "-0.7071067811865475"). Throws SerializationError for NaN or infinity.
std::string format_double(double v);

/// Doubled spin as a JSON number: 4 -> "2", 1 -> "0.5".
std::string format_half_integer(int twice);

/// Parses a full string as a double. Throws SerializationError on garbage.
double parse_double(std::string_view text);

/// Minimal streaming JSON writer with compact, byte-stable output.
class JsonWriter {
public:
    explicit JsonWriter(std::ostream& out) : out_(out) {}

    JsonWriter& begin_object();
    JsonWriter& end_object();
    JsonWriter& begin_array();
    JsonWriter& end_array();
    JsonWriter& key(std::string_view name);
    JsonWriter& value(double v);
    JsonWriter& value(int v);
    JsonWriter& value(std::size_t v);
    JsonWriter& value(const BigInt& v);
    JsonWriter& value(std::string_view s);
    JsonWriter& value(const char* s) { return value(std::string_view(s)); }
    JsonWriter& value(Complex z);
    /// Emits pre-formatted JSON verbatim.
    JsonWriter& raw(std::string_view json);

private:
    void separate();
    std::ostream& out_;
    std::vector<bool> first_{true};
    bool after_key_ = false;
};

/// JSON array of rows, each entry a [re, im] pair.
std::string serialize_matrix(const ComplexMatrix& m);
/// Inverse of `serialize_matrix`. Throws SerializationError on malformed input.
ComplexMatrix parse_matrix(std::string_view json);

/// JSON array of [re, im] pairs.
std::string serialize_amplitudes(const ComplexVector& v);
/// Accepts an array of [re, im] pairs or plain reals, or an object with an
/// "amplitudes" member holding such an array.
ComplexVector parse_amplitudes(std::string_view json);

/// One value per line; blank lines, '#' comments and a non-numeric first
/// line (header) are skipped.
std::vector<double> read_values_csv(std::istream& in);
void write_values_csv(std::ostream& out, std::span<const double> values);

/// Two columns t_ns,J_meV with a header. Times must start at 0 and be
/// uniformly spaced.
PulseProfile read_pulse_csv(std::istream& in);
void write_pulse_csv(std::ostream& out, const PulseProfile& profile);

} // namespace qmra
