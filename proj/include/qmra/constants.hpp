#pragma once

#include <array>
#include <string_view>

namespace qmra::constants {

// One pinned table so golden values are reproducible bit for bit.
// hbar = 0.6582119 meV ps
inline constexpr double hbar_meV_ns = 0.6582119e-3;
inline constexpr double bohr_magneton_meV_per_T = 0.0578838;
// e^2 / (4 pi epsilon_0) = 1.44 eV nm
inline constexpr double coulomb_meV_nm = 1440.0;
// m_e c^2 = 511 keV
inline constexpr double electron_rest_energy_meV = 511.0e6;
inline constexpr double speed_of_light_nm_per_ns = 2.99792458e8;

// hbar c, derived from the two entries above.
inline constexpr double hbar_c_meV_nm = hbar_meV_ns * speed_of_light_nm_per_ns;

struct Entry {
    std::string_view name;
    double value;
    std::string_view unit;
};

inline constexpr std::array<Entry, 6> table{{
    {"hbar", hbar_meV_ns, "meV ns"},
    {"bohr_magneton", bohr_magneton_meV_per_T, "meV/T"},
    {"coulomb_e2_over_4pi_eps0", coulomb_meV_nm, "meV nm"},
    {"electron_rest_energy", electron_rest_energy_meV, "meV"},
    {"speed_of_light", speed_of_light_nm_per_ns, "nm/ns"},
    {"hbar_c", hbar_c_meV_nm, "meV nm"},
}};

} // namespace qmra::constants
