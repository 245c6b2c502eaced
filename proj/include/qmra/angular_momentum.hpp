#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qmra/linalg.hpp"

namespace qmra {

/// Angular momentum j stored as the integer 2j so half-integers stay exact.
class SpinLabel {
public:
    constexpr SpinLabel() = default;
    /// Throws InvalidLabel for negative input.
    explicit SpinLabel(int twice_j);

    static SpinLabel half() { return SpinLabel(1); }

    constexpr int twice() const noexcept { return twice_j_; }
    constexpr int multiplicity() const noexcept { return twice_j_ + 1; }
    double value() const noexcept { return 0.5 * twice_j_; }

    /// Admissible 2m values, ascending: -2j, -2j+2, ..., 2j.
    std::vector<int> twice_m_values() const;

    friend constexpr auto operator<=>(SpinLabel, SpinLabel) = default;

private:
    int twice_j_ = 0;
};

/// Total angular momentum J with projection M, both stored doubled.
class MultipletLabel {
public:
    constexpr MultipletLabel() = default;
    /// Throws InvalidLabel on |M| > J or parity mismatch.
    MultipletLabel(int twice_J, int twice_M);

    constexpr int twice_J() const noexcept { return twice_J_; }
    constexpr int twice_M() const noexcept { return twice_M_; }
    SpinLabel spin() const { return SpinLabel(twice_J_); }
    constexpr int dimension() const noexcept { return twice_J_ + 1; }

    friend constexpr auto operator<=>(const MultipletLabel&, const MultipletLabel&) = default;

private:
    int twice_J_ = 0;
    int twice_M_ = 0;
};

/// Formats 2j as "1", "1/2", "3/2", ...
std::string format_spin(int twice_j);

/// Largest spin accepted by `cg`; factorials beyond this overflow 128 bits.
inline constexpr int max_twice_j_cg = 16;

/// Clebsch-Gordan coefficient <j1 m1; j2 m2 | J M> in the Condon-Shortley
/// phase convention. All arguments are doubled. Returns exactly 0 when the
/// projections do not add up or J violates the triangle rule.
///
/// Evaluated from the Racah sum, rewritten as an integer sum of binomial
/// products times the square root of a factorial ratio. The sum is exact
/// in 128-bit arithmetic for j1, j2 <= 8.
double cg(SpinLabel j1, int twice_m1, SpinLabel j2, int twice_m2, MultipletLabel jm);

/// Doubled-argument convenience overload.
double cg(int twice_j1, int twice_m1, int twice_j2, int twice_m2, int twice_J, int twice_M);

/// Total spins reachable by coupling j1 and j2, each once, in descending order.
std::vector<SpinLabel> multiplet_content(SpinLabel j1, SpinLabel j2);

/// Multiplet columns of `couple_pair_matrix`, ascending J then ascending M.
std::vector<MultipletLabel> coupled_basis(SpinLabel j1, SpinLabel j2);

/// Product rows of `couple_pair_matrix` as (2m1, 2m2): m1 slowest, both ascending.
std::vector<std::pair<int, int>> product_basis(SpinLabel j1, SpinLabel j2);

/// Orthogonal matrix with entry (product row, multiplet column) equal to the
/// Clebsch-Gordan coefficient. For two spin-1/2 it is the 4x4 matrix relating
/// (dd, du, ud, uu) to (|0,0>, |1,-1>, |1,0>, |1,1>).
RealMatrix couple_pair_matrix(SpinLabel j1, SpinLabel j2);

} // namespace qmra
