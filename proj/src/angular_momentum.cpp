#include "qmra/angular_momentum.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

#include "qmra/error.hpp"

namespace qmra {

namespace {

using int128 = __int128;

bool parity_matches(int twice_j, int twice_m) {
    return ((twice_j - twice_m) % 2) == 0;
}

void require_projection(SpinLabel j, int twice_m, const char* which) {
    if (std::abs(twice_m) > j.twice() || !parity_matches(j.twice(), twice_m)) {
        throw InvalidLabel(std::string("invalid projection for ") + which + ": 2j=" +
                           std::to_string(j.twice()) + ", 2m=" + std::to_string(twice_m));
    }
}

// C(n, r), zero outside 0 <= r <= n. Exact for n <= 64.
int128 binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    int128 result = 1;
    for (int i = 1; i <= r; ++i) {
        result = result * (n - r + i) / i;
    }
    return result;
}

long double factorial(int n) {
    static const auto table = [] {
        std::array<long double, 64> t{};
        t[0] = 1.0L;
        for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<long double>(i);
        return t;
    }();
    return table.at(static_cast<std::size_t>(n));
}

} // namespace

SpinLabel::SpinLabel(int twice_j) : twice_j_(twice_j) {
    if (twice_j < 0) {
        throw InvalidLabel("spin must be non-negative, got 2j=" + std::to_string(twice_j));
    }
}

std::vector<int> SpinLabel::twice_m_values() const {
    std::vector<int> ms;
    ms.reserve(static_cast<std::size_t>(multiplicity()));
    for (int m = -twice_j_; m <= twice_j_; m += 2) ms.push_back(m);
    return ms;
}

MultipletLabel::MultipletLabel(int twice_J, int twice_M) : twice_J_(twice_J), twice_M_(twice_M) {
    require_projection(SpinLabel(twice_J), twice_M, "multiplet");
}

std::string format_spin(int twice_j) {
    if (twice_j % 2 == 0) return std::to_string(twice_j / 2);
    return std::to_string(twice_j) + "/2";
}

double cg(SpinLabel j1, int twice_m1, SpinLabel j2, int twice_m2, MultipletLabel jm) {
    require_projection(j1, twice_m1, "j1");
    require_projection(j2, twice_m2, "j2");
    if (j1.twice() > max_twice_j_cg || j2.twice() > max_twice_j_cg) {
        throw InvalidLabel("Clebsch-Gordan coefficients are limited to j <= 8");
    }

    const int tj1 = j1.twice();
    const int tj2 = j2.twice();
    const int tJ = jm.twice_J();
    const int tM = jm.twice_M();

    if (twice_m1 + twice_m2 != tM) return 0.0;
    if (tJ < std::abs(tj1 - tj2) || tJ > tj1 + tj2) return 0.0;
    if ((tj1 + tj2 + tJ) % 2 != 0) return 0.0;

    // All of these are integers once the parity checks above hold.
    const int a = (tj1 + tj2 - tJ) / 2;
    const int b = (tj1 - tj2 + tJ) / 2;
    const int c = (-tj1 + tj2 + tJ) / 2;
    const int j1_minus_m1 = (tj1 - twice_m1) / 2;
    const int j1_plus_m1 = (tj1 + twice_m1) / 2;
    const int j2_minus_m2 = (tj2 - twice_m2) / 2;
    const int j2_plus_m2 = (tj2 + twice_m2) / 2;
    const int J_minus_M = (tJ - tM) / 2;
    const int J_plus_M = (tJ + tM) / 2;
    const int total = (tj1 + tj2 + tJ) / 2 + 1;

    int128 sum = 0;
    for (int k = 0; k <= a; ++k) {
        const int128 term = binomial(a, k) * binomial(J_minus_M, j1_minus_m1 - k) *
                            binomial(J_plus_M, j2_plus_m2 - k);
        sum += (k % 2 == 0) ? term : -term;
    }
    if (sum == 0) return 0.0;

    const long double numerator = static_cast<long double>(tJ + 1) * factorial(b) * factorial(c) *
                                  factorial(j1_minus_m1) * factorial(j1_plus_m1) *
                                  factorial(j2_minus_m2) * factorial(j2_plus_m2);
    const long double denominator =
        factorial(total) * factorial(a) * factorial(J_plus_M) * factorial(J_minus_M);

    return static_cast<double>(static_cast<long double>(sum) * std::sqrt(numerator / denominator));
}

double cg(int twice_j1, int twice_m1, int twice_j2, int twice_m2, int twice_J, int twice_M) {
    return cg(SpinLabel(twice_j1), twice_m1, SpinLabel(twice_j2), twice_m2,
              MultipletLabel(twice_J, twice_M));
}

std::vector<SpinLabel> multiplet_content(SpinLabel j1, SpinLabel j2) {
    std::vector<SpinLabel> out;
    for (int tJ = j1.twice() + j2.twice(); tJ >= std::abs(j1.twice() - j2.twice()); tJ -= 2) {
        out.emplace_back(tJ);
    }
    return out;
}

std::vector<MultipletLabel> coupled_basis(SpinLabel j1, SpinLabel j2) {
    std::vector<MultipletLabel> out;
    for (int tJ = std::abs(j1.twice() - j2.twice()); tJ <= j1.twice() + j2.twice(); tJ += 2) {
        for (int tM : SpinLabel(tJ).twice_m_values()) out.emplace_back(tJ, tM);
    }
    return out;
}

std::vector<std::pair<int, int>> product_basis(SpinLabel j1, SpinLabel j2) {
    std::vector<std::pair<int, int>> out;
    for (int m1 : j1.twice_m_values()) {
        for (int m2 : j2.twice_m_values()) out.emplace_back(m1, m2);
    }
    return out;
}

RealMatrix couple_pair_matrix(SpinLabel j1, SpinLabel j2) {
    const auto rows = product_basis(j1, j2);
    const auto cols = coupled_basis(j1, j2);
    RealMatrix a = RealMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                    static_cast<Eigen::Index>(cols.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                cg(j1, rows[r].first, j2, rows[r].second, cols[c]);
        }
    }
    return a;
}

} // namespace qmra
