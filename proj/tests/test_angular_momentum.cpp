#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qmra/angular_momentum.hpp"
#include "qmra/error.hpp"

using namespace qmra;

namespace {
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("cg reproduces the spin-1/2 pair coefficients") {
    CHECK(cg(1, 1, 1, 1, 2, 2) == 1.0);
    CHECK(cg(1, -1, 1, 1, 0, 0) == doctest::Approx(-inv_sqrt2).epsilon(1e-15));
    CHECK(cg(1, 1, 1, -1, 0, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-15));
    CHECK(cg(1, -1, 1, 1, 2, 2) == 0.0);
    CHECK(cg(1, -1, 1, 1, 2, 0) == doctest::Approx(inv_sqrt2).epsilon(1e-15));
}

TEST_CASE("cg(1,+1; 1,-1 -> 0,0) = 1/sqrt3 against the ladder oracle") {
    const oracle::LadderCG ref(2, 2);
    const double expected = 1.0 / std::sqrt(3.0);
    CHECK(ref(2, -2, 0, 0) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(cg(2, 2, 2, -2, 0, 0) == doctest::Approx(expected).epsilon(1e-14));
}

TEST_CASE("cg vanishes outside the selection rules") {
    CHECK(cg(2, 2, 2, 0, 2, 0) == 0.0);  // m1 + m2 != M
    CHECK(cg(2, 0, 2, 0, 6, 0) == 0.0);  // J > j1 + j2
    CHECK(cg(4, 0, 1, 1, 1, 1) == 0.0);  // J < |j1 - j2|
    CHECK(cg(2, 0, 2, 0, 2, 0) == 0.0);  // genuine zero of the Racah sum
}

TEST_CASE("malformed labels raise InvalidLabel") {
    CHECK_THROWS_AS(cg(1, 0, 1, 1, 0, 0), InvalidLabel);     // parity
    CHECK_THROWS_AS(cg(1, 3, 1, -1, 2, 2), InvalidLabel);    // |m| > j
    CHECK_THROWS_AS(cg(2, 0, 2, 0, 2, 4), InvalidLabel);     // |M| > J
    CHECK_THROWS_AS(SpinLabel(-1), InvalidLabel);
    CHECK_THROWS_AS(MultipletLabel(2, 1), InvalidLabel);
    CHECK_THROWS_AS(cg(18, 0, 2, 0, 18, 0), InvalidLabel);   // j > 8
}

TEST_CASE("cg agrees with the lowering-operator oracle for j1, j2 <= 2") {
    for (int tj1 = 0; tj1 <= 4; ++tj1) {
        for (int tj2 = 0; tj2 <= 4; ++tj2) {
            const oracle::LadderCG ref(tj1, tj2);
            for (int tJ = std::abs(tj1 - tj2); tJ <= tj1 + tj2; tJ += 2) {
                for (int tM = -tJ; tM <= tJ; tM += 2) {
                    for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                        for (int tm2 = -tj2; tm2 <= tj2; tm2 += 2) {
                            CHECK(std::abs(cg(tj1, tm1, tj2, tm2, tJ, tM) - ref(tm1, tm2, tJ, tM)) < 1e-12);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("cg stays accurate at j = 8") {
    const oracle::LadderCG ref(16, 12);
    for (int tJ = 4; tJ <= 28; tJ += 4) {
        for (int tm1 = -16; tm1 <= 16; tm1 += 4) {
            const int tm2 = 2 - tm1;
            if (std::abs(tm2) > 12) continue;
            CHECK(std::abs(cg(16, tm1, 12, tm2, tJ, 2) - ref(tm1, tm2, tJ, 2)) < 1e-10);
        }
    }
}

TEST_CASE("stretched states have coefficient exactly one") {
    for (int tj1 = 0; tj1 <= 16; ++tj1) {
        for (int tj2 = 0; tj2 <= 16; ++tj2) {
            CHECK(cg(tj1, tj1, tj2, tj2, tj1 + tj2, tj1 + tj2) == 1.0);
        }
    }
}

TEST_CASE("orthogonality and completeness for j1, j2 <= 2") {
    for (int tj1 = 0; tj1 <= 4; ++tj1) {
        for (int tj2 = 0; tj2 <= 4; ++tj2) {
            const RealMatrix a = couple_pair_matrix(SpinLabel(tj1), SpinLabel(tj2));
            const auto n = a.rows();
            CHECK(a.rows() == a.cols());
            CHECK((a.transpose() * a - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
            CHECK((a * a.transpose() - RealMatrix::Identity(n, n)).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("multiplet_content lists J from j1+j2 down to |j1-j2|") {
    auto twice = [](const std::vector<SpinLabel>& v) {
        std::vector<int> out;
        for (auto s : v) out.push_back(s.twice());
        return out;
    };
    CHECK(twice(multiplet_content(SpinLabel(1), SpinLabel(1))) == std::vector<int>{2, 0});
    CHECK(twice(multiplet_content(SpinLabel(2), SpinLabel(2))) == std::vector<int>{4, 2, 0});
    CHECK(twice(multiplet_content(SpinLabel(2), SpinLabel(0))) == std::vector<int>{2});

    for (int tj1 = 0; tj1 <= 8; ++tj1) {
        for (int tj2 = 0; tj2 <= 8; ++tj2) {
            int dim = 0;
            for (auto s : multiplet_content(SpinLabel(tj1), SpinLabel(tj2))) dim += s.multiplicity();
            CHECK(dim == (tj1 + 1) * (tj2 + 1));
        }
    }
}

TEST_CASE("couple_pair_matrix for two spin-1/2 is the printed A") {
    RealMatrix expected(4, 4);
    expected << 0, 1, 0, 0,
                -inv_sqrt2, 0, inv_sqrt2, 0,
                inv_sqrt2, 0, inv_sqrt2, 0,
                0, 0, 0, 1;
    const RealMatrix a = couple_pair_matrix(SpinLabel::half(), SpinLabel::half());
    CHECK((a - expected).cwiseAbs().maxCoeff() < 1e-12);

    const auto cols = coupled_basis(SpinLabel::half(), SpinLabel::half());
    REQUIRE(cols.size() == 4);
    CHECK(cols[0] == MultipletLabel(0, 0));
    CHECK(cols[1] == MultipletLabel(2, -2));
    CHECK(cols[3] == MultipletLabel(2, 2));
}

TEST_CASE("couple_pair_matrix edge cases") {
    CHECK(couple_pair_matrix(SpinLabel::half(), SpinLabel(0)).isApprox(RealMatrix::Identity(2, 2)));

    // (1, 1/2): the (3/2, 3/2) column is the unit vector on (m1=1, m2=1/2).
    const SpinLabel one(2), half = SpinLabel::half();
    const RealMatrix a = couple_pair_matrix(one, half);
    const auto rows = product_basis(one, half);
    const auto cols = coupled_basis(one, half);
    const auto col = std::find(cols.begin(), cols.end(), MultipletLabel(3, 3)) - cols.begin();
    const auto row = std::find(rows.begin(), rows.end(), std::pair{2, 1}) - rows.begin();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
        CHECK(a(r, col) == (r == row ? 1.0 : 0.0));
    }
}
