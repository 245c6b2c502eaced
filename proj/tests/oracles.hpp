#pragma once

// Test-only reference computations, independent of the library code paths.

#include <cmath>
#include <map>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

// Clebsch-Gordan table built by the lowering-operator construction: start
// from each highest-weight state |J,J> (fixed by orthogonality to the larger
// multiplets and the Condon-Shortley sign <j1 j1; j2 J-j1|J J> > 0) and apply
// J- repeatedly. Keys and labels are doubled.
class LadderCG {
public:
    LadderCG(int twice_j1, int twice_j2) : tj1_(twice_j1), tj2_(twice_j2) {
        const int n1 = tj1_ + 1, n2 = tj2_ + 1;
        const int dim = n1 * n2;
        auto index = [&](int tm1, int tm2) { return ((tm1 + tj1_) / 2) * n2 + (tm2 + tj2_) / 2; };
        auto tm1_of = [&](int i) { return 2 * (i / n2) - tj1_; };
        auto tm2_of = [&](int i) { return 2 * (i % n2) - tj2_; };

        Eigen::MatrixXd lower = Eigen::MatrixXd::Zero(dim, dim);
        for (int i = 0; i < dim; ++i) {
            const int tm1 = tm1_of(i), tm2 = tm2_of(i);
            if (tm1 > -tj1_) {
                lower(index(tm1 - 2, tm2), i) +=
                    std::sqrt((tj1_ + tm1) * (tj1_ - tm1 + 2) / 4.0);
            }
            if (tm2 > -tj2_) {
                lower(index(tm1, tm2 - 2), i) +=
                    std::sqrt((tj2_ + tm2) * (tj2_ - tm2 + 2) / 4.0);
            }
        }

        std::vector<Eigen::VectorXd> found;
        for (int tJ = tj1_ + tj2_; tJ >= std::abs(tj1_ - tj2_); tJ -= 2) {
            // Highest-weight vector: the part of M = J orthogonal to every
            // state of larger J with the same M.
            Eigen::VectorXd top = Eigen::VectorXd::Zero(dim);
            for (int i = 0; i < dim; ++i) {
                if (tm1_of(i) + tm2_of(i) != tJ) continue;
                Eigen::VectorXd e = Eigen::VectorXd::Unit(dim, i);
                for (const auto& f : found) e -= f.dot(e) * f;
                if (e.norm() > 1e-8) {
                    top = e.normalized();
                    break;
                }
            }
            const int ref = index(tj1_, tJ - tj1_);
            if (top(ref) < 0) top = -top;

            Eigen::VectorXd v = top;
            for (int tM = tJ; tM >= -tJ; tM -= 2) {
                for (int i = 0; i < dim; ++i) {
                    table_[{tm1_of(i), tm2_of(i), tJ, tM}] = v(i);
                }
                found.push_back(v);
                if (tM > -tJ) {
                    const double norm = std::sqrt((tJ + tM) * (tJ - tM + 2) / 4.0);
                    v = lower * v / norm;
                }
            }
        }
    }

    double operator()(int tm1, int tm2, int tJ, int tM) const {
        auto it = table_.find({tm1, tm2, tJ, tM});
        return it == table_.end() ? 0.0 : it->second;
    }

private:
    int tj1_, tj2_;
    std::map<std::tuple<int, int, int, int>, double> table_;
};

// I0 power series sum (x/2)^(2k) / (k!)^2 in long double.
inline long double bessel_i0_series(long double x) {
    long double term = 1, sum = 1;
    const long double q = x * x / 4;
    for (int k = 1; k < 2000; ++k) {
        term *= q / (static_cast<long double>(k) * k);
        sum += term;
        if (term < sum * 1e-22L) break;
    }
    return sum;
}

} // namespace oracle
