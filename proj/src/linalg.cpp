#include "qmra/linalg.hpp"

#include <sstream>

#include "qmra/error.hpp"

namespace qmra {

double unitarity_error(const ComplexMatrix& u) {
    if (u.rows() != u.cols()) {
        throw ShapeError("unitarity check needs a square matrix");
    }
    const ComplexMatrix gram = u.adjoint() * u;
    return (gram - ComplexMatrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("matrix shapes differ");
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

UnitaryMatrix UnitaryMatrix::checked(ComplexMatrix m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        throw ShapeError("unitary matrix must be square and non-empty");
    }
    const double err = unitarity_error(m);
    if (!(err < tol)) {
        std::ostringstream msg;
        msg << "matrix is not unitary: max|U^dagger U - I| = " << err;
        throw NotUnitary(msg.str());
    }
    return UnitaryMatrix(std::move(m));
}

UnitaryMatrix UnitaryMatrix::trusted(ComplexMatrix m) {
    if (m.rows() != m.cols()) {
        throw ShapeError("unitary matrix must be square");
    }
    return UnitaryMatrix(std::move(m));
}

UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.dim() != b.dim()) {
        throw ShapeError("cannot multiply unitaries of different dimension");
    }
    return UnitaryMatrix(a.m_ * b.m_);
}

} // namespace qmra
