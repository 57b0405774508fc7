#include "fgrt/matrix.hpp"

#include <cmath>

namespace fgrt {

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return std::numeric_limits<double>::infinity();
    }
    if (a.size() == 0) return 0.0;
    return (a - b).cwiseAbs().maxCoeff();
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double eps) {
    return max_abs_diff(a, b) <= eps;
}

std::complex<double> trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a.array() * b.transpose().array()).sum();
}

Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& h) {
    ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

double min_eigenvalue(const ComplexMatrix& h) { return hermitian_eigenvalues(h).minCoeff(); }

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    Eigen::VectorXd roots = solver.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().adjoint();
}

}  // namespace fgrt
