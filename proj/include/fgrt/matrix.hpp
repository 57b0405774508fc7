#pragma once

#include <Eigen/Dense>
#include <complex>

namespace fgrt {

using ComplexMatrix = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

/// Largest entrywise absolute difference between two same-shape matrices.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double eps);

/// tr(A B) without forming the product.
std::complex<double> trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ascending eigenvalues of a Hermitian matrix (the input is symmetrized to
/// absorb roundoff before solving).
Eigen::VectorXd hermitian_eigenvalues(const ComplexMatrix& h);

double min_eigenvalue(const ComplexMatrix& h);

/// Principal square root of a Hermitian PSD matrix; eigenvalues below zero
/// are clipped before taking the root.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

}  // namespace fgrt
