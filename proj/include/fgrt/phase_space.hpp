#pragma once

#include <complex>
#include <vector>

#include "fgrt/operators.hpp"

namespace fgrt {

struct DensityOperator {
    PrimeDim dim;
    ComplexMatrix matrix;  // d x d
};

/// Validates shape, Hermiticity and unit trace within eps; positivity is
/// diagnosed separately (reconstructions from noisy tables may dip below 0).
DensityOperator make_density(PrimeDim dim, ComplexMatrix matrix, double eps = comparison_eps());

/// Line-indexed quasi-distribution V(j) = tr(rho P_j), stored in the
/// geometry module's row-major line order. Real, averages to 1 over the d^2
/// lines, may be negative.
struct QuasiDist {
    PrimeDim dim;
    std::vector<double> values;  // size d^2

    double at(DapgLine j) const { return values[line_index(dim, j)]; }
};

/// MUB measurement probabilities p[b][m] = tr(rho A_(m,b)) for the d+1 bases
/// b = -1..d-1. Each basis row is an independent distribution summing to 1.
struct ProbabilityTable {
    PrimeDim dim;
    std::vector<std::vector<double>> rows;  // rows[b+1][m]

    double at(int m, int b) const { return rows[b + 1][m]; }
    double& at(int m, int b) { return rows[b + 1][m]; }
    double basis_sum(int b) const;
};

ProbabilityTable make_prob_table(PrimeDim dim);

QuasiDist quasi_dist(const DensityOperator& rho, const OperatorTable& ops);

/// rho = (1/d) * sum_j V(j) P_j. Exact inverse of quasi_dist.
DensityOperator state_from_quasi(const QuasiDist& v, const OperatorTable& ops);

/// Forward Radon transform by direct trace: p[b][m] = tr(rho A_(m,b)).
ProbabilityTable radon_forward(const DensityOperator& rho, const OperatorTable& ops);

/// Forward transform through the quasi-distribution instead: each entry is
/// (1/d) * sum of V over the lines through the point. Kept as an independent
/// route; must agree with radon_forward.
ProbabilityTable radon_forward_via_quasi(const QuasiDist& v);

/// Exact inversion V(j) = sum_{alpha in j} p(alpha) - 1. Throws
/// UnnormalizedTableError when a basis row deviates from sum 1 by more than
/// tau, DimensionMismatchError on a malformed table.
QuasiDist radon_inverse(const ProbabilityTable& table, double tau = 1e-6);

/// state_from_quasi(radon_inverse(table)): Hermitian, unit trace. Positivity
/// is not enforced; check min_eigenvalue on the result.
DensityOperator reconstruct_state(const ProbabilityTable& table, const OperatorTable& ops,
                                  double tau = 1e-6);

/// (1/d) * sum_j tr(A P_j) tr(B P_j), which equals tr(A B).
std::complex<double> overlap_via_quasi(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const OperatorTable& ops);

/// The APG-coordinate view of the quasi-distribution. Values are reached
/// through the duality map; with xi = m(-1), eta = m(0) the array is shared.
struct ApgQuasiDist {
    PrimeDim dim;
    std::vector<double> values;  // indexed by apg_point_index

    double at(ApgPoint p) const { return values[apg_point_index(dim, p)]; }
};

ApgQuasiDist apg_quasi(const DensityOperator& rho, const OperatorTable& ops);

/// The APG Radon sum (1/d) * sum of the quasi-distribution over the line's
/// points; equals tr(rho B_lambda), the probability at the line's common
/// DAPG point.
double apg_radon(const ApgQuasiDist& v, ApgLine lambda);

/// Full probability table assembled from APG line sums alone.
ProbabilityTable apg_prob_table(const ApgQuasiDist& v);

// State metrics. Both arguments are treated as Hermitian; fidelity clips
// negative eigenvalues (relevant for non-PSD reconstructions).
double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma);

/// Clip negative eigenvalues to zero and renormalize the trace to 1.
DensityOperator project_psd(const DensityOperator& rho);

}  // namespace fgrt
