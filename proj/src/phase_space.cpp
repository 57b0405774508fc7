#include "fgrt/phase_space.hpp"

#include <cmath>
#include <numeric>

namespace fgrt {

DensityOperator make_density(PrimeDim dim, ComplexMatrix matrix, double eps) {
    const int d = dim.value();
    if (matrix.rows() != d || matrix.cols() != d) {
        throw DimensionMismatchError("density matrix must be " + std::to_string(d) + "x" +
                                     std::to_string(d));
    }
    if (max_abs_diff(matrix, matrix.adjoint()) > eps) {
        throw Error("density matrix is not Hermitian within tolerance");
    }
    if (std::abs(matrix.trace() - std::complex<double>(1.0)) > eps) {
        throw Error("density matrix trace differs from 1 beyond tolerance");
    }
    return {dim, std::move(matrix)};
}

double ProbabilityTable::basis_sum(int b) const {
    const auto& row = rows[b + 1];
    return std::accumulate(row.begin(), row.end(), 0.0);
}

ProbabilityTable make_prob_table(PrimeDim dim) {
    ProbabilityTable t{dim, {}};
    t.rows.assign(dim.value() + 1, std::vector<double>(dim.value(), 0.0));
    return t;
}

QuasiDist quasi_dist(const DensityOperator& rho, const OperatorTable& ops) {
    if (rho.dim != ops.dim()) throw DimensionMismatchError("state and operator table dimensions differ");
    const int d = rho.dim.value();
    QuasiDist v{rho.dim, std::vector<double>(d * d)};
    for (int idx = 0; idx < d * d; ++idx) {
        v.values[idx] = trace_product(rho.matrix, ops.line(idx)).real();
    }
    return v;
}

DensityOperator state_from_quasi(const QuasiDist& v, const OperatorTable& ops) {
    if (v.dim != ops.dim()) throw DimensionMismatchError("quasi-distribution and operator table dimensions differ");
    const int d = v.dim.value();
    if (static_cast<int>(v.values.size()) != d * d) {
        throw DimensionMismatchError("quasi-distribution must have d^2 entries");
    }
    ComplexMatrix rho = ComplexMatrix::Zero(d, d);
    for (int idx = 0; idx < d * d; ++idx) rho += v.values[idx] * ops.line(idx);
    return {v.dim, rho / static_cast<double>(d)};
}

ProbabilityTable radon_forward(const DensityOperator& rho, const OperatorTable& ops) {
    if (rho.dim != ops.dim()) throw DimensionMismatchError("state and operator table dimensions differ");
    const int d = rho.dim.value();
    ProbabilityTable table = make_prob_table(rho.dim);
    for (int b = -1; b < d; ++b) {
        for (int m = 0; m < d; ++m) {
            table.at(m, b) = trace_product(rho.matrix, ops.point(DapgPoint{m, b})).real();
        }
    }
    return table;
}

ProbabilityTable radon_forward_via_quasi(const QuasiDist& v) {
    const int d = v.dim.value();
    ProbabilityTable table = make_prob_table(v.dim);
    for (int b = -1; b < d; ++b) {
        for (int m = 0; m < d; ++m) {
            double sum = 0.0;
            for (const auto& j : lines_through_point(v.dim, DapgPoint{m, b})) sum += v.at(j);
            table.at(m, b) = sum / d;
        }
    }
    return table;
}

QuasiDist radon_inverse(const ProbabilityTable& table, double tau) {
    const int d = table.dim.value();
    if (static_cast<int>(table.rows.size()) != d + 1) {
        throw DimensionMismatchError("probability table must have d+1 basis rows");
    }
    for (int b = -1; b < d; ++b) {
        if (static_cast<int>(table.rows[b + 1].size()) != d) {
            throw DimensionMismatchError("basis row must have d entries");
        }
        double sum = table.basis_sum(b);
        if (std::abs(sum - 1.0) > tau) {
            throw UnnormalizedTableError("basis b=" + std::to_string(b) + " sums to " +
                                         std::to_string(sum));
        }
    }
    QuasiDist v{table.dim, std::vector<double>(d * d)};
    for (const auto& j : all_lines(table.dim)) {
        double sum = 0.0;
        for (const auto& alpha : line_points(table.dim, j)) sum += table.at(alpha.m, alpha.b);
        v.values[line_index(table.dim, j)] = sum - 1.0;
    }
    return v;
}

DensityOperator reconstruct_state(const ProbabilityTable& table, const OperatorTable& ops,
                                  double tau) {
    return state_from_quasi(radon_inverse(table, tau), ops);
}

std::complex<double> overlap_via_quasi(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const OperatorTable& ops) {
    const int d = ops.dim().value();
    if (a.rows() != d || a.cols() != d || b.rows() != d || b.cols() != d) {
        throw DimensionMismatchError("operands must be d x d");
    }
    std::complex<double> sum = 0.0;
    for (int idx = 0; idx < d * d; ++idx) {
        sum += trace_product(a, ops.line(idx)) * trace_product(b, ops.line(idx));
    }
    return sum / static_cast<double>(d);
}

ApgQuasiDist apg_quasi(const DensityOperator& rho, const OperatorTable& ops) {
    QuasiDist v = quasi_dist(rho, ops);
    const int d = rho.dim.value();
    ApgQuasiDist w{rho.dim, std::vector<double>(d * d)};
    for (int idx = 0; idx < d * d; ++idx) {
        ApgPoint p = apg_point_from_index(rho.dim, idx);
        w.values[idx] = v.at(duality_inverse(rho.dim, p));
    }
    return w;
}

double apg_radon(const ApgQuasiDist& v, ApgLine lambda) {
    double sum = 0.0;
    for (const auto& p : apg_line_points(v.dim, lambda)) sum += v.at(p);
    return sum / v.dim.value();
}

ProbabilityTable apg_prob_table(const ApgQuasiDist& v) {
    ProbabilityTable table = make_prob_table(v.dim);
    for (const auto& lambda : all_apg_lines(v.dim)) {
        DapgPoint alpha = apg_common_dapg_point(v.dim, lambda);
        table.at(alpha.m, alpha.b) = apg_radon(v, lambda);
    }
    return table;
}

double trace_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return 0.5 * hermitian_eigenvalues(a - b).cwiseAbs().sum();
}

double fidelity(const ComplexMatrix& rho, const ComplexMatrix& sigma) {
    ComplexMatrix root = psd_sqrt(rho);
    Eigen::VectorXd eig = hermitian_eigenvalues(root * sigma * root);
    double sum = eig.cwiseMax(0.0).cwiseSqrt().sum();
    return sum * sum;
}

DensityOperator project_psd(const DensityOperator& rho) {
    ComplexMatrix sym = 0.5 * (rho.matrix + rho.matrix.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    Eigen::VectorXd clipped = solver.eigenvalues().cwiseMax(0.0);
    double total = clipped.sum();
    if (total <= 0.0) throw Error("cannot project an all-negative spectrum to a state");
    clipped /= total;
    ComplexMatrix projected =
        solver.eigenvectors() * clipped.asDiagonal() * solver.eigenvectors().adjoint();
    return {rho.dim, projected};
}

}  // namespace fgrt
