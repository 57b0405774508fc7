#include "fgrt/operators.hpp"

#include <cmath>

namespace fgrt {

StateVector mub_state(PrimeDim dim, int m, int b) {
    check_point(dim, DapgPoint{m, b});
    const int d = dim.value();
    StateVector psi = StateVector::Zero(d);
    if (b == kComputationalBasis) {
        psi(m) = 1.0;
        return psi;
    }
    const std::int64_t half = (d + 1) / 2;
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    for (int n = 0; n < d; ++n) {
        std::int64_t exponent = half * b * n * (n - 1) - std::int64_t{n} * m;
        psi(n) = norm * omega_pow(dim, exponent);
    }
    return psi;
}

ComplexMatrix shift_operator(PrimeDim dim) {
    const int d = dim.value();
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) x((n + 1) % d, n) = 1.0;
    return x;
}

ComplexMatrix clock_operator(PrimeDim dim) {
    const int d = dim.value();
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) z(n, n) = omega_pow(dim, n);
    return z;
}

double xz_eigen_check(PrimeDim dim, int m, int b) {
    if (b == kComputationalBasis) {
        throw BasisError("X Z^b eigenrelation applies to b >= 0, not the computational basis");
    }
    StateVector psi = mub_state(dim, m, b);
    ComplexMatrix op = shift_operator(dim);
    ComplexMatrix z = clock_operator(dim);
    for (int k = 0; k < b; ++k) op = op * z;
    return (op * psi - omega_pow(dim, m) * psi).norm();
}

ComplexMatrix point_operator(PrimeDim dim, DapgPoint alpha) {
    check_point(dim, alpha);
    const int d = dim.value();
    ComplexMatrix a = ComplexMatrix::Zero(d, d);
    if (alpha.b == kComputationalBasis) {
        a(alpha.m, alpha.m) = 1.0;
        return a;
    }
    const std::int64_t half = (d + 1) / 2;
    for (int n = 0; n < d; ++n) {
        for (int np = 0; np < d; ++np) {
            std::int64_t s = (n - np) * (half * alpha.b * (n + np - 1) - alpha.m);
            a(n, np) = omega_pow(dim, s) / static_cast<double>(d);
        }
    }
    return a;
}

ComplexMatrix line_operator(PrimeDim dim, DapgLine j) {
    check_line(dim, j);
    const int d = dim.value();
    ComplexMatrix p = ComplexMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        int np = mod_reduce(2 * j.m_minus1 - n, dim);  // n + n' = 2 m(-1)
        p(n, np) = omega_pow(dim, -std::int64_t{n - np} * j.m0);
    }
    return p;
}

ComplexMatrix line_operator_by_sum(PrimeDim dim, DapgLine j) {
    const int d = dim.value();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& alpha : line_points(dim, j)) sum += point_operator(dim, alpha);
    return sum - ComplexMatrix::Identity(d, d);
}

ComplexMatrix line_projector(PrimeDim dim, DapgLine j) {
    const int d = dim.value();
    return 0.5 * (line_operator(dim, j) + ComplexMatrix::Identity(d, d));
}

ComplexMatrix line_state_matrix(PrimeDim dim, DapgLine j) {
    const int d = dim.value();
    ComplexMatrix m(d, d + 1);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d + 1));
    for (const auto& alpha : line_points(dim, j)) {
        m.col(alpha.b + 1) = norm * mub_state(dim, alpha.m, alpha.b);
    }
    return m;
}

ComplexMatrix apg_line_operator(PrimeDim dim, ApgLine lambda) {
    const int d = dim.value();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const auto& p : apg_line_points(dim, lambda)) {
        sum += line_operator(dim, duality_inverse(dim, p));
    }
    return sum / static_cast<double>(d);
}

OperatorTable::OperatorTable(PrimeDim dim) : dim_(dim) {
    const int d = dim.value();
    points_.reserve(d * (d + 1));
    for (const auto& alpha : all_points(dim)) points_.push_back(point_operator(dim, alpha));
    lines_.reserve(d * d);
    for (const auto& j : all_lines(dim)) lines_.push_back(line_operator(dim, j));
}

}  // namespace fgrt
