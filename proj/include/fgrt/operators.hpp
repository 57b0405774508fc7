#pragma once

#include <vector>

#include "fgrt/geometry.hpp"
#include "fgrt/matrix.hpp"

namespace fgrt {

/// The MUB state |m;b>. For b >= 0 the amplitude at n is
/// (1/sqrt d) * omega^(inv2*b*n(n-1) - n*m); b = -1 gives the computational
/// basis vector |m>. Exponents are reduced in Z_d before exponentiating.
StateVector mub_state(PrimeDim dim, int m, int b);

/// Cyclic shift X |n> = |n+1 mod d>.
ComplexMatrix shift_operator(PrimeDim dim);

/// Clock Z |n> = omega^n |n>.
ComplexMatrix clock_operator(PrimeDim dim);

/// Residual || X Z^b |m;b> - omega^m |m;b> ||. Throws BasisError for b = -1
/// (computational-basis states are Z eigenstates, not X Z^b ones).
double xz_eigen_check(PrimeDim dim, int m, int b);

/// The rank-1 MUB projector attached to a DAPG point, built from its closed
/// form: entry (n,n') is omega^((n-n')*(inv2*b*(n+n'-1) - m))/d for b >= 0,
/// and the diagonal |m><m| for b = -1.
ComplexMatrix point_operator(PrimeDim dim, DapgPoint alpha);

/// The line operator: entry (n,n') is omega^(-(n-n')*m0) when
/// n + n' = 2*m(-1) mod d, else 0. Hermitian with trace 1 and square I.
ComplexMatrix line_operator(PrimeDim dim, DapgLine j);

/// Same operator assembled as sum of the line's point operators minus I.
ComplexMatrix line_operator_by_sum(PrimeDim dim, DapgLine j);

/// (P_j + I)/2, the projector onto the +1 eigenspace of P_j; rank (d+1)/2.
ComplexMatrix line_projector(PrimeDim dim, DapgLine j);

/// The d x (d+1) matrix whose column for basis b is the line's MUB state
/// scaled by 1/sqrt(d+1), columns ordered b = -1, 0, ..., d-1.
ComplexMatrix line_state_matrix(PrimeDim dim, DapgLine j);

/// The affine-plane line operator B: the average (1/d) * sum of the DAPG
/// line operators dual to the line's points. Equals the point operator at
/// apg_common_dapg_point(lambda).
ComplexMatrix apg_line_operator(PrimeDim dim, ApgLine lambda);

/// Immutable cache of all d(d+1) point operators and d^2 line operators for
/// one dimension, indexed by the geometry module's enumerations. Read-only
/// after construction, safe to share across threads.
class OperatorTable {
public:
    explicit OperatorTable(PrimeDim dim);

    PrimeDim dim() const { return dim_; }

    const ComplexMatrix& point(DapgPoint alpha) const { return points_[point_index(dim_, alpha)]; }
    const ComplexMatrix& point(int idx) const { return points_.at(idx); }
    const ComplexMatrix& line(DapgLine j) const { return lines_[line_index(dim_, j)]; }
    const ComplexMatrix& line(int idx) const { return lines_.at(idx); }

    int num_points() const { return static_cast<int>(points_.size()); }
    int num_lines() const { return static_cast<int>(lines_.size()); }

private:
    PrimeDim dim_;
    std::vector<ComplexMatrix> points_;
    std::vector<ComplexMatrix> lines_;
};

}  // namespace fgrt
