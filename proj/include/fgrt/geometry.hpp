#pragma once

#include <string>
#include <vector>

#include "fgrt/modmath.hpp"

namespace fgrt {

/// Column label of the computational basis. It is a distinguished tag, not
/// the residue d-1; only b >= 0 ever enters mod-d arithmetic.
inline constexpr int kComputationalBasis = -1;

/// A point of the dual affine plane: row m in [0, d-1], column b in
/// {-1, 0, ..., d-1}. There are d(d+1) points.
struct DapgPoint {
    int m;
    int b;

    friend bool operator==(const DapgPoint&, const DapgPoint&) = default;
};

/// A line of the dual affine plane, parameterized by its computational-basis
/// row m(-1) = c/2 and its b=0 row m(0). There are d^2 lines.
struct DapgLine {
    int m_minus1;
    int m0;

    friend bool operator==(const DapgLine&, const DapgLine&) = default;
};

/// A point (xi, eta) of the affine plane; d^2 points.
struct ApgPoint {
    int xi;
    int eta;

    friend bool operator==(const ApgPoint&, const ApgPoint&) = default;
};

/// An affine-plane line: either eta = r*xi + s (sloped) or xi = s' (vertical).
/// d^2 sloped lines plus d vertical lines.
struct ApgLine {
    enum class Kind { Sloped, Vertical };

    Kind kind;
    int r = 0;  // slope, Sloped only
    int s = 0;  // intercept for Sloped, s' for Vertical

    static ApgLine sloped(int r, int s) { return {Kind::Sloped, r, s}; }
    static ApgLine vertical(int s_prime) { return {Kind::Vertical, 0, s_prime}; }

    friend bool operator==(const ApgLine&, const ApgLine&) = default;
};

struct AxiomReport {
    std::string axiom_id;
    std::string description;
    bool passed = false;
    std::string counterexample;  // empty iff passed
};

void check_point(PrimeDim dim, DapgPoint alpha);
void check_line(PrimeDim dim, DapgLine j);
void check_apg_point(PrimeDim dim, ApgPoint p);
void check_apg_line(PrimeDim dim, ApgLine lambda);

// Stable enumerations used for matrices and files: points are column-major
// ((b+1)*d + m), lines are row-major (m_minus1*d + m0), APG points xi*d + eta.
int point_index(PrimeDim dim, DapgPoint alpha);
DapgPoint point_from_index(PrimeDim dim, int idx);
int line_index(PrimeDim dim, DapgLine j);
DapgLine line_from_index(PrimeDim dim, int idx);
int apg_point_index(PrimeDim dim, ApgPoint p);
ApgPoint apg_point_from_index(PrimeDim dim, int idx);

std::vector<DapgPoint> all_points(PrimeDim dim);
std::vector<DapgLine> all_lines(PrimeDim dim);
/// Sloped lines first (r-major, then s), then the d vertical lines.
std::vector<ApgLine> all_apg_lines(PrimeDim dim);

/// The d+1 points of line j: (m(-1), -1) followed by (m(b), b) for
/// b = 0..d-1, with m(b) = inv2*b*(2*m(-1) - 1) + m(0) mod d.
std::vector<DapgPoint> line_points(PrimeDim dim, DapgLine j);

/// The d lines through a point, in m(-1)-major order.
std::vector<DapgLine> lines_through_point(PrimeDim dim, DapgPoint alpha);

/// 1 iff alpha lies on j, else 0. Purely combinatorial.
int incidence(PrimeDim dim, DapgPoint alpha, DapgLine j);

/// Exhaustive check of DAPG(a)-(e) for this dimension.
std::vector<AxiomReport> verify_dapg_axioms(PrimeDim dim);

/// The d points of an affine line, in xi order (eta order for vertical).
std::vector<ApgPoint> apg_line_points(PrimeDim dim, ApgLine lambda);

/// Exhaustive check of APG(a)-(e) for this dimension.
std::vector<AxiomReport> verify_apg_axioms(PrimeDim dim);

/// The relabeling bijection: DAPG line (m(-1), m(0)) -> APG point (xi, eta).
ApgPoint duality_map(PrimeDim dim, DapgLine j);
DapgLine duality_inverse(PrimeDim dim, ApgPoint p);

/// The unique DAPG point shared by the d DAPG lines dual to the points of an
/// APG line: (inv2*r + s, -r mod d) for a sloped line, (s', -1) for a
/// vertical one.
DapgPoint apg_common_dapg_point(PrimeDim dim, ApgLine lambda);

std::string to_string(const DapgPoint& alpha);
std::string to_string(const DapgLine& j);
std::string to_string(const ApgPoint& p);
std::string to_string(const ApgLine& lambda);

}  // namespace fgrt
