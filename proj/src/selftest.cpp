#include "fgrt/selftest.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <utility>

#include "fgrt/geometry.hpp"
#include "fgrt/matrix.hpp"
#include "fgrt/operators.hpp"
#include "fgrt/phase_space.hpp"
#include "fgrt/tomography.hpp"

namespace fgrt {
namespace {

using Check = std::optional<std::string>;  // nullopt = passed

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

Check check_dapg_axioms(PrimeDim dim) {
    for (const AxiomReport& r : verify_dapg_axioms(dim)) {
        if (!r.passed) return r.axiom_id + ": " + r.counterexample;
    }
    return std::nullopt;
}

Check check_apg_axioms(PrimeDim dim) {
    for (const AxiomReport& r : verify_apg_axioms(dim)) {
        if (!r.passed) return r.axiom_id + ": " + r.counterexample;
    }
    return std::nullopt;
}

// Same basis: orthonormal.  Different bases: every overlap has modulus 1/sqrt(d).
Check check_mub_overlaps(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    const double unbiased = 1.0 / std::sqrt(static_cast<double>(d));
    std::vector<std::vector<StateVector>> states(static_cast<size_t>(d) + 1);
    for (int b = -1; b < d; ++b)
        for (int m = 0; m < d; ++m)
            states[static_cast<size_t>(b + 1)].push_back(mub_state(dim, m, b));
    for (int b = -1; b < d; ++b) {
        for (int bp = b; bp < d; ++bp) {
            for (int m = 0; m < d; ++m) {
                for (int mp = 0; mp < d; ++mp) {
                    const std::complex<double> ov =
                        states[static_cast<size_t>(b + 1)][static_cast<size_t>(m)]
                            .dot(states[static_cast<size_t>(bp + 1)][static_cast<size_t>(mp)]);
                    const double want = (b == bp) ? (m == mp ? 1.0 : 0.0) : unbiased;
                    if (std::abs(std::abs(ov) - want) > eps)
                        return "|<" + std::to_string(m) + ";" + std::to_string(b) + "|" +
                               std::to_string(mp) + ";" + std::to_string(bp) +
                               ">| = " + fmt(std::abs(ov)) + ", expected " + fmt(want);
                }
            }
        }
    }
    return std::nullopt;
}

Check check_xz_eigenrelation(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    for (int b = 0; b < d; ++b) {
        for (int m = 0; m < d; ++m) {
            const double r = xz_eigen_check(dim, m, b);
            if (r > eps)
                return "X Z^" + std::to_string(b) + " residual " + fmt(r) + " for m=" +
                       std::to_string(m);
        }
    }
    return std::nullopt;
}

// Closed-form point operator against the rank-one projector onto the MUB state.
Check check_point_outer_product(PrimeDim dim) {
    const double eps = comparison_eps();
    for (const DapgPoint& alpha : all_points(dim)) {
        const StateVector psi = mub_state(dim, alpha.m, alpha.b);
        const ComplexMatrix outer = psi * psi.adjoint();
        const double diff = max_abs_diff(point_operator(dim, alpha), outer);
        if (diff > eps)
            return "A at " + to_string(alpha) + " deviates from |m;b><m;b| by " + fmt(diff);
    }
    return std::nullopt;
}

Check check_basis_completeness(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    ComplexMatrix total = ComplexMatrix::Zero(d, d);
    for (int b = -1; b < d; ++b) {
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        for (int m = 0; m < d; ++m) sum += point_operator(dim, {m, b});
        const double diff = max_abs_diff(sum, id);
        if (diff > eps)
            return "sum over basis b=" + std::to_string(b) + " deviates from I by " + fmt(diff);
        total += sum;
    }
    const double diff = max_abs_diff(total, static_cast<double>(d + 1) * id);
    if (diff > eps) return "sum over all points deviates from (d+1)I by " + fmt(diff);
    return std::nullopt;
}

Check check_line_sum_form(PrimeDim dim) {
    const double eps = comparison_eps();
    for (const DapgLine& j : all_lines(dim)) {
        const double diff =
            max_abs_diff(line_operator(dim, j), line_operator_by_sum(dim, j));
        if (diff > eps)
            return "closed form vs point sum differ by " + fmt(diff) + " at " + to_string(j);
    }
    return std::nullopt;
}

Check check_line_resolution(PrimeDim dim) {
    const int d = dim.value();
    ComplexMatrix sum = ComplexMatrix::Zero(d, d);
    for (const DapgLine& j : all_lines(dim)) sum += line_operator(dim, j);
    const double diff =
        max_abs_diff(sum, static_cast<double>(d) * ComplexMatrix::Identity(d, d));
    if (diff > comparison_eps()) return "sum of all P deviates from dI by " + fmt(diff);
    return std::nullopt;
}

Check check_line_involution(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    const ComplexMatrix id = ComplexMatrix::Identity(d, d);
    for (const DapgLine& j : all_lines(dim)) {
        const ComplexMatrix p = line_operator(dim, j);
        const double diff = max_abs_diff(p * p, id);
        if (diff > eps) return "P^2 deviates from I by " + fmt(diff) + " at " + to_string(j);
    }
    return std::nullopt;
}

Check check_line_orthogonality(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    const std::vector<DapgLine> lines = all_lines(dim);
    std::vector<ComplexMatrix> ops;
    ops.reserve(lines.size());
    for (const DapgLine& j : lines) ops.push_back(line_operator(dim, j));
    for (size_t a = 0; a < ops.size(); ++a) {
        for (size_t b = a; b < ops.size(); ++b) {
            const std::complex<double> t = trace_product(ops[a], ops[b]);
            const double want = (a == b) ? static_cast<double>(d) : 0.0;
            if (std::abs(t - std::complex<double>(want, 0.0)) > eps)
                return "tr(P P') = " + fmt(t.real()) + " for " + to_string(lines[a]) +
                       ", " + to_string(lines[b]) + ", expected " + fmt(want);
        }
    }
    return std::nullopt;
}

// tr(A_alpha P_j) must equal the incidence indicator.
Check check_incidence_trace(PrimeDim dim) {
    const double eps = comparison_eps();
    const OperatorTable table(dim);
    for (const DapgPoint& alpha : all_points(dim)) {
        const ComplexMatrix& a = table.point(alpha);
        for (const DapgLine& j : all_lines(dim)) {
            const std::complex<double> t = trace_product(a, table.line(j));
            const double want = incidence(dim, alpha, j) ? 1.0 : 0.0;
            if (std::abs(t - std::complex<double>(want, 0.0)) > eps)
                return "tr(A P) = " + fmt(t.real()) + " at " + to_string(alpha) + ", " +
                       to_string(j) + ", expected " + fmt(want);
        }
    }
    return std::nullopt;
}

// Finite-dual-fluctuation identity: the off-diagonal products of a line's
// point operators reproduce their plain sum.
Check check_fdf_identity(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    for (const DapgLine& j : all_lines(dim)) {
        const std::vector<DapgPoint> pts = line_points(dim, j);
        ComplexMatrix sum = ComplexMatrix::Zero(d, d);
        ComplexMatrix cross = ComplexMatrix::Zero(d, d);
        std::vector<ComplexMatrix> ops;
        ops.reserve(pts.size());
        for (const DapgPoint& alpha : pts) ops.push_back(point_operator(dim, alpha));
        for (size_t a = 0; a < ops.size(); ++a) {
            sum += ops[a];
            for (size_t b = 0; b < ops.size(); ++b)
                if (a != b) cross += ops[a] * ops[b];
        }
        const double diff = max_abs_diff(cross, sum);
        if (diff > eps)
            return "cross products vs sum differ by " + fmt(diff) + " at " + to_string(j);
    }
    return std::nullopt;
}

// Every line operator has eigenvalues +/-1 with multiplicities (d+1)/2, (d-1)/2.
Check check_line_spectrum(PrimeDim dim) {
    const int d = dim.value();
    const double tol = 1e-8;
    for (const DapgLine& j : all_lines(dim)) {
        const Eigen::VectorXd ev = hermitian_eigenvalues(line_operator(dim, j));
        int plus = 0;
        int minus = 0;
        for (int k = 0; k < ev.size(); ++k) {
            if (std::abs(ev[k] - 1.0) <= tol)
                ++plus;
            else if (std::abs(ev[k] + 1.0) <= tol)
                ++minus;
            else
                return "eigenvalue " + fmt(ev[k]) + " of P at " + to_string(j) +
                       " is not within 1e-8 of +/-1";
        }
        if (plus != (d + 1) / 2 || minus != (d - 1) / 2)
            return "multiplicities (" + std::to_string(plus) + "," + std::to_string(minus) +
                   ") at " + to_string(j) + ", expected (" + std::to_string((d + 1) / 2) +
                   "," + std::to_string((d - 1) / 2) + ")";
    }
    return std::nullopt;
}

// The line-state matrix relations: unit Frobenius norm, pairwise overlap
// 1/(d+1), and M M^dagger = 2/(d+1) times the +1 eigenprojector.
Check check_line_state_matrix(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    const std::vector<DapgLine> lines = all_lines(dim);
    std::vector<ComplexMatrix> ms;
    ms.reserve(lines.size());
    for (const DapgLine& j : lines) ms.push_back(line_state_matrix(dim, j));
    const double pair = 1.0 / static_cast<double>(d + 1);
    for (size_t a = 0; a < ms.size(); ++a) {
        const ComplexMatrix proj = line_projector(dim, lines[a]);
        const double diff =
            max_abs_diff(ms[a] * ms[a].adjoint(), (2.0 / static_cast<double>(d + 1)) * proj);
        if (diff > eps)
            return "M M^dagger vs scaled projector differ by " + fmt(diff) + " at " +
                   to_string(lines[a]);
        for (size_t b = a; b < ms.size(); ++b) {
            const std::complex<double> t = trace_product(ms[a].adjoint(), ms[b]);
            const double want = (a == b) ? 1.0 : pair;
            if (std::abs(t - std::complex<double>(want, 0.0)) > eps)
                return "tr(M^dagger M') = " + fmt(t.real()) + " for " + to_string(lines[a]) +
                       ", " + to_string(lines[b]) + ", expected " + fmt(want);
        }
    }
    return std::nullopt;
}

// Attributes of the quasi-distribution of a random density operator:
// real values, sum d, squares bounded, marginals over pencils, overlap rule.
Check check_quasi_attributes(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    const std::uint64_t seed = 0x5e1f7e57u + static_cast<std::uint64_t>(d);
    const DensityOperator rho = random_mixed(dim, d, seed);
    const DensityOperator sigma = random_mixed(dim, (d + 1) / 2, seed + 1);
    const OperatorTable table(dim);
    const QuasiDist v = quasi_dist(rho, table);

    double total = 0.0;
    double squares = 0.0;
    for (int idx = 0; idx < d * d; ++idx) {
        total += v.values[static_cast<size_t>(idx)];
        squares += v.values[static_cast<size_t>(idx)] * v.values[static_cast<size_t>(idx)];
    }
    if (std::abs(total - d) > 1e-9) return "values sum to " + fmt(total) + ", expected d";
    const double purity = trace_product(rho.matrix, rho.matrix).real();
    if (std::abs(squares - d * purity) > 1e-9)
        return "sum of squares " + fmt(squares) + " vs d tr(rho^2) = " + fmt(d * purity);

    // Each pencil of lines through a fixed point sums to d p(alpha).
    for (const DapgPoint& alpha : all_points(dim)) {
        double pencil = 0.0;
        for (const DapgLine& j : lines_through_point(dim, alpha)) pencil += v.at(j);
        const double p = trace_product(rho.matrix, table.point(alpha)).real();
        if (std::abs(pencil - d * p) > 1e-9)
            return "pencil sum " + fmt(pencil) + " vs d tr(rho A) = " + fmt(d * p) + " at " +
                   to_string(alpha);
    }

    const std::complex<double> via_quasi =
        overlap_via_quasi(rho.matrix, sigma.matrix, table);
    const std::complex<double> direct = trace_product(rho.matrix, sigma.matrix);
    if (std::abs(via_quasi - direct) > 1e-9)
        return "overlap via quasi " + fmt(via_quasi.real()) + " vs direct " +
               fmt(direct.real());

    const DensityOperator back = state_from_quasi(v, table);
    const double diff = max_abs_diff(back.matrix, rho.matrix);
    if (diff > eps) return "state rebuilt from quasi deviates by " + fmt(diff);
    return std::nullopt;
}

Check check_radon_roundtrip(PrimeDim dim) {
    const int d = dim.value();
    const double eps = comparison_eps();
    const std::uint64_t seed = 0x9ad0ffu + static_cast<std::uint64_t>(dim.value());
    const OperatorTable table(dim);
    for (int trial = 0; trial < 4; ++trial) {
        const DensityOperator rho =
            random_mixed(dim, 1 + trial % d, seed + static_cast<std::uint64_t>(trial));
        const ProbabilityTable p = radon_forward(rho, table);
        const ProbabilityTable p2 = radon_forward_via_quasi(quasi_dist(rho, table));
        for (int b = -1; b < d; ++b)
            for (int m = 0; m < d; ++m)
                if (std::abs(p.at(m, b) - p2.at(m, b)) > 1e-9)
                    return "direct and quasi-summed transforms differ at (m=" +
                           std::to_string(m) + ",b=" + std::to_string(b) + ")";
        const DensityOperator back = reconstruct_state(p, table);
        const double diff = max_abs_diff(back.matrix, rho.matrix);
        if (diff > eps) return "reconstruction deviates by " + fmt(diff);
    }
    return std::nullopt;
}

// APG side: the averaged dual operator equals the point operator at the
// common DAPG point, and the APG probability table is a relabeling of the
// DAPG one.
Check check_apg_duality(PrimeDim dim) {
    const double eps = comparison_eps();
    for (const ApgLine& lambda : all_apg_lines(dim)) {
        const DapgPoint alpha = apg_common_dapg_point(dim, lambda);
        const double diff =
            max_abs_diff(apg_line_operator(dim, lambda), point_operator(dim, alpha));
        if (diff > eps)
            return "B vs A at common point differ by " + fmt(diff) + " for " +
                   to_string(lambda);
    }
    const OperatorTable table(dim);
    const DensityOperator rho =
        random_mixed(dim, dim.value(), 0xabcde5u + static_cast<std::uint64_t>(dim.value()));
    const ProbabilityTable p = radon_forward(rho, table);
    const ApgQuasiDist av = apg_quasi(rho, table);
    for (const ApgLine& lambda : all_apg_lines(dim)) {
        const DapgPoint alpha = apg_common_dapg_point(dim, lambda);
        if (std::abs(apg_radon(av, lambda) - p.at(alpha.m, alpha.b)) > 1e-9)
            return "APG line sum vs probability differ at " + to_string(lambda);
    }
    const ProbabilityTable assembled = apg_prob_table(av);
    for (int b = -1; b < dim.value(); ++b)
        for (int m = 0; m < dim.value(); ++m)
            if (std::abs(assembled.at(m, b) - p.at(m, b)) > 1e-9)
                return "assembled APG table differs at (m=" + std::to_string(m) +
                       ",b=" + std::to_string(b) + ")";
    return std::nullopt;
}

struct NamedCheck {
    const char* name;
    Check (*fn)(PrimeDim);
};

constexpr NamedCheck kChecks[] = {
    {"dapg-axioms", check_dapg_axioms},
    {"apg-axioms", check_apg_axioms},
    {"mub-overlaps", check_mub_overlaps},
    {"xz-eigenrelation", check_xz_eigenrelation},
    {"point-operator-outer-product", check_point_outer_product},
    {"basis-completeness", check_basis_completeness},
    {"line-operator-sum-form", check_line_sum_form},
    {"line-operator-resolution", check_line_resolution},
    {"line-operator-involution", check_line_involution},
    {"line-operator-orthogonality", check_line_orthogonality},
    {"incidence-trace", check_incidence_trace},
    {"fluctuation-identity", check_fdf_identity},
    {"line-operator-spectrum", check_line_spectrum},
    {"line-state-matrix", check_line_state_matrix},
    {"quasi-distribution-attributes", check_quasi_attributes},
    {"radon-roundtrip", check_radon_roundtrip},
    {"apg-duality", check_apg_duality},
};

}  // namespace

std::vector<SelftestResult> run_selftest(PrimeDim dim) {
    std::vector<SelftestResult> out;
    out.reserve(std::size(kChecks));
    for (const NamedCheck& c : kChecks) {
        SelftestResult r;
        r.name = c.name;
        Check bad = c.fn(dim);
        r.passed = !bad.has_value();
        if (bad) r.detail = std::move(*bad);
        out.push_back(std::move(r));
    }
    return out;
}

bool print_selftest(PrimeDim dim, std::ostream& out) {
    bool all = true;
    for (const SelftestResult& r : run_selftest(dim)) {
        if (r.passed) {
            out << "ok   " << r.name << "\n";
        } else {
            out << "FAIL " << r.name << ": " << r.detail << "\n";
            all = false;
        }
    }
    out << (all ? "all identities passed" : "identity failures detected") << " (d="
        << dim.value() << ")\n";
    return all;
}

}  // namespace fgrt
