#include "fgrt/geometry.hpp"

#include <algorithm>

namespace fgrt {

namespace {

bool apg_contains(PrimeDim dim, ApgLine lambda, ApgPoint p) {
    if (lambda.kind == ApgLine::Kind::Vertical) return p.xi == lambda.s;
    return mod_reduce(std::int64_t{lambda.r} * p.xi + lambda.s - p.eta, dim) == 0;
}

// Parallel class id: sloped lines share a class per slope, verticals form one.
int apg_class(PrimeDim dim, ApgLine lambda) {
    return lambda.kind == ApgLine::Kind::Vertical ? dim.value() : lambda.r;
}

AxiomReport make_report(std::string id, std::string description, std::string counterexample) {
    AxiomReport r;
    r.axiom_id = std::move(id);
    r.description = std::move(description);
    r.counterexample = std::move(counterexample);
    r.passed = r.counterexample.empty();
    return r;
}

}  // namespace

void check_point(PrimeDim dim, DapgPoint alpha) {
    if (alpha.b < -1 || alpha.b >= dim.value() || alpha.m < 0 || alpha.m >= dim.value()) {
        throw Error("invalid DAPG point " + to_string(alpha) + " for d=" + std::to_string(dim.value()));
    }
}

void check_line(PrimeDim dim, DapgLine j) {
    if (j.m_minus1 < 0 || j.m_minus1 >= dim.value() || j.m0 < 0 || j.m0 >= dim.value()) {
        throw Error("invalid DAPG line " + to_string(j) + " for d=" + std::to_string(dim.value()));
    }
}

void check_apg_point(PrimeDim dim, ApgPoint p) {
    if (p.xi < 0 || p.xi >= dim.value() || p.eta < 0 || p.eta >= dim.value()) {
        throw Error("invalid APG point " + to_string(p) + " for d=" + std::to_string(dim.value()));
    }
}

void check_apg_line(PrimeDim dim, ApgLine lambda) {
    bool ok = lambda.s >= 0 && lambda.s < dim.value();
    if (lambda.kind == ApgLine::Kind::Sloped) ok = ok && lambda.r >= 0 && lambda.r < dim.value();
    if (!ok) {
        throw Error("invalid APG line " + to_string(lambda) + " for d=" + std::to_string(dim.value()));
    }
}

int point_index(PrimeDim dim, DapgPoint alpha) {
    check_point(dim, alpha);
    return (alpha.b + 1) * dim.value() + alpha.m;
}

DapgPoint point_from_index(PrimeDim dim, int idx) {
    DapgPoint alpha{idx % dim.value(), idx / dim.value() - 1};
    check_point(dim, alpha);
    return alpha;
}

int line_index(PrimeDim dim, DapgLine j) {
    check_line(dim, j);
    return j.m_minus1 * dim.value() + j.m0;
}

DapgLine line_from_index(PrimeDim dim, int idx) {
    DapgLine j{idx / dim.value(), idx % dim.value()};
    check_line(dim, j);
    return j;
}

int apg_point_index(PrimeDim dim, ApgPoint p) {
    check_apg_point(dim, p);
    return p.xi * dim.value() + p.eta;
}

ApgPoint apg_point_from_index(PrimeDim dim, int idx) {
    ApgPoint p{idx / dim.value(), idx % dim.value()};
    check_apg_point(dim, p);
    return p;
}

std::vector<DapgPoint> all_points(PrimeDim dim) {
    std::vector<DapgPoint> pts;
    pts.reserve(dim.value() * (dim.value() + 1));
    for (int b = -1; b < dim.value(); ++b) {
        for (int m = 0; m < dim.value(); ++m) pts.push_back({m, b});
    }
    return pts;
}

std::vector<DapgLine> all_lines(PrimeDim dim) {
    std::vector<DapgLine> lines;
    lines.reserve(dim.value() * dim.value());
    for (int m1 = 0; m1 < dim.value(); ++m1) {
        for (int m0 = 0; m0 < dim.value(); ++m0) lines.push_back({m1, m0});
    }
    return lines;
}

std::vector<ApgLine> all_apg_lines(PrimeDim dim) {
    std::vector<ApgLine> lines;
    lines.reserve(dim.value() * (dim.value() + 1));
    for (int r = 0; r < dim.value(); ++r) {
        for (int s = 0; s < dim.value(); ++s) lines.push_back(ApgLine::sloped(r, s));
    }
    for (int s = 0; s < dim.value(); ++s) lines.push_back(ApgLine::vertical(s));
    return lines;
}

std::vector<DapgPoint> line_points(PrimeDim dim, DapgLine j) {
    check_line(dim, j);
    std::vector<DapgPoint> pts;
    pts.reserve(dim.value() + 1);
    pts.push_back({j.m_minus1, kComputationalBasis});
    Residue half = inv2(dim);
    Residue c_minus1(2 * j.m_minus1 - 1, dim);  // c - 1 with c = 2 m(-1)
    Residue m0(j.m0, dim);
    for (int b = 0; b < dim.value(); ++b) {
        Residue m = half * Residue(b, dim) * c_minus1 + m0;
        pts.push_back({m.value(), b});
    }
    return pts;
}

std::vector<DapgLine> lines_through_point(PrimeDim dim, DapgPoint alpha) {
    check_point(dim, alpha);
    std::vector<DapgLine> lines;
    lines.reserve(dim.value());
    if (alpha.b == kComputationalBasis) {
        for (int m0 = 0; m0 < dim.value(); ++m0) lines.push_back({alpha.m, m0});
        return lines;
    }
    // Solve m(b) = inv2*b*(2*m1 - 1) + m0 for m0, per candidate m(-1).
    Residue half = inv2(dim);
    Residue b(alpha.b, dim);
    for (int m1 = 0; m1 < dim.value(); ++m1) {
        Residue m0 = Residue(alpha.m, dim) - half * b * Residue(2 * m1 - 1, dim);
        lines.push_back({m1, m0.value()});
    }
    return lines;
}

int incidence(PrimeDim dim, DapgPoint alpha, DapgLine j) {
    check_point(dim, alpha);
    check_line(dim, j);
    if (alpha.b == kComputationalBasis) return alpha.m == j.m_minus1 ? 1 : 0;
    std::int64_t half = (dim.value() + 1) / 2;
    int m = mod_reduce(half * alpha.b * (2 * j.m_minus1 - 1) + j.m0, dim);
    return m == alpha.m ? 1 : 0;
}

std::vector<AxiomReport> verify_dapg_axioms(PrimeDim dim) {
    const int d = dim.value();
    const auto points = all_points(dim);
    const auto lines = all_lines(dim);
    std::vector<AxiomReport> reports;

    // (a) d^2 lines of d+1 valid points each; the lines cover every point.
    {
        std::string bad;
        std::vector<int> covered(points.size(), 0);
        if (static_cast<int>(lines.size()) != d * d) bad = "line count != d^2";
        for (const auto& j : lines) {
            auto pts = line_points(dim, j);
            if (static_cast<int>(pts.size()) != d + 1) {
                bad = "line " + to_string(j) + " has " + std::to_string(pts.size()) + " points";
                break;
            }
            for (const auto& p : pts) covered[point_index(dim, p)] = 1;
        }
        if (bad.empty()) {
            for (std::size_t i = 0; i < covered.size(); ++i) {
                if (!covered[i]) {
                    bad = "point " + to_string(point_from_index(dim, static_cast<int>(i))) +
                          " lies on no line";
                    break;
                }
            }
        }
        reports.push_back(make_report(
            "DAPG(a)", std::to_string(d * d) + " lines over " + std::to_string(d * (d + 1)) + " points",
            bad));
    }

    // (b) two distinct lines share exactly one point; two points in different
    // columns lie on exactly one common line.
    {
        std::string bad;
        for (std::size_t i = 0; i + 1 < lines.size() && bad.empty(); ++i) {
            for (std::size_t k = i + 1; k < lines.size(); ++k) {
                int shared = 0;
                for (const auto& p : line_points(dim, lines[i])) {
                    shared += incidence(dim, p, lines[k]);
                }
                if (shared != 1) {
                    bad = "lines " + to_string(lines[i]) + " and " + to_string(lines[k]) +
                          " share " + std::to_string(shared) + " points";
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < points.size() && bad.empty(); ++i) {
            for (std::size_t k = i + 1; k < points.size(); ++k) {
                if (points[i].b == points[k].b) continue;
                int joining = 0;
                for (const auto& j : lines) {
                    joining += incidence(dim, points[i], j) & incidence(dim, points[k], j);
                }
                if (joining != 1) {
                    bad = "points " + to_string(points[i]) + " and " + to_string(points[k]) +
                          " lie on " + std::to_string(joining) + " common lines";
                    break;
                }
            }
        }
        reports.push_back(make_report("DAPG(b)", "two lines share one point; two cross-column points span one line", bad));
    }

    // (c) every point on exactly d lines; every line has d+1 points.
    {
        std::string bad;
        for (const auto& p : points) {
            int deg = 0;
            for (const auto& j : lines) deg += incidence(dim, p, j);
            auto through = lines_through_point(dim, p);
            bool all_contain = std::all_of(through.begin(), through.end(), [&](const DapgLine& j) {
                return incidence(dim, p, j) == 1;
            });
            if (deg != d || static_cast<int>(through.size()) != d || !all_contain) {
                bad = "point " + to_string(p) + " lies on " + std::to_string(deg) + " lines";
                break;
            }
        }
        reports.push_back(make_report("DAPG(c)", "each point on d lines, each line has d+1 points", bad));
    }

    // (d) the d+1 columns are disjoint d-sets and no line meets a column twice.
    {
        std::string bad;
        for (const auto& j : lines) {
            auto pts = line_points(dim, j);
            std::vector<int> seen(d + 1, 0);
            for (const auto& p : pts) {
                if (seen[p.b + 1]++) {
                    bad = "line " + to_string(j) + " meets column b=" + std::to_string(p.b) + " twice";
                }
            }
            if (!bad.empty()) break;
        }
        if (bad.empty() && static_cast<int>(points.size()) != d * (d + 1)) bad = "point count != d(d+1)";
        reports.push_back(make_report("DAPG(d)", "columns partition the points into d+1 disjoint d-sets", bad));
    }

    // (e) any two points in different columns are joined by a line.
    {
        std::string bad;
        for (std::size_t i = 0; i < points.size() && bad.empty(); ++i) {
            for (std::size_t k = i + 1; k < points.size(); ++k) {
                if (points[i].b == points[k].b) continue;
                bool joined = false;
                for (const auto& j : lines_through_point(dim, points[i])) {
                    if (incidence(dim, points[k], j)) { joined = true; break; }
                }
                if (!joined) {
                    bad = "points " + to_string(points[i]) + " and " + to_string(points[k]) + " are not joined";
                    break;
                }
            }
        }
        reports.push_back(make_report("DAPG(e)", "cross-column points are connected", bad));
    }

    return reports;
}

std::vector<ApgPoint> apg_line_points(PrimeDim dim, ApgLine lambda) {
    check_apg_line(dim, lambda);
    std::vector<ApgPoint> pts;
    pts.reserve(dim.value());
    if (lambda.kind == ApgLine::Kind::Vertical) {
        for (int eta = 0; eta < dim.value(); ++eta) pts.push_back({lambda.s, eta});
        return pts;
    }
    for (int xi = 0; xi < dim.value(); ++xi) {
        pts.push_back({xi, mod_reduce(std::int64_t{lambda.r} * xi + lambda.s, dim)});
    }
    return pts;
}

std::vector<AxiomReport> verify_apg_axioms(PrimeDim dim) {
    const int d = dim.value();
    const auto lines = all_apg_lines(dim);
    std::vector<AxiomReport> reports;

    std::vector<ApgPoint> points;
    points.reserve(d * d);
    for (int xi = 0; xi < d; ++xi) {
        for (int eta = 0; eta < d; ++eta) points.push_back({xi, eta});
    }

    // (a) d^2 points, d(d+1) lines, each line d points.
    {
        std::string bad;
        if (static_cast<int>(lines.size()) != d * (d + 1)) bad = "line count != d(d+1)";
        for (const auto& lam : lines) {
            auto pts = apg_line_points(dim, lam);
            if (static_cast<int>(pts.size()) != d) {
                bad = "line " + to_string(lam) + " has " + std::to_string(pts.size()) + " points";
                break;
            }
            for (std::size_t i = 0; i < pts.size(); ++i) {
                for (std::size_t k = i + 1; k < pts.size(); ++k) {
                    if (pts[i] == pts[k]) bad = "line " + to_string(lam) + " repeats a point";
                }
            }
        }
        reports.push_back(make_report(
            "APG(a)", std::to_string(d * d) + " points, " + std::to_string(d * (d + 1)) + " lines of d points",
            bad));
    }

    // (b) any two distinct points lie on exactly one line.
    {
        std::string bad;
        for (std::size_t i = 0; i < points.size() && bad.empty(); ++i) {
            for (std::size_t k = i + 1; k < points.size(); ++k) {
                int joining = 0;
                for (const auto& lam : lines) {
                    joining += apg_contains(dim, lam, points[i]) && apg_contains(dim, lam, points[k]);
                }
                if (joining != 1) {
                    bad = "points " + to_string(points[i]) + " and " + to_string(points[k]) +
                          " lie on " + std::to_string(joining) + " lines";
                    break;
                }
            }
        }
        reports.push_back(make_report("APG(b)", "unique joining line for every point pair", bad));
    }

    // (c) each point on d+1 lines; parallel postulate.
    {
        std::string bad;
        for (const auto& p : points) {
            int deg = 0;
            for (const auto& lam : lines) deg += apg_contains(dim, lam, p);
            if (deg != d + 1) {
                bad = "point " + to_string(p) + " lies on " + std::to_string(deg) + " lines";
                break;
            }
        }
        for (std::size_t li = 0; li < lines.size() && bad.empty(); ++li) {
            for (const auto& p : points) {
                if (apg_contains(dim, lines[li], p)) continue;
                int parallels = 0;
                for (const auto& other : lines) {
                    if (other == lines[li] || !apg_contains(dim, other, p)) continue;
                    bool meets = false;
                    for (const auto& q : apg_line_points(dim, other)) {
                        if (apg_contains(dim, lines[li], q)) { meets = true; break; }
                    }
                    if (!meets) ++parallels;
                }
                if (parallels != 1) {
                    bad = "point " + to_string(p) + " off line " + to_string(lines[li]) + " has " +
                          std::to_string(parallels) + " parallels";
                    break;
                }
            }
            if (!bad.empty()) break;
        }
        reports.push_back(make_report("APG(c)", "each point on d+1 lines; parallel postulate", bad));
    }

    // (d) d+1 parallel classes of d lines, each partitioning the points.
    {
        std::string bad;
        for (int cls = 0; cls <= d && bad.empty(); ++cls) {
            std::vector<int> covered(d * d, 0);
            int members = 0;
            for (const auto& lam : lines) {
                if (apg_class(dim, lam) != cls) continue;
                ++members;
                for (const auto& p : apg_line_points(dim, lam)) {
                    if (covered[apg_point_index(dim, p)]++) {
                        bad = "class " + std::to_string(cls) + " covers " + to_string(p) + " twice";
                    }
                }
            }
            if (bad.empty() && members != d) {
                bad = "class " + std::to_string(cls) + " has " + std::to_string(members) + " lines";
            }
            if (bad.empty()) {
                for (int i = 0; i < d * d; ++i) {
                    if (!covered[i]) {
                        bad = "class " + std::to_string(cls) + " misses " +
                              to_string(apg_point_from_index(dim, i));
                        break;
                    }
                }
            }
        }
        reports.push_back(make_report("APG(d)", "d+1 parallel classes of d lines partition the points", bad));
    }

    // (e) lines of different classes meet in exactly one point.
    {
        std::string bad;
        for (std::size_t i = 0; i + 1 < lines.size() && bad.empty(); ++i) {
            for (std::size_t k = i + 1; k < lines.size(); ++k) {
                if (apg_class(dim, lines[i]) == apg_class(dim, lines[k])) continue;
                int shared = 0;
                for (const auto& p : apg_line_points(dim, lines[i])) {
                    shared += apg_contains(dim, lines[k], p);
                }
                if (shared != 1) {
                    bad = "lines " + to_string(lines[i]) + " and " + to_string(lines[k]) +
                          " share " + std::to_string(shared) + " points";
                    break;
                }
            }
        }
        reports.push_back(make_report("APG(e)", "cross-class lines intersect exactly once", bad));
    }

    return reports;
}

ApgPoint duality_map(PrimeDim dim, DapgLine j) {
    check_line(dim, j);
    return {j.m_minus1, j.m0};
}

DapgLine duality_inverse(PrimeDim dim, ApgPoint p) {
    check_apg_point(dim, p);
    return {p.xi, p.eta};
}

DapgPoint apg_common_dapg_point(PrimeDim dim, ApgLine lambda) {
    check_apg_line(dim, lambda);
    if (lambda.kind == ApgLine::Kind::Vertical) return {lambda.s, kComputationalBasis};
    Residue m = inv2(dim) * Residue(lambda.r, dim) + Residue(lambda.s, dim);
    int b = mod_reduce(-lambda.r, dim);
    return {m.value(), b};
}

std::string to_string(const DapgPoint& alpha) {
    return "(m=" + std::to_string(alpha.m) + ",b=" + std::to_string(alpha.b) + ")";
}

std::string to_string(const DapgLine& j) {
    return "(" + std::to_string(j.m_minus1) + "," + std::to_string(j.m0) + ")";
}

std::string to_string(const ApgPoint& p) {
    return "(xi=" + std::to_string(p.xi) + ",eta=" + std::to_string(p.eta) + ")";
}

std::string to_string(const ApgLine& lambda) {
    if (lambda.kind == ApgLine::Kind::Vertical) return "[xi=" + std::to_string(lambda.s) + "]";
    return "[eta=" + std::to_string(lambda.r) + "*xi+" + std::to_string(lambda.s) + "]";
}

}  // namespace fgrt
