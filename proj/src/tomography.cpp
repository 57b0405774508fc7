#include "fgrt/tomography.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>

#include "fgrt/io.hpp"

namespace fgrt {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform_open();
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi_v<double> * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

DensityOperator random_pure(PrimeDim dim, std::uint64_t seed) {
    const int d = dim.value();
    Rng rng(seed);
    StateVector psi(d);
    for (int n = 0; n < d; ++n) psi(n) = rng.complex_normal();
    psi /= psi.norm();
    return {dim, psi * psi.adjoint()};
}

DensityOperator random_mixed(PrimeDim dim, int rank, std::uint64_t seed) {
    const int d = dim.value();
    if (rank < 1 || rank > d) {
        throw BadRankError("rank must lie in [1, " + std::to_string(d) + "], got " +
                           std::to_string(rank));
    }
    Rng rng(seed);
    ComplexMatrix g(d, rank);
    for (int n = 0; n < d; ++n) {
        for (int k = 0; k < rank; ++k) g(n, k) = rng.complex_normal();
    }
    ComplexMatrix rho = g * g.adjoint();
    return {dim, rho / rho.trace().real()};
}

ProbabilityTable sample_table(const DensityOperator& rho, const OperatorTable& ops,
                              std::optional<long long> shots, std::uint64_t seed, double eps) {
    ProbabilityTable exact = radon_forward(rho, ops);
    if (!shots) return exact;
    if (*shots < 1) throw Error("shots must be >= 1");
    const int d = rho.dim.value();
    Rng rng(seed);
    ProbabilityTable empirical = make_prob_table(rho.dim);
    std::vector<double> cumulative(d);
    std::vector<long long> counts(d);
    for (int b = -1; b < d; ++b) {
        double running = 0.0;
        for (int m = 0; m < d; ++m) {
            double p = exact.at(m, b);
            if (p < -eps) {
                throw NegativeProbabilityError("p(m=" + std::to_string(m) + ",b=" +
                                               std::to_string(b) + ") = " + std::to_string(p));
            }
            running += std::max(p, 0.0);
            cumulative[m] = running;
        }
        std::fill(counts.begin(), counts.end(), 0);
        const double total = cumulative[d - 1];
        for (long long t = 0; t < *shots; ++t) {
            double u = rng.uniform() * total;
            int m = static_cast<int>(
                std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
            counts[std::min(m, d - 1)]++;
        }
        // Close the row to an exact sum of 1 (the divisions round individually).
        double partial = 0.0;
        for (int m = 0; m < d - 1; ++m) {
            empirical.at(m, b) = static_cast<double>(counts[m]) / static_cast<double>(*shots);
            partial += empirical.at(m, b);
        }
        empirical.at(d - 1, b) = 1.0 - partial;
    }
    return empirical;
}

namespace {

constexpr std::uint64_t kStateStream = 0x517cc1b727220a95ULL;
constexpr std::uint64_t kSampleStream = 0x2545f4914f6cdd1dULL;

DensityOperator make_state(const ExperimentConfig& cfg) {
    std::uint64_t state_seed = mix_seed(cfg.seed ^ kStateStream);
    switch (cfg.state.kind) {
        case StateSpec::Kind::PureRandom:
            return random_pure(cfg.dim, state_seed);
        case StateSpec::Kind::MixedRandom:
            return random_mixed(cfg.dim, cfg.state.rank, state_seed);
        case StateSpec::Kind::File: {
            DensityOperator rho = read_density(cfg.state.path);
            if (rho.dim != cfg.dim) {
                throw DimensionMismatchError("state file dimension does not match --dim");
            }
            return rho;
        }
    }
    throw Error("unreachable state kind");
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& cfg, const OperatorTable& ops) {
    const auto start = std::chrono::steady_clock::now();
    const int d = cfg.dim.value();

    DensityOperator rho = make_state(cfg);
    std::uint64_t sample_seed = mix_seed(cfg.seed ^ kSampleStream);
    if (cfg.shots) sample_seed = mix_seed(sample_seed ^ static_cast<std::uint64_t>(*cfg.shots));
    ProbabilityTable table = sample_table(rho, ops, cfg.shots, sample_seed);
    DensityOperator recon = reconstruct_state(table, ops);

    ExperimentReport report;
    report.seed = cfg.seed;
    report.min_eigenvalue = min_eigenvalue(recon.matrix);

    ProbabilityTable exact = radon_forward(rho, ops);
    report.basis_deviation.reserve(d + 1);
    for (int b = -1; b < d; ++b) {
        double dev = 0.0;
        for (int m = 0; m < d; ++m) dev = std::max(dev, std::abs(table.at(m, b) - exact.at(m, b)));
        report.basis_deviation.push_back(dev);
    }

    DensityOperator compared = recon;
    if (cfg.project_psd) {
        compared = project_psd(recon);
    } else if (report.min_eigenvalue < -comparison_eps()) {
        // fidelity needs a PSD argument; clip without renormalizing and flag it
        report.fidelity_approximate = true;
    }
    report.trace_distance = trace_distance(rho.matrix, compared.matrix);
    report.fidelity = fidelity(rho.matrix, compared.matrix);

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace fgrt
