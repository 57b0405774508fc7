#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "fgrt/phase_space.hpp"

namespace fgrt {

/// Deterministic, seedable random source. The engine is mt19937_64, whose
/// output sequence is fixed by the standard; uniform and normal variates are
/// derived with explicit formulas (53-bit mantissa scaling, Box-Muller)
/// instead of the implementation-defined std distributions, so identical
/// seeds reproduce identical experiments on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform on [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe under log().
    double uniform_open() { return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; generates in pairs.
    double normal();

    std::complex<double> complex_normal() {
        double re = normal();
        double im = normal();
        return {re, im};
    }

private:
    std::mt19937_64 eng_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// splitmix64 step, used to derive independent sub-seeds from one user seed.
std::uint64_t mix_seed(std::uint64_t x);

/// Haar-like random pure state |psi><psi| (normalized i.i.d. complex
/// Gaussian amplitudes). Deterministic for a fixed seed.
DensityOperator random_pure(PrimeDim dim, std::uint64_t seed);

/// G G^dagger / tr for a d x rank complex Gaussian G. Throws BadRankError
/// unless 1 <= rank <= d.
DensityOperator random_mixed(PrimeDim dim, int rank, std::uint64_t seed);

/// Finite-shot MUB measurement simulation: every basis is measured
/// independently on `shots` copies by categorical draws from the exact
/// probabilities, and empirical frequencies are returned (each row sums to
/// exactly 1). shots = nullopt returns the exact radon_forward table.
/// Throws NegativeProbabilityError if an exact probability is below -eps.
ProbabilityTable sample_table(const DensityOperator& rho, const OperatorTable& ops,
                              std::optional<long long> shots, std::uint64_t seed,
                              double eps = comparison_eps());

struct StateSpec {
    enum class Kind { PureRandom, MixedRandom, File };
    Kind kind = Kind::PureRandom;
    int rank = 1;          // MixedRandom only
    std::string path;      // File only

    static StateSpec pure() { return {Kind::PureRandom, 1, {}}; }
    static StateSpec mixed(int rank) { return {Kind::MixedRandom, rank, {}}; }
    static StateSpec file(std::string path) { return {Kind::File, 1, std::move(path)}; }
};

struct ExperimentConfig {
    PrimeDim dim;
    std::optional<long long> shots;  // nullopt = exact probabilities
    StateSpec state;
    std::uint64_t seed = 0;
    bool project_psd = false;
};

struct ExperimentReport {
    std::uint64_t seed = 0;
    double fidelity = 0.0;
    double trace_distance = 0.0;
    double min_eigenvalue = 0.0;          // of the raw reconstruction
    bool fidelity_approximate = false;    // spectrum was clipped without --project-psd
    std::vector<double> basis_deviation;  // max |empirical - exact| per basis
    double elapsed_seconds = 0.0;
};

/// Generate the state, sample (or take exact probabilities), reconstruct,
/// and compare against the source state.
ExperimentReport run_experiment(const ExperimentConfig& cfg, const OperatorTable& ops);

}  // namespace fgrt
