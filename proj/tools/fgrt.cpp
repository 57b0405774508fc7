// fgrt: command-line front end for the finite-geometry MUB tomography
// library. Subcommands cover geometry verification, operator dumps, the
// Radon transform in both directions, quasi-distribution export, finite-shot
// simulation and the identity selftest.
//
// Exit codes: 0 success, 1 computation/validation failure, 2 usage error.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fgrt/errors.hpp"
#include "fgrt/geometry.hpp"
#include "fgrt/io.hpp"
#include "fgrt/operators.hpp"
#include "fgrt/phase_space.hpp"
#include "fgrt/selftest.hpp"
#include "fgrt/tomography.hpp"

namespace {

using nlohmann::ordered_json;

bool print_axiom_reports(const std::vector<fgrt::AxiomReport>& reports) {
    bool all = true;
    for (const fgrt::AxiomReport& r : reports) {
        if (r.passed) {
            std::cout << "PASS " << r.axiom_id << ": " << r.description << "\n";
        } else {
            std::cout << "FAIL " << r.axiom_id << ": " << r.description << " ["
                      << r.counterexample << "]\n";
            all = false;
        }
    }
    return all;
}

ordered_json report_to_json(const fgrt::ExperimentReport& r) {
    ordered_json j;
    j["seed"] = r.seed;
    j["fidelity"] = r.fidelity;
    j["trace_distance"] = r.trace_distance;
    j["min_eigenvalue"] = r.min_eigenvalue;
    j["fidelity_approximate"] = r.fidelity_approximate;
    j["basis_deviation"] = r.basis_deviation;
    j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

// "exact" or a positive shot count; checked at parse time so a malformed
// value is a usage error, not a computation failure.
const CLI::Validator kShotsValidator(
    [](std::string& s) -> std::string {
        if (s == "exact" || all_digits(s)) return {};
        return "--shots takes a positive integer or \"exact\"";
    },
    "N|exact");

const CLI::Validator kStateSpecValidator(
    [](std::string& s) -> std::string {
        if (s == "pure") return {};
        if (s.rfind("mixed:", 0) == 0)
            return all_digits(s.substr(6)) ? std::string{}
                                           : "mixed rank must be a positive integer";
        if (s.rfind("file:", 0) == 0 && s.size() > 5) return {};
        return "--state takes pure, mixed:<rank>, or file:<path>";
    },
    "pure|mixed:r|file:PATH");

fgrt::StateSpec parse_state_spec(const std::string& s) {
    if (s == "pure") return fgrt::StateSpec::pure();
    if (s.rfind("mixed:", 0) == 0) return fgrt::StateSpec::mixed(std::stoi(s.substr(6)));
    return fgrt::StateSpec::file(s.substr(5));
}

void emit(const ordered_json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        fgrt::write_text_file(out_path, j.dump(2) + "\n");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-geometry MUB operators, Radon transform and tomography simulator"};
    app.require_subcommand(1);

    // geometry
    CLI::App* geometry = app.add_subcommand("geometry", "Incidence-structure checks and exports");
    geometry->require_subcommand(1);

    int geo_dim = 0;
    bool geo_apg = false;
    bool geo_dapg = false;
    bool geo_both = false;
    CLI::App* geo_check = geometry->add_subcommand("check", "Verify the plane axioms");
    geo_check->add_option("--dim", geo_dim, "Odd prime dimension")->required();
    CLI::Option* opt_apg = geo_check->add_flag("--apg", geo_apg, "Affine plane only");
    CLI::Option* opt_dapg = geo_check->add_flag("--dapg", geo_dapg, "Dual affine plane only");
    CLI::Option* opt_both = geo_check->add_flag("--both", geo_both, "Both planes (default)");
    opt_apg->excludes(opt_dapg)->excludes(opt_both);
    opt_dapg->excludes(opt_both);

    int inc_dim = 0;
    std::string inc_out;
    CLI::App* geo_inc = geometry->add_subcommand("incidence", "Export the incidence table as CSV");
    geo_inc->add_option("--dim", inc_dim, "Odd prime dimension")->required();
    geo_inc->add_option("--out", inc_out, "Output CSV path")->required();

    // mub
    int mub_dim = 0;
    int mub_basis = 0;
    int mub_m = 0;
    CLI::App* mub = app.add_subcommand("mub", "Print the amplitudes of one MUB state");
    mub->add_option("--dim", mub_dim, "Odd prime dimension")->required();
    mub->add_option("--basis", mub_basis, "Basis label b (-1 for computational)")->required();
    mub->add_option("--state", mub_m, "State label m in [0, d-1]")->required();

    // op point / op line
    CLI::App* op = app.add_subcommand("op", "Print a point or line operator as JSON");
    op->require_subcommand(1);
    int opp_dim = 0, opp_m = 0, opp_b = 0;
    CLI::App* op_point = op->add_subcommand("point", "Rank-1 MUB projector A at (m, b)");
    op_point->add_option("--dim", opp_dim, "Odd prime dimension")->required();
    op_point->add_option("--m", opp_m, "Row label m")->required();
    op_point->add_option("--b", opp_b, "Basis label b (-1 for computational)")->required();
    int opl_dim = 0, opl_m1 = 0, opl_m0 = 0;
    CLI::App* op_line = op->add_subcommand("line", "Line operator P at (m(-1), m(0))");
    op_line->add_option("--dim", opl_dim, "Odd prime dimension")->required();
    op_line->add_option("--m1", opl_m1, "Computational-basis row m(-1)")->required();
    op_line->add_option("--m0", opl_m0, "b=0 row m(0)")->required();

    // quasi
    std::string quasi_state, quasi_out;
    bool quasi_apg = false;
    CLI::App* quasi = app.add_subcommand("quasi", "Export the quasi-distribution of a state");
    quasi->add_option("--state", quasi_state, "Density-matrix JSON file")->required();
    quasi->add_option("--out", quasi_out, "Output CSV path")->required();
    quasi->add_flag("--apg", quasi_apg, "Use affine-plane (xi, eta) coordinates");

    // radon forward / radon invert
    CLI::App* radon = app.add_subcommand("radon", "Forward transform and exact inversion");
    radon->require_subcommand(1);
    std::string fwd_state, fwd_out;
    CLI::App* radon_fwd = radon->add_subcommand("forward", "State to MUB probability table");
    radon_fwd->add_option("--state", fwd_state, "Density-matrix JSON file")->required();
    radon_fwd->add_option("--out", fwd_out, "Output probability-table JSON path")->required();
    std::string inv_probs, inv_out;
    bool inv_project = false;
    CLI::App* radon_inv = radon->add_subcommand("invert", "Probability table back to a state");
    radon_inv->add_option("--probs", inv_probs, "Probability-table JSON file")->required();
    radon_inv->add_option("--out", inv_out, "Output density-matrix JSON path")->required();
    radon_inv->add_flag("--project-psd", inv_project,
                        "Clip negative eigenvalues and renormalize before writing");

    // simulate
    int sim_dim = 0;
    std::string sim_shots = "exact";
    std::string sim_state = "pure";
    std::uint64_t sim_seed = 0;
    int sim_repeat = 1;
    bool sim_project = false;
    std::string sim_out;
    CLI::App* simulate = app.add_subcommand("simulate", "Finite-shot tomography experiment");
    simulate->add_option("--dim", sim_dim, "Odd prime dimension")->required();
    simulate->add_option("--shots", sim_shots, "Shots per basis, or \"exact\"")
        ->required()
        ->check(kShotsValidator);
    simulate->add_option("--state", sim_state, "Source state: pure, mixed:<rank>, file:<path>")
        ->required()
        ->check(kStateSpecValidator);
    simulate->add_option("--seed", sim_seed, "RNG seed")->required();
    simulate->add_option("--repeat", sim_repeat, "Number of runs (seeds S, S+1, ...)")
        ->check(CLI::PositiveNumber);
    simulate->add_flag("--project-psd", sim_project,
                       "Project the reconstruction onto PSD before comparing");
    simulate->add_option("--out", sim_out, "Report JSON path (default: stdout)");

    // selftest
    int self_dim = 0;
    CLI::App* selftest = app.add_subcommand("selftest", "Run the full identity battery");
    selftest->add_option("--dim", self_dim, "Odd prime dimension")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (geo_check->parsed()) {
            const fgrt::PrimeDim dim = fgrt::validate_dim(geo_dim);
            bool ok = true;
            if (!geo_apg) ok = print_axiom_reports(fgrt::verify_dapg_axioms(dim)) && ok;
            if (!geo_dapg) ok = print_axiom_reports(fgrt::verify_apg_axioms(dim)) && ok;
            return ok ? 0 : 1;
        }
        if (geo_inc->parsed()) {
            const fgrt::PrimeDim dim = fgrt::validate_dim(inc_dim);
            fgrt::write_incidence_csv(inc_out, dim);
            std::cout << "wrote incidence table for d=" << dim.value() << " to " << inc_out
                      << "\n";
            return 0;
        }
        if (mub->parsed()) {
            const fgrt::PrimeDim dim = fgrt::validate_dim(mub_dim);
            const fgrt::StateVector psi = fgrt::mub_state(dim, mub_m, mub_basis);
            ordered_json j;
            j["d"] = dim.value();
            j["basis"] = mub_basis;
            j["state"] = mub_m;
            std::vector<double> re, im;
            for (int n = 0; n < dim.value(); ++n) {
                re.push_back(psi(n).real());
                im.push_back(psi(n).imag());
            }
            j["re"] = re;
            j["im"] = im;
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (op_point->parsed()) {
            const fgrt::PrimeDim dim = fgrt::validate_dim(opp_dim);
            const fgrt::ComplexMatrix a = fgrt::point_operator(dim, {opp_m, opp_b});
            std::cout << fgrt::matrix_to_json(dim, a).dump(2) << "\n";
            return 0;
        }
        if (op_line->parsed()) {
            const fgrt::PrimeDim dim = fgrt::validate_dim(opl_dim);
            const fgrt::ComplexMatrix p = fgrt::line_operator(dim, {opl_m1, opl_m0});
            std::cout << fgrt::matrix_to_json(dim, p).dump(2) << "\n";
            return 0;
        }
        if (quasi->parsed()) {
            const fgrt::DensityOperator rho = fgrt::read_density(quasi_state);
            const fgrt::OperatorTable ops(rho.dim);
            if (quasi_apg) {
                fgrt::write_apg_quasi_csv(quasi_out, fgrt::apg_quasi(rho, ops));
            } else {
                fgrt::write_quasi_csv(quasi_out, fgrt::quasi_dist(rho, ops));
            }
            return 0;
        }
        if (radon_fwd->parsed()) {
            const fgrt::DensityOperator rho = fgrt::read_density(fwd_state);
            const fgrt::OperatorTable ops(rho.dim);
            fgrt::write_prob_table(fwd_out, fgrt::radon_forward(rho, ops));
            return 0;
        }
        if (radon_inv->parsed()) {
            const fgrt::ProbabilityTable table = fgrt::read_prob_table(inv_probs);
            const fgrt::OperatorTable ops(table.dim);
            fgrt::DensityOperator rho = fgrt::reconstruct_state(table, ops);
            const double min_eig = fgrt::min_eigenvalue(rho.matrix);
            std::cout << "min eigenvalue of reconstruction: " << fgrt::format_double(min_eig)
                      << "\n";
            if (inv_project) rho = fgrt::project_psd(rho);
            fgrt::write_density(inv_out, rho);
            return 0;
        }
        if (simulate->parsed()) {
            const fgrt::PrimeDim dim = fgrt::validate_dim(sim_dim);
            std::optional<long long> shots;
            if (sim_shots != "exact") shots = std::stoll(sim_shots);
            if (shots && *shots < 1) throw fgrt::Error("--shots must be at least 1");
            const fgrt::StateSpec spec = parse_state_spec(sim_state);
            const fgrt::OperatorTable ops(dim);
            std::vector<fgrt::ExperimentReport> reports;
            for (int k = 0; k < sim_repeat; ++k) {
                const fgrt::ExperimentConfig cfg{dim, shots, spec,
                                                 sim_seed + static_cast<std::uint64_t>(k),
                                                 sim_project};
                reports.push_back(fgrt::run_experiment(cfg, ops));
            }
            ordered_json out;
            if (sim_repeat == 1) {
                out = report_to_json(reports.front());
            } else {
                out = ordered_json::array();
                for (const fgrt::ExperimentReport& r : reports) out.push_back(report_to_json(r));
            }
            emit(out, sim_out);
            if (!sim_out.empty()) {
                for (const fgrt::ExperimentReport& r : reports) {
                    std::cout << "seed " << r.seed
                              << ": trace_distance=" << fgrt::format_double(r.trace_distance)
                              << " fidelity=" << fgrt::format_double(r.fidelity) << "\n";
                }
            }
            return 0;
        }
        if (selftest->parsed()) {
            const fgrt::PrimeDim dim = fgrt::validate_dim(self_dim);
            return fgrt::print_selftest(dim, std::cout) ? 0 : 1;
        }
    } catch (const fgrt::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
