#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "fgrt/io.hpp"
#include "fgrt/operators.hpp"
#include "fgrt/phase_space.hpp"
#include "fgrt/tomography.hpp"

using namespace fgrt;

namespace {

const std::filesystem::path kWorkDir = [] {
    auto dir = std::filesystem::temp_directory_path() / "fgrt_cli_tests";
    std::filesystem::create_directories(dir);
    return dir;
}();

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

/// Runs the CLI with the given argument string; captures exit code and both
/// streams. An env prefix like "FGRT_EPS=1e-3" may be prepended.
RunResult run_cli(const std::string& args, const std::string& env_prefix = {}) {
    const auto out_path = kWorkDir / "stdout.txt";
    const auto err_path = kWorkDir / "stderr.txt";
    std::string cmd = env_prefix.empty() ? std::string{} : env_prefix + " ";
    cmd += std::string(FGRT_CLI_PATH) + " " + args + " > " + out_path.string() + " 2> " +
           err_path.string();
    const int raw = std::system(cmd.c_str());
    REQUIRE(raw != -1);
    const int code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {code, slurp(out_path), slurp(err_path)};
}

}  // namespace

TEST_CASE("help exits 0, usage problems exit 2") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("geometry --help").exit_code == 0);
    CHECK(run_cli("simulate --help").exit_code == 0);

    CHECK(run_cli("").exit_code == 2);                // a subcommand is required
    CHECK(run_cli("--bogus").exit_code == 2);         // unknown flag
    CHECK(run_cli("frobnicate").exit_code == 2);      // unknown subcommand
    CHECK(run_cli("geometry check").exit_code == 2);  // missing --dim
    CHECK(run_cli("geometry check --dim 3 --apg --dapg").exit_code == 2);
    CHECK(run_cli("simulate --dim 3 --shots nope --state pure --seed 1").exit_code == 2);
    CHECK(run_cli("simulate --dim 3 --shots 10 --state blob --seed 1").exit_code == 2);
}

TEST_CASE("invalid values that parse are computation failures, exit 1") {
    const RunResult bad_dim = run_cli("selftest --dim 4");
    CHECK(bad_dim.exit_code == 1);
    CHECK(bad_dim.err.find("prime") != std::string::npos);

    CHECK(run_cli("geometry check --dim 9").exit_code == 1);
    CHECK(run_cli("radon forward --state " + (kWorkDir / "nope.json").string() + " --out " +
                  (kWorkDir / "out.json").string())
              .exit_code == 1);
    CHECK(run_cli("simulate --dim 3 --shots 10 --state mixed:9 --seed 1").exit_code == 1);
}

TEST_CASE("geometry check passes for valid dimensions") {
    const RunResult r = run_cli("geometry check --dim 7 --both");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS DAPG(a)") != std::string::npos);
    CHECK(r.out.find("PASS APG(e)") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const RunResult dapg_only = run_cli("geometry check --dim 3 --dapg");
    CHECK(dapg_only.exit_code == 0);
    CHECK(dapg_only.out.find("PASS APG(") == std::string::npos);
    CHECK(dapg_only.out.find("PASS DAPG(e)") != std::string::npos);
}

TEST_CASE("geometry incidence writes the full table") {
    const auto path = kWorkDir / "incidence.csv";
    std::filesystem::remove(path);
    CHECK(run_cli("geometry incidence --dim 3 --out " + path.string()).exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 1 + 12 * 9);
}

TEST_CASE("mub prints the amplitudes as JSON") {
    const RunResult r = run_cli("mub --dim 3 --basis 0 --state 0");
    REQUIRE(r.exit_code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["d"] == 3);
    REQUIRE(j["re"].size() == 3);
    const double amp = 1.0 / std::sqrt(3.0);
    for (int n = 0; n < 3; ++n) {
        CHECK(j["re"][n].get<double>() == doctest::Approx(amp).epsilon(1e-12));
        CHECK(j["im"][n].get<double>() == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(run_cli("mub --dim 3 --basis 5 --state 0").exit_code == 1);
}

TEST_CASE("op subcommands dump the operators") {
    const PrimeDim dim(3);
    SUBCASE("point operator") {
        const RunResult r = run_cli("op point --dim 3 --m 2 --b 0");
        REQUIRE(r.exit_code == 0);
        const ComplexMatrix m = matrix_from_json(nlohmann::json::parse(r.out), dim);
        CHECK(max_abs_diff(m, point_operator(dim, {2, 0})) < 1e-15);
    }
    SUBCASE("line operator") {
        const RunResult r = run_cli("op line --dim 3 --m1 1 --m0 2");
        REQUIRE(r.exit_code == 0);
        const ComplexMatrix m = matrix_from_json(nlohmann::json::parse(r.out), dim);
        CHECK(max_abs_diff(m, line_operator(dim, {1, 2})) < 1e-15);
    }
}

TEST_CASE("radon forward and invert roundtrip through files") {
    const PrimeDim dim(5);
    const auto state = kWorkDir / "state.json";
    const auto probs = kWorkDir / "probs.json";
    const auto back = kWorkDir / "back.json";
    const DensityOperator rho = random_mixed(dim, 4, 20240817);
    write_density(state, rho);

    CHECK(run_cli("radon forward --state " + state.string() + " --out " + probs.string())
              .exit_code == 0);
    const RunResult inv =
        run_cli("radon invert --probs " + probs.string() + " --out " + back.string());
    CHECK(inv.exit_code == 0);
    CHECK(inv.out.find("min eigenvalue") != std::string::npos);

    const DensityOperator recovered = read_density(back);
    CHECK(max_abs_diff(recovered.matrix, rho.matrix) <= 1e-9);
}

TEST_CASE("radon invert --project-psd writes a PSD state") {
    // A sampled table at few shots usually inverts to an indefinite matrix.
    const PrimeDim dim(3);
    const OperatorTable ops(dim);
    const DensityOperator rho = random_pure(dim, 5);
    const ProbabilityTable sampled = sample_table(rho, ops, 60, 97);
    const auto probs = kWorkDir / "sampled.json";
    const auto out = kWorkDir / "projected.json";
    write_prob_table(probs, sampled);

    CHECK(run_cli("radon invert --probs " + probs.string() + " --out " + out.string() +
                  " --project-psd")
              .exit_code == 0);
    const DensityOperator recovered = read_density(out);
    CHECK(min_eigenvalue(recovered.matrix) >= -1e-10);
    CHECK(std::abs(recovered.matrix.trace() - std::complex<double>(1.0)) < 1e-10);
}

TEST_CASE("quasi exports both coordinate systems") {
    const PrimeDim dim(3);
    const auto state = kWorkDir / "qstate.json";
    const auto dapg_csv = kWorkDir / "v.csv";
    const auto apg_csv = kWorkDir / "v_apg.csv";
    const DensityOperator rho = random_mixed(dim, 3, 606);
    write_density(state, rho);

    CHECK(run_cli("quasi --state " + state.string() + " --out " + dapg_csv.string()).exit_code ==
          0);
    const OperatorTable ops(dim);
    const QuasiDist direct = quasi_dist(rho, ops);
    const QuasiDist from_file = read_quasi_csv(dapg_csv, dim);
    for (int idx = 0; idx < 9; ++idx) CHECK(from_file.values[idx] == direct.values[idx]);

    CHECK(run_cli("quasi --state " + state.string() + " --out " + apg_csv.string() + " --apg")
              .exit_code == 0);
    CHECK(slurp(apg_csv).rfind("xi,eta,value", 0) == 0);
}

TEST_CASE("simulate writes reports with the promised fields") {
    const auto report_path = kWorkDir / "report.json";
    SUBCASE("exact single run") {
        const RunResult r = run_cli("simulate --dim 3 --shots exact --state pure --seed 5 --out " +
                                    report_path.string());
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(slurp(report_path));
        CHECK(j["seed"] == 5);
        CHECK(j["trace_distance"].get<double>() <= 1e-10);
        CHECK(j["fidelity"].get<double>() >= 1.0 - 1e-10);
        CHECK(j["fidelity_approximate"] == false);
        CHECK(j["basis_deviation"].size() == 4);
        CHECK(j.contains("min_eigenvalue"));
        CHECK(j.contains("elapsed_seconds"));
    }
    SUBCASE("repeat emits an array with advancing seeds") {
        const RunResult r = run_cli(
            "simulate --dim 3 --shots 1000 --state mixed:2 --seed 11 --repeat 3 --out " +
            report_path.string());
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(slurp(report_path));
        REQUIRE(j.is_array());
        REQUIRE(j.size() == 3);
        CHECK(j[0]["seed"] == 11);
        CHECK(j[2]["seed"] == 13);
    }
    SUBCASE("stdout JSON when --out is omitted") {
        const RunResult r = run_cli("simulate --dim 3 --shots exact --state mixed:3 --seed 2");
        REQUIRE(r.exit_code == 0);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["trace_distance"].get<double>() <= 1e-10);
    }
}

TEST_CASE("selftest passes at d=3 and honors FGRT_EPS") {
    const RunResult r = run_cli("selftest --dim 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("ok   radon-roundtrip") != std::string::npos);

    // A looser tolerance must also pass end to end.
    CHECK(run_cli("selftest --dim 3", "FGRT_EPS=1e-6").exit_code == 0);
}
