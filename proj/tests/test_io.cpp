#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "fgrt/io.hpp"
#include "fgrt/tomography.hpp"

using namespace fgrt;

namespace {

// Unique scratch path per test file run.
std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "fgrt_io_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("density files roundtrip bit-exactly") {
    const PrimeDim dim(5);
    const DensityOperator rho = random_mixed(dim, 4, 808);
    const auto path = scratch("rho.json");
    write_density(path, rho);
    const DensityOperator back = read_density(path);
    CHECK(back.dim == dim);
    CHECK(max_abs_diff(back.matrix, rho.matrix) == 0.0);
}

TEST_CASE("read_density rejects broken input") {
    CHECK_THROWS_AS(read_density(scratch("missing.json")), IoError);

    const auto bad_json = scratch("bad.json");
    write_text_file(bad_json, "{not json");
    CHECK_THROWS_AS(read_density(bad_json), IoError);

    const auto bad_dim = scratch("bad_dim.json");
    write_text_file(bad_dim, R"({"d": 4, "re": [[1]], "im": [[0]]})");
    CHECK_THROWS_AS(read_density(bad_dim), Error);

    const auto wrong_shape = scratch("wrong_shape.json");
    write_text_file(wrong_shape, R"({"d": 3, "re": [[1, 0], [0, 0]], "im": [[0, 0], [0, 0]]})");
    CHECK_THROWS_AS(read_density(wrong_shape), IoError);

    // Valid JSON, wrong physics: trace 2.
    const auto bad_trace = scratch("bad_trace.json");
    write_text_file(bad_trace,
                    R"({"d": 3, "re": [[1,0,0],[0,1,0],[0,0,0]], "im": [[0,0,0],[0,0,0],[0,0,0]]})");
    CHECK_THROWS_AS(read_density(bad_trace), Error);
}

TEST_CASE("probability-table files roundtrip") {
    const PrimeDim dim(3);
    const OperatorTable ops(dim);
    const ProbabilityTable table = radon_forward(random_mixed(dim, 2, 33), ops);
    const auto path = scratch("probs.json");
    write_prob_table(path, table);
    const ProbabilityTable back = read_prob_table(path);
    CHECK(back.dim == dim);
    for (int b = -1; b < 3; ++b) {
        for (int m = 0; m < 3; ++m) CHECK(back.at(m, b) == table.at(m, b));
    }
}

TEST_CASE("probability-table parsing demands all bases exactly once") {
    const auto missing = scratch("missing_basis.json");
    write_text_file(missing, R"({"d": 3, "tables": [
        {"basis": -1, "probabilities": [1, 0, 0]},
        {"basis": 0, "probabilities": [0.3, 0.3, 0.4]},
        {"basis": 1, "probabilities": [0.3, 0.3, 0.4]}]})");
    CHECK_THROWS_AS(read_prob_table(missing), IoError);

    const auto duplicate = scratch("dup_basis.json");
    write_text_file(duplicate, R"({"d": 3, "tables": [
        {"basis": -1, "probabilities": [1, 0, 0]},
        {"basis": -1, "probabilities": [1, 0, 0]},
        {"basis": 0, "probabilities": [0.3, 0.3, 0.4]},
        {"basis": 1, "probabilities": [0.3, 0.3, 0.4]}]})");
    CHECK_THROWS_AS(read_prob_table(duplicate), IoError);
}

TEST_CASE("quasi-distribution CSV roundtrips") {
    const PrimeDim dim(3);
    const OperatorTable ops(dim);
    const QuasiDist v = quasi_dist(random_mixed(dim, 3, 71), ops);
    const auto path = scratch("quasi.csv");
    write_quasi_csv(path, v);

    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 10);  // header + d^2 rows
    CHECK(lines[0] == "m_minus1,m0,value");

    const QuasiDist back = read_quasi_csv(path, dim);
    for (int idx = 0; idx < 9; ++idx) CHECK(back.values[idx] == v.values[idx]);
}

TEST_CASE("APG quasi-distribution CSV uses plane coordinates") {
    const PrimeDim dim(3);
    const OperatorTable ops(dim);
    const ApgQuasiDist v = apg_quasi(random_mixed(dim, 3, 72), ops);
    const auto path = scratch("apg_quasi.csv");
    write_apg_quasi_csv(path, v);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 10);
    CHECK(lines[0] == "xi,eta,value");
}

TEST_CASE("incidence CSV lists every point-line pair") {
    const PrimeDim dim(3);
    const auto path = scratch("incidence.csv");
    write_incidence_csv(path, dim);
    const auto lines = read_lines(path);
    REQUIRE(lines.size() == 1 + 12 * 9);  // header + d(d+1) * d^2
    CHECK(lines[0] == "alpha_index,j_index,lambda");

    // Point (1,-1) has index 1; line (1,2) has index 5; they are incident.
    bool incident_row = false;
    bool vacant_row = false;
    for (const auto& line : lines) {
        if (line == "1,5,1") incident_row = true;
        if (line == "0,5,0") vacant_row = true;
    }
    CHECK(incident_row);
    CHECK(vacant_row);
}

TEST_CASE("format_double emits shortest round-trip decimals") {
    CHECK(format_double(0.25) == "0.25");
    CHECK(format_double(0.0) == "0");
    for (double x : {1.0 / 3.0, 0.1, 1e-17, -2.5, 3.0, 1e300}) {
        const std::string s = format_double(x);
        CHECK(std::strtod(s.c_str(), nullptr) == x);
    }
}
