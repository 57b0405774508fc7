#include "fgrt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace fgrt {

namespace {

nlohmann::json parse_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError("cannot parse " + path.string() + ": " + e.what());
    }
    return j;
}

PrimeDim dim_from_json(const nlohmann::json& j) {
    if (!j.contains("d") || !j["d"].is_number_integer()) {
        throw IoError("missing integer field \"d\"");
    }
    return validate_dim(j["d"].get<int>());
}

}  // namespace

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    if (!out) throw IoError("failed writing " + path.string());
}

std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw IoError("cannot format double");
    return std::string(buf, ptr);
}

nlohmann::ordered_json matrix_to_json(PrimeDim dim, const ComplexMatrix& m) {
    nlohmann::ordered_json j;
    j["d"] = dim.value();
    nlohmann::ordered_json re = nlohmann::ordered_json::array();
    nlohmann::ordered_json im = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json re_row = nlohmann::ordered_json::array();
        nlohmann::ordered_json im_row = nlohmann::ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            re_row.push_back(m(r, c).real());
            im_row.push_back(m(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    j["re"] = std::move(re);
    j["im"] = std::move(im);
    return j;
}

ComplexMatrix matrix_from_json(const nlohmann::json& j, PrimeDim dim) {
    const int d = dim.value();
    if (!j.contains("re") || !j.contains("im")) throw IoError("matrix JSON needs \"re\" and \"im\"");
    const auto& re = j["re"];
    const auto& im = j["im"];
    if (static_cast<int>(re.size()) != d || static_cast<int>(im.size()) != d) {
        throw IoError("matrix JSON rows do not match d");
    }
    ComplexMatrix m(d, d);
    for (int r = 0; r < d; ++r) {
        if (static_cast<int>(re[r].size()) != d || static_cast<int>(im[r].size()) != d) {
            throw IoError("matrix JSON columns do not match d");
        }
        for (int c = 0; c < d; ++c) {
            m(r, c) = std::complex<double>(re[r][c].get<double>(), im[r][c].get<double>());
        }
    }
    return m;
}

void write_density(const std::filesystem::path& path, const DensityOperator& rho) {
    write_text_file(path, matrix_to_json(rho.dim, rho.matrix).dump(2) + "\n");
}

DensityOperator read_density(const std::filesystem::path& path) {
    nlohmann::json j = parse_json_file(path);
    PrimeDim dim = dim_from_json(j);
    return make_density(dim, matrix_from_json(j, dim));
}

nlohmann::ordered_json prob_table_to_json(const ProbabilityTable& table) {
    nlohmann::ordered_json j;
    j["d"] = table.dim.value();
    nlohmann::ordered_json tables = nlohmann::ordered_json::array();
    for (int b = -1; b < table.dim.value(); ++b) {
        nlohmann::ordered_json entry;
        entry["basis"] = b;
        entry["probabilities"] = table.rows[b + 1];
        tables.push_back(std::move(entry));
    }
    j["tables"] = std::move(tables);
    return j;
}

ProbabilityTable prob_table_from_json(const nlohmann::json& j) {
    PrimeDim dim = dim_from_json(j);
    const int d = dim.value();
    if (!j.contains("tables") || !j["tables"].is_array()) {
        throw IoError("probability table JSON needs a \"tables\" array");
    }
    ProbabilityTable table = make_prob_table(dim);
    std::vector<int> seen(d + 1, 0);
    for (const auto& entry : j["tables"]) {
        int b = entry.at("basis").get<int>();
        if (b < -1 || b >= d) throw IoError("basis label " + std::to_string(b) + " out of range");
        if (seen[b + 1]++) throw IoError("basis " + std::to_string(b) + " appears twice");
        const auto& probs = entry.at("probabilities");
        if (static_cast<int>(probs.size()) != d) {
            throw IoError("basis " + std::to_string(b) + " must list d probabilities");
        }
        for (int m = 0; m < d; ++m) table.at(m, b) = probs[m].get<double>();
    }
    for (int b = -1; b < d; ++b) {
        if (!seen[b + 1]) throw IoError("basis " + std::to_string(b) + " is missing");
    }
    return table;
}

void write_prob_table(const std::filesystem::path& path, const ProbabilityTable& table) {
    write_text_file(path, prob_table_to_json(table).dump(2) + "\n");
}

ProbabilityTable read_prob_table(const std::filesystem::path& path) {
    return prob_table_from_json(parse_json_file(path));
}

void write_quasi_csv(const std::filesystem::path& path, const QuasiDist& v) {
    std::ostringstream out;
    out << "m_minus1,m0,value\n";
    for (const auto& j : all_lines(v.dim)) {
        out << j.m_minus1 << ',' << j.m0 << ',' << format_double(v.at(j)) << '\n';
    }
    write_text_file(path, out.str());
}

void write_apg_quasi_csv(const std::filesystem::path& path, const ApgQuasiDist& v) {
    std::ostringstream out;
    out << "xi,eta,value\n";
    for (int idx = 0; idx < v.dim.value() * v.dim.value(); ++idx) {
        ApgPoint p = apg_point_from_index(v.dim, idx);
        out << p.xi << ',' << p.eta << ',' << format_double(v.values[idx]) << '\n';
    }
    write_text_file(path, out.str());
}

QuasiDist read_quasi_csv(const std::filesystem::path& path, PrimeDim dim) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw IoError("empty quasi-distribution file");
    const int d = dim.value();
    QuasiDist v{dim, std::vector<double>(d * d, 0.0)};
    std::vector<int> seen(d * d, 0);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string cell;
        int fields[2];
        for (int& f : fields) {
            if (!std::getline(row, cell, ',')) throw IoError("short row in " + path.string());
            f = std::stoi(cell);
        }
        if (!std::getline(row, cell, ',')) throw IoError("short row in " + path.string());
        DapgLine j{fields[0], fields[1]};
        int idx = line_index(dim, j);
        if (seen[idx]++) throw IoError("line " + to_string(j) + " appears twice");
        v.values[idx] = std::stod(cell);
    }
    for (int idx = 0; idx < d * d; ++idx) {
        if (!seen[idx]) throw IoError("missing line " + to_string(line_from_index(dim, idx)));
    }
    return v;
}

void write_incidence_csv(const std::filesystem::path& path, PrimeDim dim) {
    std::ostringstream out;
    out << "alpha_index,j_index,lambda\n";
    const auto points = all_points(dim);
    const auto lines = all_lines(dim);
    for (const auto& alpha : points) {
        for (const auto& j : lines) {
            out << point_index(dim, alpha) << ',' << line_index(dim, j) << ','
                << incidence(dim, alpha, j) << '\n';
        }
    }
    write_text_file(path, out.str());
}

}  // namespace fgrt
