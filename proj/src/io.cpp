#include "normkit/io.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace normkit {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_finite(const CMatrix& m, const std::string& path) {
    if (!m.allFinite()) throw IoError("'" + path + "': non-finite entry");
}

}  // namespace

CMatrix read_matrix_json(const std::string& path) {
    json doc;
    try {
        doc = json::parse(slurp(path));
    } catch (const json::exception& e) {
        throw IoError("'" + path + "': " + e.what());
    }
    if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") ||
        !doc.contains("data"))
        throw IoError("'" + path + "': expected object with rows, cols, data");
    const Index rows = doc["rows"].get<Index>();
    const Index cols = doc["cols"].get<Index>();
    const auto& data = doc["data"];
    if (rows < 0 || cols < 0 || !data.is_array() ||
        static_cast<Index>(data.size()) != rows * cols)
        throw IoError("'" + path + "': data length must equal rows*cols");
    CMatrix m(rows, cols);
    Index k = 0;
    for (const auto& entry : data) {
        if (!entry.is_array() || entry.size() != 2)
            throw IoError("'" + path + "': each entry must be [re, im]");
        m(k / cols, k % cols) = Complex(entry[0].get<double>(), entry[1].get<double>());
        ++k;
    }
    check_finite(m, path);
    return m;
}

void write_matrix_json(const std::string& path, const CMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << "{\"rows\": " << m.rows() << ", \"cols\": " << m.cols() << ", \"data\": [";
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j) {
            if (i + j > 0) out << ", ";
            out << '[' << format_double(m(i, j).real()) << ", " << format_double(m(i, j).imag())
                << ']';
        }
    out << "]}\n";
    if (!out) throw IoError("write failed for '" + path + "'");
}

CMatrix read_matrix_market(const std::string& path) {
    std::istringstream in(slurp(path));
    std::string banner;
    std::getline(in, banner);
    if (banner.rfind("%%MatrixMarket", 0) != 0)
        throw IoError("'" + path + "': missing MatrixMarket banner");
    {
        std::istringstream hs(banner);
        std::string tag, object, fmt, field, symmetry;
        hs >> tag >> object >> fmt >> field >> symmetry;
        if (object != "matrix" || fmt != "array" || field != "complex" || symmetry != "general")
            throw IoError("'" + path + "': only 'matrix array complex general' is supported");
    }
    std::string line;
    Index rows = 0, cols = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '%') continue;
        std::istringstream ls(line);
        if (!(ls >> rows >> cols)) throw IoError("'" + path + "': bad size line");
        break;
    }
    CMatrix m(rows, cols);
    // array format is column major
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) {
            double re, im;
            if (!(in >> re >> im)) throw IoError("'" + path + "': truncated entry list");
            m(i, j) = Complex(re, im);
        }
    check_finite(m, path);
    return m;
}

CMatrix read_matrix_auto(const std::string& path) {
    const std::string text = slurp(path);
    std::size_t k = 0;
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
    if (text.compare(k, 2, "%%") == 0) return read_matrix_market(path);
    return read_matrix_json(path);
}

void write_trajectory_csv(std::ostream& os,
                          const std::vector<std::pair<double, CVector>>& paths) {
    os << "t,index,re,im\n";
    for (const auto& [t, vals] : paths)
        for (Index j = 0; j < vals.size(); ++j)
            os << format_double(t) << ',' << j << ',' << format_double(vals(j).real()) << ','
               << format_double(vals(j).imag()) << '\n';
}

}  // namespace normkit
