#include "ttc/io.hpp"

#include <fstream>
#include <sstream>

namespace ttc {

namespace {

std::vector<std::string> tokenize(const std::string& s) {
    std::vector<std::string> toks;
    std::stringstream ss(s);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

u64 parse_u64(const std::string& s) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw Error("BadMatrixFile", "expected an unsigned integer, got '" + s + "'");
    }
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec) {
    auto toks = tokenize(spec);
    if (toks.empty()) throw Error("BadMatrixFile", "empty field spec");
    if (toks.size() == 1) {
        if (toks[0] == "Q" || toks[0] == "q") return Field::rationals();
        return Field::prime(parse_u64(toks[0]));
    }
    u64 p = parse_u64(toks[0]);
    u64 k = parse_u64(toks[1]);
    if (toks.size() != 2 + k + 1)
        throw Error("BadMatrixFile", "extension field spec needs k+1 coefficients");
    std::vector<u64> coeffs;
    for (std::size_t i = 2; i < toks.size(); ++i) coeffs.push_back(parse_u64(toks[i]));
    return Field::extension(p, coeffs);
}

std::string field_header(const Field& f) { return "field " + f.spec_string(); }

Matrix read_matrix(std::istream& in) {
    std::string line;
    auto next_line = [&]() -> std::string {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos) continue;
            if (line[pos] == '#') continue;
            return line;
        }
        throw Error("BadMatrixFile", "unexpected end of matrix file");
    };

    std::string header = next_line();
    auto toks = tokenize(header);
    if (toks.empty() || toks[0] != "field")
        throw Error("BadMatrixFile", "matrix file must start with a field header");
    std::string spec;
    for (std::size_t i = 1; i < toks.size(); ++i) {
        if (i > 1) spec += ' ';
        spec += toks[i];
    }
    FieldPtr F = parse_field_spec(spec);

    auto dims = tokenize(next_line());
    if (dims.size() != 2) throw Error("BadMatrixFile", "expected 'rows cols'");
    std::size_t rows = parse_u64(dims[0]);
    std::size_t cols = parse_u64(dims[1]);
    if (rows == 0 || cols == 0) throw Error("BadMatrixFile", "dimensions must be positive");

    Matrix m(F, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        auto ent = tokenize(next_line());
        if (ent.size() != cols)
            throw Error("BadMatrixFile",
                        "row " + std::to_string(i + 1) + " has " + std::to_string(ent.size()) +
                            " entries, expected " + std::to_string(cols));
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, F->parse(ent[j]));
    }
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("FileNotFound", "cannot open '" + path + "'");
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m, const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "# " << c << "\n";
    out << field_header(*m.field()) << "\n";
    out << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << m.field()->to_string(m.at(i, j));
        }
        out << "\n";
    }
}

void write_matrix_file(const std::string& path, const Matrix& m,
                       const std::vector<std::string>& comments) {
    std::ofstream out(path);
    if (!out) throw Error("FileNotFound", "cannot open '" + path + "' for writing");
    write_matrix(out, m, comments);
}

}  // namespace ttc
