#include "framehs/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace framehs::csv {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view s, double& out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size() && std::isfinite(out);
}

std::string format_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace

ParseError::ParseError(std::string source, std::size_t line, std::size_t column,
                       const std::string& what)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + what),
      line_(line), column_(column) {}

cplx parse_scalar(std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) {
        throw std::invalid_argument("empty entry");
    }
    double re = 0.0;
    if (s.back() != 'j') {
        if (!parse_real(s, re)) {
            throw std::invalid_argument("not a number: '" + std::string(s) + "'");
        }
        return {re, 0.0};
    }
    const std::string_view body = s.substr(0, s.size() - 1);
    // Split at the last sign that is not a leading sign or part of an exponent.
    std::size_t split = std::string_view::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    double im = 0.0;
    if (split == std::string_view::npos) {
        if (!parse_real(body, im)) {
            throw std::invalid_argument("not a complex number: '" + std::string(s) + "'");
        }
        return {0.0, im};
    }
    if (!parse_real(body.substr(0, split), re) || !parse_real(body.substr(split), im)) {
        throw std::invalid_argument("not a complex number: '" + std::string(s) + "'");
    }
    return {re, im};
}

std::string format_scalar(cplx z) {
    std::string out = format_real(z.real());
    if (z.imag() != 0.0) {
        if (!std::signbit(z.imag())) {
            out += '+';
        }
        out += format_real(z.imag());
        out += 'j';
    }
    return out;
}

ComplexMatrix read_matrix(std::istream& in, const std::string& source) {
    std::vector<std::vector<cplx>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        std::vector<cplx> row;
        std::string_view rest = line;
        std::size_t column = 0;
        while (true) {
            ++column;
            const auto comma = rest.find(',');
            const std::string_view field = rest.substr(0, comma);
            try {
                row.push_back(parse_scalar(field));
            } catch (const std::invalid_argument& e) {
                throw ParseError(source, lineno, column, e.what());
            }
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (!rows.empty() && row.size() != rows.front().size()) {
            throw ParseError(source, lineno, row.size(),
                             "expected " + std::to_string(rows.front().size()) +
                                 " entries, found " + std::to_string(row.size()));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError(source, lineno, 0, "no matrix rows");
    }
    ComplexMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

ComplexMatrix read_matrix(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    return read_matrix(in, path.string());
}

ComplexVector read_vector(const std::filesystem::path& path) {
    const ComplexMatrix m = read_matrix(path);
    if (m.cols() != 1) {
        throw ParseError(path.string(), 1, 2,
                         "expected a single-column vector, found " + std::to_string(m.cols()) +
                             " columns");
    }
    return m.col(0);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j > 0) {
                out << ',';
            }
            out << format_scalar(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write_matrix(out, m);
}

void write_vector(const std::filesystem::path& path, const ComplexVector& v) {
    write_matrix(path, ComplexMatrix::column(v));
}

} // namespace framehs::csv
