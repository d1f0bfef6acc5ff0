#pragma once

// Matrix CSV files: one matrix row per line, no header, entries written as
// `re`, `re+imj` or `re-imj`. Vectors are single-column files. Values are
// written with 17 significant digits so a write/read cycle is bit exact.

#include "framehs/linalg.hpp"

#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace framehs::csv {

class ParseError : public std::runtime_error {
  public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& what);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

cplx parse_scalar(std::string_view text);
std::string format_scalar(cplx z);

// `source` names the input in diagnostics.
ComplexMatrix read_matrix(std::istream& in, const std::string& source = "<stream>");
ComplexMatrix read_matrix(const std::filesystem::path& path);
ComplexVector read_vector(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const ComplexMatrix& m);
void write_matrix(const std::filesystem::path& path, const ComplexMatrix& m);
void write_vector(const std::filesystem::path& path, const ComplexVector& v);

} // namespace framehs::csv
