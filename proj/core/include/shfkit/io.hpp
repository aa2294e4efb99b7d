#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shfkit/core.hpp"

namespace shfkit {

/// Malformed input; line and column are 1-based (0 when not applicable).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses "{1^2, 5}", "{2,2}", ... Weights are sorted; whitespace is ignored.
ShfType parse_type(std::string_view text);

/// MatrixFile: header "SHF-MATRIX v1 N n m", then N lines of n symbols in [0, m).
Matrix parse_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
std::string render_matrix(const Matrix& a);
void write_matrix_file(const std::string& path, const Matrix& a);

struct HypergraphInput {
  Hypergraph hypergraph;
  bool headerless = false;
  bool shifted_from_one_based = false;
};

/// HypergraphFile: header "HYPERGRAPH v1 n N", then N lines of distinct
/// 0-based vertices. Blank lines and '#' comments are skipped. Without a
/// header every line is a block, n = max index + 1, and indices are taken as
/// 1-based (shifted down) when 0 never appears.
HypergraphInput parse_hypergraph(std::istream& in);
HypergraphInput read_hypergraph_file(const std::string& path);
std::string render_hypergraph(const Hypergraph& h);

}  // namespace shfkit
