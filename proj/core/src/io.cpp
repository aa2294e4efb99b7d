#include "shfkit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace shfkit {

ParseError::ParseError(const std::string& what, int line, int column)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what
                                  : what),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> split(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long to_int(const Token& t, int line) {
  long v = 0;
  const char* end = t.text.data() + t.text.size();
  auto [p, ec] = std::from_chars(t.text.data(), end, v);
  if (ec != std::errc{} || p != end) throw ParseError("expected an integer, got '" + t.text + "'", line, t.column);
  return v;
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

ShfType parse_type(std::string_view text) {
  std::string s;
  std::vector<int> col;  // 1-based column of each kept character
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      s.push_back(text[i]);
      col.push_back(static_cast<int>(i) + 1);
    }
  }
  auto fail = [&](const std::string& what, std::size_t at) {
    throw ParseError("type: " + what, 1, at < col.size() ? col[at] : static_cast<int>(text.size()) + 1);
  };
  if (s.size() < 2 || s.front() != '{') fail("expected '{'", 0);
  if (s.back() != '}') fail("expected '}'", s.size() - 1);

  std::size_t i = 1;
  auto number = [&]() {
    const std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected a positive integer", start);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data() + start, s.data() + i, v);
    if (ec != std::errc{} || v < 1) fail("expected a positive integer", start);
    return v;
  };

  std::vector<int> weights;
  while (true) {
    const int w = number();
    int times = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      times = number();
    }
    if (times > 1000) fail("multiplicity too large", i - 1);
    weights.insert(weights.end(), static_cast<std::size_t>(times), w);
    if (s[i] == ',') {
      ++i;
      continue;
    }
    if (s[i] == '}' && i + 1 == s.size()) break;
    fail("expected ',' or '}'", i);
  }
  if (weights.size() < 2) throw ParseError("type: needs at least two parts", 1, 1);
  return ShfType(std::move(weights));
}

Matrix parse_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty matrix file", 1, 1);
  ++line_no;
  const auto head = split(line);
  if (head.size() != 5 || head[0].text != "SHF-MATRIX" || head[1].text != "v1") {
    throw ParseError("expected header 'SHF-MATRIX v1 N n m'", 1, 1);
  }
  const long rows = to_int(head[2], 1);
  const long cols = to_int(head[3], 1);
  const long alphabet = to_int(head[4], 1);
  if (rows < 1) throw ParseError("N must be positive", 1, head[2].column);
  if (cols < 1) throw ParseError("n must be positive", 1, head[3].column);
  if (alphabet < 1 || alphabet > kMaxAlphabet) throw ParseError("m must be in [1, 256]", 1, head[4].column);

  std::vector<Symbol> entries;
  entries.reserve(static_cast<std::size_t>(rows * cols));
  for (long r = 0; r < rows; ++r) {
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(rows) + " rows, found " + std::to_string(r), line_no + 1, 1);
    }
    ++line_no;
    const auto tokens = split(line);
    if (static_cast<long>(tokens.size()) != cols) {
      throw ParseError("expected " + std::to_string(cols) + " entries, found " + std::to_string(tokens.size()),
                       line_no, tokens.empty() ? 1 : tokens.back().column);
    }
    for (const auto& t : tokens) {
      const long v = to_int(t, line_no);
      if (v < 0 || v >= alphabet) throw ParseError("entry " + t.text + " outside [0, m)", line_no, t.column);
      entries.push_back(static_cast<Symbol>(v));
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    if (!blank(line)) throw ParseError("unexpected content after the last row", line_no, 1);
  }
  return Matrix(static_cast<int>(rows), static_cast<int>(cols), static_cast<int>(alphabet), std::move(entries));
}

Matrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  return parse_matrix(in);
}

std::string render_matrix(const Matrix& a) {
  std::ostringstream out;
  out << "SHF-MATRIX v1 " << a.rows() << ' ' << a.cols() << ' ' << a.alphabet() << '\n';
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) out << (c ? " " : "") << static_cast<int>(a.at(r, c));
    out << '\n';
  }
  return out.str();
}

void write_matrix_file(const std::string& path, const Matrix& a) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << render_matrix(a);
}

HypergraphInput parse_hypergraph(std::istream& in) {
  struct Row {
    int line;
    std::vector<Token> tokens;
  };
  std::vector<Row> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = strip_comment(line);
    if (blank(body)) continue;
    rows.push_back({line_no, split(body)});
  }
  if (rows.empty()) throw ParseError("hypergraph file has no content", 0, 0);

  const bool has_header = rows.front().tokens.front().text == "HYPERGRAPH";
  long n = 0;
  std::size_t first = 0;
  if (has_header) {
    const auto& h = rows.front();
    if (h.tokens.size() != 4 || h.tokens[1].text != "v1") {
      throw ParseError("expected header 'HYPERGRAPH v1 n N'", h.line, 1);
    }
    n = to_int(h.tokens[2], h.line);
    const long count = to_int(h.tokens[3], h.line);
    if (n < 1) throw ParseError("n must be positive", h.line, h.tokens[2].column);
    if (count != static_cast<long>(rows.size()) - 1) {
      throw ParseError("header declares " + std::to_string(count) + " edges, found " +
                           std::to_string(rows.size() - 1),
                       h.line, h.tokens[3].column);
    }
    first = 1;
  }

  std::vector<std::vector<int>> edges;
  bool saw_zero = false;
  long highest = -1;
  for (std::size_t i = first; i < rows.size(); ++i) {
    std::vector<int> e;
    for (const auto& t : rows[i].tokens) {
      const long v = to_int(t, rows[i].line);
      if (v < 0) throw ParseError("negative vertex index", rows[i].line, t.column);
      if (has_header && v >= n) throw ParseError("vertex " + t.text + " not below n", rows[i].line, t.column);
      if (std::find(e.begin(), e.end(), v) != e.end()) {
        throw ParseError("vertex " + t.text + " repeated in edge", rows[i].line, t.column);
      }
      e.push_back(static_cast<int>(v));
      saw_zero = saw_zero || v == 0;
      highest = std::max(highest, v);
    }
    edges.push_back(std::move(e));
  }

  HypergraphInput out{Hypergraph(1, {}), !has_header, false};
  if (!has_header) {
    if (edges.empty()) throw ParseError("hypergraph file has no edges", 0, 0);
    if (!saw_zero) {
      for (auto& e : edges) {
        for (int& v : e) --v;
      }
      out.shifted_from_one_based = true;
      n = highest;
    } else {
      n = highest + 1;
    }
  }
  out.hypergraph = Hypergraph(static_cast<int>(n), std::move(edges));
  return out;
}

HypergraphInput read_hypergraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  return parse_hypergraph(in);
}

std::string render_hypergraph(const Hypergraph& h) {
  std::ostringstream out;
  out << "HYPERGRAPH v1 " << h.vertices() << ' ' << h.edge_count() << '\n';
  for (const auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace shfkit
