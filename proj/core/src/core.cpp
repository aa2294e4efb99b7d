#include "shfkit/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace shfkit {

ShfType::ShfType(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.size() < 2) {
    throw std::invalid_argument("type must have at least two parts");
  }
  for (int w : weights_) {
    if (w < 1) throw std::invalid_argument("type weights must be positive");
  }
  std::sort(weights_.begin(), weights_.end());
  total_ = std::accumulate(weights_.begin(), weights_.end(), 0);
}

bool ShfType::is_strong() const {
  return std::all_of(weights_.begin(), weights_.end() - 1, [](int w) { return w == 1; });
}

std::string ShfType::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < weights_.size();) {
    std::size_t j = i;
    while (j < weights_.size() && weights_[j] == weights_[i]) ++j;
    if (i != 0) out << ", ";
    out << weights_[i];
    if (j - i > 1) out << '^' << (j - i);
    i = j;
  }
  out << '}';
  return out.str();
}

ShfType strong_type(int singletons, int large) {
  if (singletons < 1) throw std::invalid_argument("strong type needs at least one singleton part");
  std::vector<int> w(static_cast<std::size_t>(singletons), 1);
  w.push_back(large);
  return ShfType(std::move(w));
}

Matrix::Matrix(int rows, int cols, int alphabet, std::vector<Symbol> entries)
    : rows_(rows), cols_(cols), alphabet_(alphabet), data_(std::move(entries)) {
  if (rows < 1 || cols < 1 || alphabet < 1) {
    throw std::invalid_argument("matrix dimensions and alphabet must be positive");
  }
  if (alphabet > kMaxAlphabet) throw std::invalid_argument("alphabet larger than 256");
  if (data_.size() != static_cast<std::size_t>(rows) * cols) {
    throw std::invalid_argument("entry count does not match dimensions");
  }
  for (Symbol s : data_) {
    if (s >= alphabet) throw std::invalid_argument("matrix entry outside alphabet");
  }
}

namespace {

std::vector<Symbol> flatten(int alphabet, const std::vector<std::vector<int>>& rows) {
  std::vector<Symbol> out;
  if (rows.empty()) return out;
  const std::size_t width = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) throw std::invalid_argument("ragged matrix rows");
    for (int v : r) {
      if (v < 0 || v >= alphabet) throw std::invalid_argument("matrix entry outside alphabet");
      out.push_back(static_cast<Symbol>(v));
    }
  }
  return out;
}

}  // namespace

Matrix::Matrix(int alphabet, const std::vector<std::vector<int>>& rows)
    : Matrix(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows.front().size()),
             alphabet, flatten(alphabet, rows)) {}

std::vector<Symbol> Matrix::column(int c) const {
  std::vector<Symbol> out(static_cast<std::size_t>(rows_));
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Matrix Matrix::with_column(std::span<const Symbol> column) const {
  if (static_cast<int>(column.size()) != rows_) throw std::invalid_argument("column height mismatch");
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(rows_) * (cols_ + 1));
  for (int r = 0; r < rows_; ++r) {
    auto src = row(r);
    out.insert(out.end(), src.begin(), src.end());
    out.push_back(column[r]);
  }
  return Matrix(rows_, cols_ + 1, alphabet_, std::move(out));
}

Matrix Matrix::without_column(int c) const {
  if (c < 0 || c >= cols_) throw std::invalid_argument("column index out of range");
  std::vector<int> keep;
  for (int j = 0; j < cols_; ++j) {
    if (j != c) keep.push_back(j);
  }
  return select_columns(keep);
}

Matrix Matrix::select_columns(std::span<const int> cols) const {
  std::vector<Symbol> out;
  out.reserve(static_cast<std::size_t>(rows_) * cols.size());
  for (int r = 0; r < rows_; ++r) {
    for (int c : cols) {
      if (c < 0 || c >= cols_) throw std::invalid_argument("column index out of range");
      out.push_back(at(r, c));
    }
  }
  return Matrix(rows_, static_cast<int>(cols.size()), alphabet_, std::move(out));
}

Hypergraph::Hypergraph(int vertices, std::vector<std::vector<int>> edges)
    : vertices_(vertices), edges_(std::move(edges)) {
  if (vertices < 1) throw std::invalid_argument("hypergraph needs at least one vertex");
  for (const auto& e : edges_) {
    if (e.empty()) throw std::invalid_argument("hypergraph edge is empty");
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("hypergraph edge repeats a vertex");
    }
    if (sorted.front() < 0 || sorted.back() >= vertices) {
      throw std::invalid_argument("hypergraph edge vertex out of range");
    }
  }
}

int Hypergraph::max_edge_size() const {
  std::size_t best = 0;
  for (const auto& e : edges_) best = std::max(best, e.size());
  return static_cast<int>(best);
}

int lambda_stat(const Matrix& a, int row, int symbol) {
  if (row < 0 || row >= a.rows()) throw std::invalid_argument("row index out of range");
  if (symbol < 0 || symbol >= a.alphabet()) throw std::invalid_argument("symbol out of range");
  auto r = a.row(row);
  return static_cast<int>(std::count(r.begin(), r.end(), static_cast<Symbol>(symbol)));
}

int d_stat(const Matrix& a, int row_i, int row_j, int x, int y) {
  if (row_i == row_j) throw std::invalid_argument("d_stat needs two distinct rows");
  if (row_i < 0 || row_i >= a.rows() || row_j < 0 || row_j >= a.rows()) {
    throw std::invalid_argument("row index out of range");
  }
  if (x < 0 || x >= a.alphabet() || y < 0 || y >= a.alphabet()) {
    throw std::invalid_argument("symbol out of range");
  }
  int count = 0;
  for (int k = 0; k < a.cols(); ++k) {
    if (a.at(row_i, k) == x && a.at(row_j, k) == y) ++count;
  }
  return count;
}

int lambda_max(const Matrix& a) {
  int best = 0;
  std::vector<int> counts(static_cast<std::size_t>(a.alphabet()));
  for (int r = 0; r < a.rows(); ++r) {
    std::fill(counts.begin(), counts.end(), 0);
    for (Symbol s : a.row(r)) best = std::max(best, ++counts[s]);
  }
  return best;
}

}  // namespace shfkit
