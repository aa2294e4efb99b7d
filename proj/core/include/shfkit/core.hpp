#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace shfkit {

using Symbol = std::uint8_t;

/// Largest alphabet a Matrix can hold (symbols are stored in one byte).
inline constexpr int kMaxAlphabet = 256;

/// Multiset of part sizes {w1, ..., wt} that a hash family must separate.
///
/// Weights are kept sorted ascending, so two types compare equal exactly when
/// they are equal as multisets.
class ShfType {
 public:
  explicit ShfType(std::vector<int> weights);
  ShfType(std::initializer_list<int> weights) : ShfType(std::vector<int>(weights)) {}

  const std::vector<int>& weights() const { return weights_; }
  int parts() const { return static_cast<int>(weights_.size()); }
  int total() const { return total_; }

  /// Strong type {1^q, w}: every part but the largest is a singleton.
  bool is_strong() const;

  /// Renders in exponent notation, e.g. "{1^2, 5}".
  std::string to_string() const;

  friend bool operator==(const ShfType&, const ShfType&) = default;

 private:
  std::vector<int> weights_;
  int total_ = 0;
};

/// Strong type {1^q, w}.
ShfType strong_type(int singletons, int large);

/// Dense N x n representation matrix over the alphabet [0, m).
class Matrix {
 public:
  Matrix(int rows, int cols, int alphabet, std::vector<Symbol> entries);
  Matrix(int alphabet, const std::vector<std::vector<int>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int alphabet() const { return alphabet_; }

  Symbol at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const Symbol> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::vector<Symbol> column(int c) const;

  /// Row-major entries.
  const std::vector<Symbol>& entries() const { return data_; }

  Matrix with_column(std::span<const Symbol> column) const;
  Matrix without_column(int c) const;
  Matrix select_columns(std::span<const int> cols) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_;
  int cols_;
  int alphabet_;
  std::vector<Symbol> data_;
};

/// Vertex set [0, n) with edges stored as ordered vertex sequences.
///
/// The stored order of each edge fixes which symbol a vertex receives when the
/// hypergraph is turned into a matrix; coverage queries treat edges as sets.
class Hypergraph {
 public:
  Hypergraph(int vertices, std::vector<std::vector<int>> edges);

  int vertices() const { return vertices_; }
  const std::vector<std::vector<int>>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int max_edge_size() const;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  int vertices_;
  std::vector<std::vector<int>> edges_;
};

/// A family of pairwise-disjoint column sets. When returned by the verifier it
/// is a witness: no row separates it.
struct Family {
  std::vector<std::vector<int>> parts;

  friend bool operator==(const Family&, const Family&) = default;
};

using Witness = Family;

/// Number of columns j with A[i][j] == x.
int lambda_stat(const Matrix& a, int row, int symbol);

/// Number of columns k with A[i][k] == x and A[j][k] == y. Requires i != j.
int d_stat(const Matrix& a, int row_i, int row_j, int x, int y);

/// Largest symbol multiplicity over all rows.
int lambda_max(const Matrix& a);

}  // namespace shfkit
