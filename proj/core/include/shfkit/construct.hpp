#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "shfkit/core.hpp"

namespace shfkit {

enum class Coverage { ExactlyOne, AtLeastOne };

/// Raised when a hypergraph fails a coverage requirement; carries the first
/// offending vertex subset in lexicographic order.
class CoverageError : public std::invalid_argument {
 public:
  CoverageError(const std::string& what, std::vector<int> subset)
      : std::invalid_argument(what), subset_(std::move(subset)) {}
  const std::vector<int>& subset() const { return subset_; }

 private:
  std::vector<int> subset_;
};

/// True iff every l-subset of vertices lies in exactly one (or at least one)
/// edge, edges taken as sets.
bool covers_all(const Hypergraph& h, int l, Coverage mode);

/// First l-subset (lexicographic) violating the coverage mode, if any.
std::optional<std::vector<int>> find_coverage_violation(const Hypergraph& h, int l, Coverage mode);

/// Row i gives the b-th vertex of edge i the symbol b (1-based position in
/// the stored sequence) and every other vertex the symbol 0. The alphabet is
/// max edge size + 1 unless a larger hint is given.
Matrix hypergraph_to_shf(const Hypergraph& h, std::optional<int> alphabet_hint = std::nullopt);

/// Builds the strong SHF(N; n, m+1, {1^w1, w2}) of a hypergraph whose
/// l-subsets are all covered. With `verify` set the result is re-checked by
/// the verifier and std::logic_error is thrown on a mismatch.
Matrix construct_strong_shf(const Hypergraph& h, int l, int w1, int w2, bool verify = false);

/// Develops `base` cyclically: edge i is base + i (mod n), order preserved.
Hypergraph cyclic_difference_design(int n, const std::vector<int>& base);

/// Steiner triple system on n points, n = 1 or 3 (mod 6), n >= 7.
/// Bose construction for n = 3 (mod 6), Skolem construction for n = 1 (mod 6).
Hypergraph steiner_triple_system(int n);

/// Built-in designs by name: "fano", "sts(n)", "cyclic(n;b1,b2,...)".
/// Returns nullopt if the name is not a registry expression.
std::optional<Hypergraph> design_by_name(std::string_view name);

}  // namespace shfkit
