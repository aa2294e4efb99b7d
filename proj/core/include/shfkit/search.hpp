#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shfkit/core.hpp"

namespace shfkit {

enum class SearchMode {
  Certified,  // only exact pruning; Exhausted is a proof of non-existence
  Heuristic,  // may also prune with known structural facts; never certifies
};

enum class SearchResult { Found, Exhausted, Inconclusive };

std::string to_string(SearchMode mode);
std::string to_string(SearchResult result);

struct SearchOptions {
  SearchMode mode = SearchMode::Certified;
  int threads = 1;
  /// Cap on candidate extensions examined; hitting it makes the run inconclusive.
  std::optional<std::uint64_t> node_budget;
  std::optional<double> time_limit_seconds;
  /// Canonical-form isomorph rejection at every depth. When disabled, plain
  /// depth-first search over nondecreasing column sequences is used.
  bool isomorph_rejection = true;
};

struct SearchStats {
  std::uint64_t nodes_expanded = 0;         // partial matrices whose children were generated
  std::uint64_t candidates = 0;             // extensions examined
  std::uint64_t separation_rejections = 0;  // extensions failing the separation check
  std::uint64_t canonical_rejections = 0;   // extensions isomorphic to a visited one
  std::uint64_t heuristic_rejections = 0;
  int max_depth = 0;
  double wall_seconds = 0;
  /// Accepted partial matrices per column count (index = columns).
  std::vector<std::uint64_t> accepted_per_depth;

  SearchStats& operator+=(const SearchStats& other);
};

struct SearchOutcome {
  SearchResult result = SearchResult::Exhausted;
  std::optional<Matrix> matrix;
  SearchStats stats;
  SearchMode mode = SearchMode::Certified;
  std::string note;  // why a run is inconclusive
};

/// Exhaustive column-by-column search for an SHF(N; n, m, ty).
///
/// The first column is all zeros. Every partial matrix with k columns must be
/// an SHF of the type obtained by shrinking the largest weights of `ty` until
/// they fit in k columns (any column subset of an SHF has that property).
/// With isomorph rejection each partial matrix is kept only if its canonical
/// form is new at its depth, so every isomorphism class is expanded once per
/// depth-2 subtree. Subtrees are searched in candidate order; the returned
/// matrix is the first solution of the first successful subtree, independent
/// of the thread count.
///
/// Throws std::invalid_argument if the type needs more than n columns.
SearchOutcome search_shf(int rows, int cols, int alphabet, const ShfType& ty, const SearchOptions& options = {});

struct MaxNOutcome {
  bool conclusive = true;
  int n_star = 0;                      // largest n with a verified SHF (so far, if inconclusive)
  std::optional<Matrix> witness;       // SHF with n_star columns
  SearchOutcome exhaustion;            // the run at n_star + 1
  std::vector<SearchOutcome> runs;     // every run, in order of n
};

/// Largest n for which an SHF(N; n, m, ty) exists, found by increasing n from
/// `start_n` (default: the type's total weight) until a search is exhausted.
MaxNOutcome max_n(int rows, int alphabet, const ShfType& ty, const SearchOptions& options = {},
                  std::optional<int> start_n = std::nullopt);

/// Type a k-column submatrix of an SHF of type `ty` must satisfy; nullopt when
/// fewer than two parts fit.
std::optional<ShfType> shrink_type(const ShfType& ty, int columns);

}  // namespace shfkit
