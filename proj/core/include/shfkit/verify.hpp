#pragma once

#include <cstdint>
#include <optional>

#include "shfkit/core.hpp"

namespace shfkit {

/// Outcome of checking a matrix against a type.
///
/// `families_checked` and `rows_probed` are exact and reproducible: they count
/// work up to and including the returned witness, independent of thread count.
struct Verdict {
  bool is_shf = true;
  std::optional<Witness> witness;
  std::uint64_t families_checked = 0;
  std::uint64_t rows_probed = 0;
};

struct VerifyOptions {
  /// Worker threads for is_shf; 1 gives a strictly sequential run.
  int threads = 1;
};

/// True iff, in the given row, the symbol sets of the family's parts are
/// pairwise disjoint. Repeated symbols inside a single part are allowed.
bool row_separates(const Matrix& a, int row, const Family& family);

/// Decides whether `a` represents an SHF of type `ty`.
///
/// Families are visited in a fixed order: parts follow the ascending weight
/// order of the type, each part is a lexicographic combination of the unused
/// columns, and consecutive parts of equal weight have strictly increasing
/// smallest elements (so each unordered family is seen once). Rows are probed
/// in ascending order and the first failing family is the witness.
///
/// Throws std::invalid_argument when the type needs more than cols() columns.
Verdict is_shf(const Matrix& a, const ShfType& ty, const VerifyOptions& options = {});

/// Same answer as is_shf under the assumption that `a` without `new_col` is
/// already an SHF of type `ty`: only families that contain `new_col` are
/// examined. The witness is reported with parts in type order.
Verdict incremental_check(const Matrix& a, const ShfType& ty, int new_col);

}  // namespace shfkit
