#pragma once

#include <array>
#include <optional>
#include <string>

#include "shfkit/core.hpp"

namespace shfkit {

/// Canonical representative of the isomorphism class of `a` under row
/// permutations, column permutations and independent per-row symbol
/// renamings: the least row-major entry sequence over the orbit. Each
/// canonical row uses its symbols in first-occurrence order 0, 1, 2, ...
Matrix canonical_form(const Matrix& a);

/// Equal dimensions, equal alphabet and equal canonical forms.
bool are_isomorphic(const Matrix& a, const Matrix& b);

enum class ForbiddenConfig { F1, F2, F3 };

std::string to_string(ForbiddenConfig id);

/// 4x4 grid for a configuration; letters name equality classes within a row
/// and '*' is unconstrained.
const std::array<std::string, 4>& forbidden_pattern(ForbiddenConfig id);

struct ForbiddenMatch {
  ForbiddenConfig id;
  std::array<int, 4> rows;
  std::array<int, 4> cols;
};

/// First 4x4 submatrix matching F1, F2 or F3. Scan order: configuration, then
/// ordered row 4-tuples, then ordered column 4-tuples, all lexicographic.
/// In a 4-row matrix any match is a {2,2} family that no row separates.
std::optional<ForbiddenMatch> find_forbidden(const Matrix& a);

/// For a certified SHF(4; n, m, {2,2}) with m >= 3: if some pair of rows
/// repeats a symbol pair (d_stat >= 2) then n <= (m-1)^2 + 1. Returns whether
/// the implication holds. Throws std::invalid_argument if `a` is not such an SHF.
bool repeated_pair_bound_holds(const Matrix& a);

}  // namespace shfkit
