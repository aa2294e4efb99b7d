#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "shfkit/core.hpp"

namespace shfkit {

using BigInt = boost::multiprecision::cpp_int;

enum class BoundKind {
  LowerOnRows,     // N >= value (or M >= value for covering numbers)
  UpperStrict,     // n < value
  UpperInclusive,  // n <= value
};

/// A closed-form bound together with the result it comes from.
struct BoundReport {
  BigInt value;
  BoundKind kind = BoundKind::LowerOnRows;
  std::string source;
  bool applicable = true;
  std::string reason;  // why the rule does not apply

  /// Largest admissible n for upper bounds (value - 1 when strict).
  BigInt max_n() const { return kind == BoundKind::UpperStrict ? value - 1 : value; }
};

BigInt binomial(int n, int k);

/// Minimum rows of a strong SHF(N; w1+w2, m, {1^w1, w2}):
/// 1 when w1 + w2 <= m, otherwise ceil(C(w1+w2, w1) / C(m-1, w1)).
/// Inapplicable (no row can separate) when w1 > m - 1.
BoundReport lower_bound_rows(int w1, int w2, int m);

/// ceil(C(n, l) / C(k, l)) <= M(n, k, l), the covering number.
BoundReport covering_lower_bound(int n, int k, int l);

/// Nested ceiling ceil(n/k ceil((n-1)/(k-1) ... ceil((n-l+1)/(k-l+1)))).
BigInt schonheim_size(int n, int k, int l);

/// Every column upper-bound rule, applicable or not, in a fixed order:
/// {w,w} square bound, {w1,w2} with 2 <= w1 < w2, general N = u bound, and
/// the Johnson-type bound valid for any N.
std::vector<BoundReport> column_bound_rules(int rows, int alphabet, const ShfType& ty);

struct ColumnBound {
  BigInt max_n;
  std::vector<std::string> sources;  // rules attaining max_n
  std::vector<BoundReport> rules;    // all evaluated rules
};

/// Best upper bound on n for an SHF(N; n, m, ty).
ColumnBound upper_bound_cols(int rows, int alphabet, const ShfType& ty);

}  // namespace shfkit
