#include "shfkit/bounds.hpp"

#include <stdexcept>

namespace shfkit {
namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

BigInt power(int base, int exp) {
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

BoundReport inapplicable(BoundKind kind, std::string source, std::string reason) {
  BoundReport b;
  b.kind = kind;
  b.source = std::move(source);
  b.applicable = false;
  b.reason = std::move(reason);
  return b;
}

bool is_one_and_w(const ShfType& ty) { return ty.parts() == 2 && ty.weights()[0] == 1; }

bool is_one_one_one(const ShfType& ty) { return ty.weights() == std::vector<int>{1, 1, 1}; }

}  // namespace

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

BoundReport lower_bound_rows(int w1, int w2, int m) {
  if (w1 < 1 || w2 < 1) throw std::invalid_argument("w1 and w2 must be positive");
  if (m < 2) throw std::invalid_argument("alphabet must have at least two symbols");
  if (w1 > m - 1) {
    return inapplicable(BoundKind::LowerOnRows, "Thm2.5", "w1 > m - 1: no row can separate w1 singletons");
  }
  BoundReport b;
  b.kind = BoundKind::LowerOnRows;
  if (w1 + w2 <= m) {
    b.value = 1;
    b.source = "trivial(w1+w2<=m)";
    return b;
  }
  b.value = ceil_div(binomial(w1 + w2, w1), binomial(m - 1, w1));
  // With m - 1 = w1 the Guo-Stinson bound C(n, w1) gives the same value.
  b.source = (m - 1 == w1) ? "Thm2.5=Guo-Stinson" : "Thm2.5";
  return b;
}

BoundReport covering_lower_bound(int n, int k, int l) {
  if (l < 1 || l > k || k > n) throw std::invalid_argument("covering bound needs 1 <= l <= k <= n");
  BoundReport b;
  b.kind = BoundKind::LowerOnRows;
  b.value = ceil_div(binomial(n, l), binomial(k, l));
  b.source = "Thm2.9";
  return b;
}

BigInt schonheim_size(int n, int k, int l) {
  if (l < 1 || l > k || k > n) throw std::invalid_argument("covering size needs 1 <= l <= k <= n");
  BigInt inner = 1;
  for (int i = l - 1; i >= 0; --i) inner = ceil_div(inner * (n - i), BigInt(k - i));
  return inner;
}

std::vector<BoundReport> column_bound_rules(int rows, int alphabet, const ShfType& ty) {
  if (rows < 1) throw std::invalid_argument("N must be positive");
  if (alphabet < 2) throw std::invalid_argument("alphabet must have at least two symbols");
  const int u = ty.total();
  const int m = alphabet;
  const auto& w = ty.weights();
  std::vector<BoundReport> out;

  {
    const bool square = ty.parts() == 2 && w[0] == w[1];
    const std::string source = (square && w[0] == 2) ? "Thm3.10" : "Thm3.11";
    if (!square) {
      out.push_back(inapplicable(BoundKind::UpperInclusive, source, "type is not {w, w}"));
    } else if (rows != 2 * w[0] || m < 2 * w[0] || 2 * w[0] < 4) {
      out.push_back(inapplicable(BoundKind::UpperInclusive, source, "needs N = 2w and m >= 2w >= 4"));
    } else {
      BoundReport b;
      b.kind = BoundKind::UpperInclusive;
      b.value = BigInt(m - 1) * (m - 1) + 1;
      b.source = source;
      out.push_back(b);
    }
  }

  {
    const bool unequal = ty.parts() == 2 && w[0] >= 2 && w[0] < w[1];
    if (!unequal) {
      out.push_back(inapplicable(BoundKind::UpperStrict, "Thm4.3", "type is not {w1, w2} with 2 <= w1 < w2"));
    } else if (rows != u || m < u) {
      out.push_back(inapplicable(BoundKind::UpperStrict, "Thm4.3", "needs N = w1 + w2 and m >= w1 + w2"));
    } else {
      BoundReport b;
      b.kind = BoundKind::UpperStrict;
      b.value = BigInt(m) * m - m;
      b.source = "Thm4.3";
      out.push_back(b);
    }
  }

  {
    if (is_one_one_one(ty) || is_one_and_w(ty)) {
      out.push_back(inapplicable(BoundKind::UpperStrict, "Thm4.4", "type {1,1,1} or {1,w} is excluded"));
    } else if (rows != u || m < u) {
      out.push_back(inapplicable(BoundKind::UpperStrict, "Thm4.4", "needs N = u and m >= u"));
    } else {
      BoundReport b;
      b.kind = BoundKind::UpperStrict;
      b.value = BigInt(m) * m - m;
      b.source = "Thm4.4";
      out.push_back(b);
    }
  }

  {
    const int d = u - 1;
    const int r = (rows - 1) % d + 1;
    const int hi = (rows + d - 1) / d;
    const int lo = rows / d;
    BoundReport b;
    b.kind = BoundKind::UpperInclusive;
    b.value = BigInt(r) * power(m, hi) + BigInt(u - r) * power(m, lo);
    b.source = "Remark5";
    out.push_back(b);
  }
  return out;
}

ColumnBound upper_bound_cols(int rows, int alphabet, const ShfType& ty) {
  ColumnBound result;
  result.rules = column_bound_rules(rows, alphabet, ty);
  bool first = true;
  for (const auto& b : result.rules) {
    if (!b.applicable) continue;
    const BigInt v = b.max_n();
    if (first || v < result.max_n) {
      result.max_n = v;
      result.sources.clear();
      first = false;
    }
    if (v == result.max_n) result.sources.push_back(b.source);
  }
  return result;
}

}  // namespace shfkit
