#include "shfkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bitset>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace shfkit {
namespace {

constexpr int kMaxColumns = 64;

using WideMask = std::bitset<kMaxAlphabet>;

inline bool overlaps(std::uint64_t a, std::uint64_t b) { return (a & b) != 0; }
inline bool overlaps(const WideMask& a, const WideMask& b) { return (a & b).any(); }

template <class Mask>
Mask symbol_bit(Symbol s) {
  if constexpr (std::is_same_v<Mask, std::uint64_t>) {
    return std::uint64_t{1} << s;
  } else {
    Mask m;
    m.set(s);
    return m;
  }
}

void sort_family(Family& f) {
  for (auto& p : f.parts) std::sort(p.begin(), p.end());
  std::sort(f.parts.begin(), f.parts.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  });
}

// Enumerates families for a list of part weights over the columns not in
// `used`, in the documented order, and checks each against all rows. Parts in
// `fixed` take part in every separation test but are not enumerated.
template <class Mask>
class FamilyWalker {
 public:
  FamilyWalker(const Matrix& a, std::vector<int> weights)
      : rows_(a.rows()), cols_(a.cols()), weights_(std::move(weights)) {
    bits_.resize(static_cast<std::size_t>(rows_) * cols_);
    for (int r = 0; r < rows_; ++r) {
      for (int c = 0; c < cols_; ++c) bits_[idx(r, c)] = symbol_bit<Mask>(a.at(r, c));
    }
    parts_.resize(weights_.size());
    for (std::size_t p = 0; p < weights_.size(); ++p) parts_[p].resize(weights_[p]);
    part_masks_.resize(weights_.size() * rows_);
  }

  /// Replaces the fixed parts; the walker can then be run again.
  void set_fixed(std::vector<std::vector<int>> fixed) {
    for (const auto& part : fixed_) {
      for (int c : part) used_ &= ~bit(c);
    }
    fixed_ = std::move(fixed);
    fixed_masks_.assign(fixed_.size() * rows_, Mask{});
    for (std::size_t p = 0; p < fixed_.size(); ++p) {
      for (int c : fixed_[p]) {
        used_ |= bit(c);
        for (int r = 0; r < rows_; ++r) fixed_masks_[p * rows_ + r] |= bits_[idx(r, c)];
      }
    }
  }

  /// Pins the first enumerated part and walks the remaining ones.
  bool walk_with_first(const std::vector<int>& first) {
    parts_[0] = first;
    for (int c : first) used_ |= bit(c);
    finish_part(0);
    const bool ok = walk(1);
    for (int c : first) used_ &= ~bit(c);
    return ok;
  }

  bool walk_all() { return walk(0); }

  std::uint64_t families() const { return families_; }
  std::uint64_t rows_probed() const { return rows_probed_; }
  const std::optional<Family>& witness() const { return witness_; }

 private:
  std::size_t idx(int r, int c) const { return static_cast<std::size_t>(r) * cols_ + c; }
  static std::uint64_t bit(int c) { return std::uint64_t{1} << c; }

  bool walk(std::size_t p) {
    if (p == weights_.size()) return visit();
    int lower = 0;
    if (p > 0 && weights_[p] == weights_[p - 1]) lower = parts_[p - 1][0] + 1;
    return pick(p, 0, lower);
  }

  bool pick(std::size_t p, int k, int from) {
    const int w = weights_[p];
    if (k == w) {
      finish_part(p);
      return walk(p + 1);
    }
    for (int c = from; c < cols_; ++c) {
      if (used_ & bit(c)) continue;
      parts_[p][k] = c;
      used_ |= bit(c);
      const bool ok = pick(p, k + 1, c + 1);
      used_ &= ~bit(c);
      if (!ok) return false;
    }
    return true;
  }

  void finish_part(std::size_t p) {
    for (int r = 0; r < rows_; ++r) {
      Mask m{};
      for (int c : parts_[p]) m |= bits_[idx(r, c)];
      part_masks_[p * rows_ + r] = m;
    }
  }

  bool visit() {
    ++families_;
    for (int r = 0; r < rows_; ++r) {
      ++rows_probed_;
      if (row_ok(r)) return true;
    }
    Family f;
    f.parts = fixed_;
    f.parts.insert(f.parts.end(), parts_.begin(), parts_.end());
    sort_family(f);
    witness_ = std::move(f);
    return false;
  }

  bool row_ok(int r) const {
    Mask seen{};
    for (std::size_t p = 0; p < fixed_.size(); ++p) {
      const Mask& m = fixed_masks_[p * rows_ + r];
      if (overlaps(m, seen)) return false;
      seen |= m;
    }
    for (std::size_t p = 0; p < weights_.size(); ++p) {
      const Mask& m = part_masks_[p * rows_ + r];
      if (overlaps(m, seen)) return false;
      seen |= m;
    }
    return true;
  }

  int rows_;
  int cols_;
  std::vector<int> weights_;
  std::vector<Mask> bits_;
  std::vector<std::vector<int>> parts_;
  std::vector<Mask> part_masks_;
  std::vector<std::vector<int>> fixed_;
  std::vector<Mask> fixed_masks_;
  std::uint64_t used_ = 0;
  std::uint64_t families_ = 0;
  std::uint64_t rows_probed_ = 0;
  std::optional<Family> witness_;
};

void check_shape(const Matrix& a, const ShfType& ty) {
  if (ty.total() > a.cols()) {
    throw std::invalid_argument("not enough columns to form a family");
  }
  if (a.cols() > kMaxColumns) {
    throw std::invalid_argument("verifier supports at most 64 columns");
  }
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[i] = i;
  if (k > n) return out;
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

template <class Mask>
Verdict run_sequential(const Matrix& a, const ShfType& ty) {
  FamilyWalker<Mask> walker(a, ty.weights());
  Verdict v;
  v.is_shf = walker.walk_all();
  v.families_checked = walker.families();
  v.rows_probed = walker.rows_probed();
  v.witness = walker.witness();
  return v;
}

struct SliceResult {
  std::uint64_t families = 0;
  std::uint64_t rows = 0;
  std::optional<Family> witness;
  bool done = false;
};

template <class Mask>
Verdict run_parallel(const Matrix& a, const ShfType& ty, int threads) {
  const auto firsts = combinations(a.cols(), ty.weights().front());
  std::vector<SliceResult> slices(firsts.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= firsts.size() || i > first_failure.load()) return;
      FamilyWalker<Mask> walker(a, ty.weights());
      const bool ok = walker.walk_with_first(firsts[i]);
      slices[i].families = walker.families();
      slices[i].rows = walker.rows_probed();
      slices[i].witness = walker.witness();
      slices[i].done = true;
      if (!ok) {
        std::size_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  Verdict v;
  for (auto& s : slices) {
    if (!s.done) break;
    v.families_checked += s.families;
    v.rows_probed += s.rows;
    if (s.witness) {
      v.is_shf = false;
      v.witness = std::move(s.witness);
      break;
    }
  }
  return v;
}

template <class Mask>
Verdict run_incremental(const Matrix& a, const ShfType& ty, int new_col) {
  Verdict v;
  const auto& w = ty.weights();
  std::vector<int> others;
  for (int c = 0; c < a.cols(); ++c) {
    if (c != new_col) others.push_back(c);
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i] == w[i - 1]) continue;
    std::vector<int> rest = w;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    FamilyWalker<Mask> walker(a, rest);
    for (const auto& pick : combinations(static_cast<int>(others.size()), w[i] - 1)) {
      std::vector<int> part{new_col};
      for (int j : pick) part.push_back(others[j]);
      std::sort(part.begin(), part.end());
      walker.set_fixed({std::move(part)});
      if (!walker.walk_all()) {
        v.is_shf = false;
        v.witness = walker.witness();
        break;
      }
    }
    v.families_checked += walker.families();
    v.rows_probed += walker.rows_probed();
    if (!v.is_shf) return v;
  }
  return v;
}

}  // namespace

bool row_separates(const Matrix& a, int row, const Family& family) {
  if (row < 0 || row >= a.rows()) throw std::invalid_argument("row index out of range");
  std::vector<int> owner(static_cast<std::size_t>(a.cols()), -1);
  for (std::size_t p = 0; p < family.parts.size(); ++p) {
    for (int c : family.parts[p]) {
      if (c < 0 || c >= a.cols()) throw std::invalid_argument("column index out of range");
      if (owner[c] != -1 && owner[c] != static_cast<int>(p)) {
        throw std::invalid_argument("family parts overlap");
      }
      owner[c] = static_cast<int>(p);
    }
  }
  std::vector<int> symbol_owner(static_cast<std::size_t>(a.alphabet()), -1);
  for (std::size_t p = 0; p < family.parts.size(); ++p) {
    for (int c : family.parts[p]) {
      int& o = symbol_owner[a.at(row, c)];
      if (o != -1 && o != static_cast<int>(p)) return false;
      o = static_cast<int>(p);
    }
  }
  return true;
}

Verdict is_shf(const Matrix& a, const ShfType& ty, const VerifyOptions& options) {
  check_shape(a, ty);
  const bool narrow = a.alphabet() <= 64;
  if (options.threads > 1) {
    return narrow ? run_parallel<std::uint64_t>(a, ty, options.threads)
                  : run_parallel<WideMask>(a, ty, options.threads);
  }
  return narrow ? run_sequential<std::uint64_t>(a, ty) : run_sequential<WideMask>(a, ty);
}

Verdict incremental_check(const Matrix& a, const ShfType& ty, int new_col) {
  check_shape(a, ty);
  if (new_col < 0 || new_col >= a.cols()) throw std::invalid_argument("column index out of range");
  return a.alphabet() <= 64 ? run_incremental<std::uint64_t>(a, ty, new_col)
                            : run_incremental<WideMask>(a, ty, new_col);
}

}  // namespace shfkit
