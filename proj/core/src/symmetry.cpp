#include "shfkit/symmetry.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include <boost/container/small_vector.hpp>

#include "shfkit/verify.hpp"

namespace shfkit {
namespace {

template <class T>
using SmallVec = boost::container::small_vector<T, 8>;

struct Tally {
  int symbol;
  int count;
};

// Lex-least row-major representative by branch and bound.
//
// Rows are placed one at a time. Columns form an ordered partition into cells
// of columns that agree on every placed row. Placing a row relabels its
// symbols in first-occurrence order while ordering each cell so the row string
// is minimal; the only freedom is the order among not-yet-labelled symbols
// with equal counts inside a cell, and those ties are branched on. A branch is
// cut as soon as its prefix exceeds the best complete matrix.
class Canonizer {
 public:
  explicit Canonizer(const Matrix& a)
      : a_(a), rows_(a.rows()), cols_(a.cols()), alphabet_(a.alphabet()) {
    order_.assign(rows_ + 1, std::vector<int>(cols_));
    starts_.assign(rows_ + 1, {});
    std::iota(order_[0].begin(), order_[0].end(), 0);
    starts_[0] = {0, cols_};
    labels_.assign(rows_, std::vector<int>(alphabet_, -1));
    next_label_.assign(rows_, 0);
    count_.assign(alphabet_, 0);
    cur_.assign(static_cast<std::size_t>(rows_) * cols_, 0);
    used_.assign(rows_, false);
    // Rows with the same first-occurrence pattern are exchanged by an
    // automorphism that fixes every other row; only one of them is branched on.
    std::vector<std::vector<Symbol>> patterns(rows_);
    pattern_class_.assign(rows_, 0);
    for (int r = 0; r < rows_; ++r) {
      std::vector<int> map(alphabet_, -1);
      int next = 0;
      for (int c = 0; c < cols_; ++c) {
        int& m = map[a.at(r, c)];
        if (m < 0) m = next++;
        patterns[r].push_back(static_cast<Symbol>(m));
      }
      pattern_class_[r] = r;
      for (int q = 0; q < r; ++q) {
        if (patterns[q] == patterns[r]) {
          pattern_class_[r] = pattern_class_[q];
          break;
        }
      }
    }
  }

  Matrix run() {
    place_row(0, false);
    return Matrix(rows_, cols_, alphabet_, std::move(best_));
  }

 private:
  // Whether the written prefix equals the best one; reset to true whenever a
  // descendant replaces the best matrix.
  struct Frame {
    bool tight;
    std::uint64_t gen;
  };

  void place_row(int depth, bool tight) {
    if (depth == rows_) {
      if (!tight) {
        best_ = cur_;
        ++gen_;
      }
      return;
    }
    Frame frame{tight, gen_};
    SmallVec<int> tried;
    for (int r = 0; r < rows_; ++r) {
      if (used_[r]) continue;
      if (std::find(tried.begin(), tried.end(), pattern_class_[r]) != tried.end()) continue;
      tried.push_back(pattern_class_[r]);
      std::fill(labels_[depth].begin(), labels_[depth].end(), -1);
      next_label_[depth] = 0;
      used_[r] = true;
      process_cell(depth, r, 0, 0, frame.tight);
      used_[r] = false;
      refresh(frame);
    }
  }

  void refresh(Frame& frame) const {
    if (gen_ != frame.gen) {
      frame.tight = true;
      frame.gen = gen_;
    }
  }

  void process_cell(int depth, int row, int cell, int pos, bool tight) {
    const auto& starts = starts_[depth];
    if (cell + 1 == static_cast<int>(starts.size())) {
      finish_row(depth, row, tight);
      return;
    }
    const auto& order = order_[depth];
    const auto& labels = labels_[depth];

    SmallVec<int> seen;
    for (int i = starts[cell]; i < starts[cell + 1]; ++i) {
      const Symbol s = a_.at(row, order[i]);
      if (count_[s]++ == 0) seen.push_back(s);
    }
    SmallVec<Tally> assigned;  // (label, count)
    SmallVec<Tally> fresh;     // (symbol, count)
    for (int s : seen) {
      const int c = count_[s];
      count_[s] = 0;
      if (labels[s] >= 0) {
        assigned.push_back({labels[s], c});
      } else {
        fresh.push_back({s, c});
      }
    }
    std::sort(assigned.begin(), assigned.end(), [](Tally x, Tally y) { return x.symbol < y.symbol; });
    std::sort(fresh.begin(), fresh.end(), [](Tally x, Tally y) {
      return x.count != y.count ? x.count > y.count : x.symbol < y.symbol;
    });
    SmallVec<int> group_end(fresh.size());
    for (int k = static_cast<int>(fresh.size()) - 1; k >= 0; --k) {
      const bool last = k + 1 == static_cast<int>(fresh.size()) || fresh[k + 1].count != fresh[k].count;
      group_end[k] = last ? k + 1 : group_end[k + 1];
    }

    Frame frame{tight, gen_};
    permute_fresh(depth, row, cell, pos, frame, assigned, fresh, group_end, 0);
  }

  void permute_fresh(int depth, int row, int cell, int pos, Frame& frame, const SmallVec<Tally>& assigned,
                     SmallVec<Tally>& fresh, const SmallVec<int>& group_end, int k) {
    if (k == static_cast<int>(fresh.size())) {
      emit(depth, row, cell, pos, frame, assigned, fresh);
      return;
    }
    for (int i = k; i < group_end[k]; ++i) {
      std::swap(fresh[k], fresh[i]);
      permute_fresh(depth, row, cell, pos, frame, assigned, fresh, group_end, k + 1);
      std::swap(fresh[k], fresh[i]);
    }
  }

  void emit(int depth, int row, int cell, int pos, Frame& frame, const SmallVec<Tally>& assigned,
            const SmallVec<Tally>& fresh) {
    auto& labels = labels_[depth];
    int& next = next_label_[depth];
    const int base = next;
    for (const auto& f : fresh) labels[f.symbol] = next++;

    Symbol* out = cur_.data() + static_cast<std::size_t>(depth) * cols_ + pos;
    int width = 0;
    for (const auto& t : assigned) {
      for (int i = 0; i < t.count; ++i) out[width++] = static_cast<Symbol>(t.symbol);
    }
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      for (int i = 0; i < fresh[k].count; ++i) out[width++] = static_cast<Symbol>(base + k);
    }

    bool child_tight = false;
    bool worse = false;
    if (frame.tight) {
      const Symbol* ref = best_.data() + static_cast<std::size_t>(depth) * cols_ + pos;
      const auto [o, r] = std::mismatch(out, out + width, ref);
      if (o == out + width) {
        child_tight = true;
      } else {
        worse = *o > *r;
      }
    }
    if (!worse) {
      process_cell(depth, row, cell + 1, pos + width, child_tight);
      refresh(frame);
    }

    for (const auto& f : fresh) labels[f.symbol] = -1;
    next = base;
  }

  void finish_row(int depth, int row, bool tight) {
    const auto& order = order_[depth];
    const auto& starts = starts_[depth];
    const auto& labels = labels_[depth];
    auto& next_order = order_[depth + 1];
    auto& next_starts = starts_[depth + 1];
    next_starts.clear();

    SmallVec<std::pair<int, int>> bucket;
    for (std::size_t cell = 0; cell + 1 < starts.size(); ++cell) {
      bucket.clear();
      for (int i = starts[cell]; i < starts[cell + 1]; ++i) {
        bucket.emplace_back(labels[a_.at(row, order[i])], order[i]);
      }
      std::sort(bucket.begin(), bucket.end());
      int at = starts[cell];
      for (std::size_t i = 0; i < bucket.size(); ++i) {
        if (i == 0 || bucket[i].first != bucket[i - 1].first) next_starts.push_back(at);
        next_order[at++] = bucket[i].second;
      }
    }
    next_starts.push_back(cols_);
    place_row(depth + 1, tight);
  }

  const Matrix& a_;
  int rows_;
  int cols_;
  int alphabet_;
  std::vector<std::vector<int>> order_;
  std::vector<std::vector<int>> starts_;
  std::vector<std::vector<int>> labels_;
  std::vector<int> next_label_;
  std::vector<int> count_;
  std::vector<Symbol> cur_;
  std::vector<Symbol> best_;
  std::vector<bool> used_;
  std::vector<int> pattern_class_;
  std::uint64_t gen_ = 0;
};

struct Equality {
  int row;
  int first;
  int second;
};

std::vector<Equality> equalities(const std::array<std::string, 4>& grid) {
  std::vector<Equality> out;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      if (grid[r][c] == '*') continue;
      for (int d = c + 1; d < 4; ++d) {
        if (grid[r][d] == grid[r][c]) out.push_back({r, c, d});
      }
    }
  }
  return out;
}

bool match_columns(const Matrix& a, const std::array<int, 4>& rows, const std::vector<Equality>& eqs,
                   std::array<int, 4>& cols, int k) {
  if (k == 4) return true;
  for (int c = 0; c < a.cols(); ++c) {
    if (std::find(cols.begin(), cols.begin() + k, c) != cols.begin() + k) continue;
    cols[k] = c;
    bool ok = true;
    for (const auto& e : eqs) {
      if (e.second == k && a.at(rows[e.row], cols[e.first]) != a.at(rows[e.row], c)) {
        ok = false;
        break;
      }
    }
    if (ok && match_columns(a, rows, eqs, cols, k + 1)) return true;
  }
  return false;
}

}  // namespace

Matrix canonical_form(const Matrix& a) { return Canonizer(a).run(); }

bool are_isomorphic(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.alphabet() != b.alphabet()) return false;
  return canonical_form(a) == canonical_form(b);
}

std::string to_string(ForbiddenConfig id) {
  switch (id) {
    case ForbiddenConfig::F1:
      return "F1";
    case ForbiddenConfig::F2:
      return "F2";
    case ForbiddenConfig::F3:
      return "F3";
  }
  return "?";
}

const std::array<std::string, 4>& forbidden_pattern(ForbiddenConfig id) {
  static const std::array<std::string, 4> f1{"aa**", "bb**", "**cc", "**dd"};
  static const std::array<std::string, 4> f2{"aa**", "bb**", "x*x*", "*v*v"};
  static const std::array<std::string, 4> f3{"aa**", "*bb*", "x**x", "**vv"};
  switch (id) {
    case ForbiddenConfig::F1:
      return f1;
    case ForbiddenConfig::F2:
      return f2;
    case ForbiddenConfig::F3:
      break;
  }
  return f3;
}

std::optional<ForbiddenMatch> find_forbidden(const Matrix& a) {
  if (a.rows() < 4 || a.cols() < 4) return std::nullopt;
  for (auto id : {ForbiddenConfig::F1, ForbiddenConfig::F2, ForbiddenConfig::F3}) {
    const auto eqs = equalities(forbidden_pattern(id));
    std::array<int, 4> rows{};
    for (rows[0] = 0; rows[0] < a.rows(); ++rows[0]) {
      for (rows[1] = 0; rows[1] < a.rows(); ++rows[1]) {
        if (rows[1] == rows[0]) continue;
        for (rows[2] = 0; rows[2] < a.rows(); ++rows[2]) {
          if (rows[2] == rows[0] || rows[2] == rows[1]) continue;
          for (rows[3] = 0; rows[3] < a.rows(); ++rows[3]) {
            if (rows[3] == rows[0] || rows[3] == rows[1] || rows[3] == rows[2]) continue;
            std::array<int, 4> cols{};
            if (match_columns(a, rows, eqs, cols, 0)) return ForbiddenMatch{id, rows, cols};
          }
        }
      }
    }
  }
  return std::nullopt;
}

bool repeated_pair_bound_holds(const Matrix& a) {
  if (a.rows() != 4 || a.alphabet() < 3) {
    throw std::invalid_argument("needs a 4-row matrix over at least 3 symbols");
  }
  if (a.cols() < 4 || !is_shf(a, ShfType{2, 2}).is_shf) {
    throw std::invalid_argument("matrix is not a certified SHF(4; n, m, {2,2})");
  }
  bool repeated = false;
  for (int i = 0; i < 4 && !repeated; ++i) {
    for (int j = i + 1; j < 4 && !repeated; ++j) {
      for (int x = 0; x < a.alphabet() && !repeated; ++x) {
        for (int y = 0; y < a.alphabet() && !repeated; ++y) repeated = d_stat(a, i, j, x, y) >= 2;
      }
    }
  }
  const int m = a.alphabet();
  return !repeated || a.cols() <= (m - 1) * (m - 1) + 1;
}

}  // namespace shfkit
