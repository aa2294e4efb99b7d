#include "shfkit/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "shfkit/symmetry.hpp"
#include "shfkit/verify.hpp"

namespace shfkit {

std::string to_string(SearchMode mode) { return mode == SearchMode::Certified ? "certified" : "heuristic"; }

std::string to_string(SearchResult result) {
  switch (result) {
    case SearchResult::Found:
      return "found";
    case SearchResult::Exhausted:
      return "exhausted";
    case SearchResult::Inconclusive:
      break;
  }
  return "inconclusive";
}

SearchStats& SearchStats::operator+=(const SearchStats& other) {
  nodes_expanded += other.nodes_expanded;
  candidates += other.candidates;
  separation_rejections += other.separation_rejections;
  canonical_rejections += other.canonical_rejections;
  heuristic_rejections += other.heuristic_rejections;
  max_depth = std::max(max_depth, other.max_depth);
  if (accepted_per_depth.size() < other.accepted_per_depth.size()) {
    accepted_per_depth.resize(other.accepted_per_depth.size(), 0);
  }
  for (std::size_t i = 0; i < other.accepted_per_depth.size(); ++i) {
    accepted_per_depth[i] += other.accepted_per_depth[i];
  }
  return *this;
}

std::optional<ShfType> shrink_type(const ShfType& ty, int columns) {
  std::vector<int> w = ty.weights();
  int total = ty.total();
  while (total > columns && !w.empty()) {
    --w.back();
    --total;
    if (w.back() == 0) w.pop_back();
    std::sort(w.begin(), w.end());
  }
  if (w.size() < 2) return std::nullopt;
  return ShfType(std::move(w));
}

namespace {

using Clock = std::chrono::steady_clock;

struct Shared {
  int rows;
  int target;
  int alphabet;
  ShfType ty;
  SearchOptions options;
  std::vector<std::optional<ShfType>> level_type;  // index = column count
  std::vector<std::vector<Symbol>> columns;        // every column, lexicographic
  bool repeated_pair_rule = false;
  std::atomic<std::uint64_t> spent{0};
  std::atomic<bool> halt{false};
  std::atomic<std::size_t> first_found{std::numeric_limits<std::size_t>::max()};
  std::optional<Clock::time_point> deadline{};
};

std::vector<std::vector<Symbol>> all_columns(int rows, int alphabet) {
  std::size_t total = 1;
  for (int r = 0; r < rows; ++r) {
    total *= static_cast<std::size_t>(alphabet);
    if (total > 10'000'000) throw std::invalid_argument("candidate column space too large");
  }
  std::vector<std::vector<Symbol>> out(total, std::vector<Symbol>(static_cast<std::size_t>(rows)));
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (int r = rows - 1; r >= 0; --r) {
      out[code][r] = static_cast<Symbol>(x % alphabet);
      x /= alphabet;
    }
  }
  return out;
}

std::size_t column_code(const Matrix& p, int c) {
  std::size_t code = 0;
  for (int r = 0; r < p.rows(); ++r) code = code * p.alphabet() + p.at(r, c);
  return code;
}

bool has_repeated_pair(const Matrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.rows(); ++j) {
      for (int c = 0; c < a.cols(); ++c) {
        for (int d = c + 1; d < a.cols(); ++d) {
          if (a.at(i, c) == a.at(i, d) && a.at(j, c) == a.at(j, d)) return true;
        }
      }
    }
  }
  return false;
}

std::string key_of(const Matrix& a) {
  const auto& e = a.entries();
  return std::string(e.begin(), e.end());
}

using Domain = std::vector<std::uint32_t>;
using Visit = std::function<bool(const Matrix&, const Domain&)>;

// Depth-first search below one starting node, with its own per-depth sets of
// visited canonical forms.
class Subtree {
 public:
  Subtree(Shared& shared, std::size_t index) : sh_(shared), index_(index) {
    seen_.resize(static_cast<std::size_t>(sh_.target) + 1);
    stats_.accepted_per_depth.assign(static_cast<std::size_t>(sh_.target) + 1, 0);
  }

  /// Generates the accepted children of `p` in candidate order and hands each
  /// to `visit` together with the surviving candidates; stops early when
  /// `visit` returns true or the run is halted.
  ///
  /// Only codes in `domain` are tried. A column that breaks separation here
  /// breaks it below as well (the failing family only gains columns and the
  /// level type only grows), so children inherit the survivors.
  bool expand(const Matrix& p, const Domain& domain, const Visit& visit) {
    ++stats_.nodes_expanded;
    const int k = p.cols();
    const auto& parent_type = sh_.level_type[k];
    const auto& child_type = sh_.level_type[k + 1];
    // Families avoiding the new column do not depend on the candidate, so
    // they are checked once here and each candidate gets the incremental test.
    if (child_type && !(parent_type && *parent_type == *child_type) && child_type->total() <= k &&
        !is_shf(p, *child_type).is_shf) {
      stats_.candidates += domain.size();
      stats_.separation_rejections += domain.size();
      return false;
    }
    const std::size_t first = sh_.options.isomorph_rejection ? 0 : column_code(p, k - 1);

    Domain survivors;
    survivors.reserve(domain.size());
    for (const std::uint32_t code : domain) {
      if (code < first) continue;
      if (should_stop()) return true;
      ++stats_.candidates;
      if (child_type) {
        const Matrix child = p.with_column(sh_.columns[code]);
        if (!incremental_check(child, *child_type, k).is_shf) {
          ++stats_.separation_rejections;
          continue;
        }
      }
      survivors.push_back(code);
    }

    for (const std::uint32_t code : survivors) {
      if (should_stop_cheap()) return true;
      Matrix child = p.with_column(sh_.columns[code]);
      if (sh_.repeated_pair_rule && has_repeated_pair(child)) {
        ++stats_.heuristic_rejections;
        continue;
      }
      if (sh_.options.isomorph_rejection && !seen_[k + 1].insert(key_of(canonical_form(child))).second) {
        ++stats_.canonical_rejections;
        continue;
      }
      ++stats_.accepted_per_depth[k + 1];
      stats_.max_depth = std::max(stats_.max_depth, k + 1);
      if (visit(child, survivors)) return true;
    }
    return false;
  }

  bool dfs(const Matrix& p, const Domain& domain) {
    if (p.cols() == sh_.target) {
      found_ = p;
      return true;
    }
    return expand(p, domain, [this](const Matrix& child, const Domain& d) { return dfs(child, d); });
  }

  SearchStats& stats() { return stats_; }
  const std::optional<Matrix>& found() const { return found_; }
  bool aborted() const { return aborted_; }
  const std::string& note() const { return note_; }

 private:
  bool should_stop() {
    if (aborted_ || cancelled_) return true;
    if (index_ > sh_.first_found.load(std::memory_order_relaxed)) {
      cancelled_ = true;
      return true;
    }
    if (sh_.halt.load(std::memory_order_relaxed)) return abort("search halted by another worker hitting a limit");
    const auto spent = sh_.spent.fetch_add(1, std::memory_order_relaxed) + 1;
    if (sh_.options.node_budget && spent > *sh_.options.node_budget) return abort("node budget exhausted");
    if (sh_.deadline && (spent & 1023) == 0 && Clock::now() > *sh_.deadline) return abort("time limit reached");
    return false;
  }

  bool should_stop_cheap() {
    if (aborted_ || cancelled_) return true;
    if (index_ > sh_.first_found.load(std::memory_order_relaxed)) {
      cancelled_ = true;
      return true;
    }
    return sh_.halt.load(std::memory_order_relaxed) && abort("search halted by another worker hitting a limit");
  }

  bool abort(std::string why) {
    aborted_ = true;
    note_ = std::move(why);
    sh_.halt.store(true);
    return true;
  }

  Shared& sh_;
  std::size_t index_;
  std::vector<std::unordered_set<std::string>> seen_;
  SearchStats stats_;
  std::optional<Matrix> found_;
  bool aborted_ = false;
  bool cancelled_ = false;
  std::string note_;
};

struct TaskResult {
  bool done = false;
  bool aborted = false;
  std::string note;
  std::optional<Matrix> found;
  SearchStats stats;
};

}  // namespace

SearchOutcome search_shf(int rows, int cols, int alphabet, const ShfType& ty, const SearchOptions& options) {
  if (rows < 1 || cols < 1 || alphabet < 1) throw std::invalid_argument("N, n and m must be positive");
  if (ty.total() > cols) throw std::invalid_argument("not enough columns to form a family");
  if (alphabet > kMaxAlphabet) throw std::invalid_argument("alphabet larger than 256");
  const auto started = Clock::now();

  Shared sh{rows, cols, alphabet, ty, options, {}, all_columns(rows, alphabet)};
  for (int k = 0; k <= cols; ++k) sh.level_type.push_back(shrink_type(ty, k));
  const int m = alphabet;
  sh.repeated_pair_rule = options.mode == SearchMode::Heuristic && rows == 4 && ty == ShfType{2, 2} && m >= 3 &&
                          cols > (m - 1) * (m - 1) + 1;
  if (options.time_limit_seconds) {
    sh.deadline = started + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(*options.time_limit_seconds));
  }

  SearchOutcome out;
  out.mode = options.mode;
  const Matrix root(rows, 1, alphabet, std::vector<Symbol>(static_cast<std::size_t>(rows), 0));

  // Depth-2 frontier, generated once and split into independent subtrees.
  std::vector<Matrix> frontier;
  std::vector<Domain> domains;
  Domain everything(sh.columns.size());
  std::iota(everything.begin(), everything.end(), 0u);
  Subtree prelude(sh, 0);
  prelude.stats().accepted_per_depth[1] = 1;
  if (cols == 1) {
    frontier.push_back(root);
    domains.push_back(everything);
  } else {
    prelude.expand(root, everything, [&](const Matrix& child, const Domain& d) {
      frontier.push_back(child);
      domains.push_back(d);
      return false;
    });
  }
  out.stats = prelude.stats();
  if (prelude.aborted()) {
    out.result = SearchResult::Inconclusive;
    out.note = prelude.note();
    out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    return out;
  }

  std::vector<TaskResult> tasks(frontier.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= frontier.size() || i > sh.first_found.load()) return;
      Subtree sub(sh, i);
      const bool hit = sub.dfs(frontier[i], domains[i]);
      tasks[i].stats = sub.stats();
      tasks[i].aborted = sub.aborted();
      tasks[i].note = sub.note();
      tasks[i].found = sub.found();
      tasks[i].done = true;
      if (hit && sub.found()) {
        std::size_t cur = sh.first_found.load();
        while (i < cur && !sh.first_found.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  if (options.threads > 1) {
    std::vector<std::jthread> pool;
    for (int t = 0; t < options.threads; ++t) pool.emplace_back(worker);
  } else {
    worker();
  }

  out.result = SearchResult::Exhausted;
  for (auto& t : tasks) {
    if (!t.done) break;
    out.stats += t.stats;
    if (t.aborted) {
      out.result = SearchResult::Inconclusive;
      out.note = t.note;
      break;
    }
    if (t.found) {
      out.result = SearchResult::Found;
      out.matrix = std::move(t.found);
      break;
    }
  }
  if (out.result == SearchResult::Exhausted && std::any_of(tasks.begin(), tasks.end(), [](const TaskResult& t) {
        return !t.done;
      })) {
    out.result = SearchResult::Inconclusive;
    out.note = "search halted before every subtree finished";
  }
  if (out.result == SearchResult::Found && !is_shf(*out.matrix, ty).is_shf) {
    throw std::logic_error("search produced a matrix that fails verification");
  }
  if (out.result == SearchResult::Exhausted && options.mode == SearchMode::Heuristic) {
    out.result = SearchResult::Inconclusive;
    out.note = "heuristic pruning cannot certify exhaustion";
  }
  out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return out;
}

MaxNOutcome max_n(int rows, int alphabet, const ShfType& ty, const SearchOptions& options, std::optional<int> start_n) {
  MaxNOutcome out;
  int n = std::max(start_n.value_or(ty.total()), ty.total());
  out.n_star = n - 1;
  while (true) {
    SearchOutcome run = search_shf(rows, n, alphabet, ty, options);
    out.runs.push_back(run);
    if (run.result == SearchResult::Found) {
      out.n_star = n;
      out.witness = run.matrix;
      ++n;
      continue;
    }
    out.conclusive = run.result == SearchResult::Exhausted;
    out.exhaustion = std::move(run);
    return out;
  }
}

}  // namespace shfkit
