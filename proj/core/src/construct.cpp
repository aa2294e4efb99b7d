#include "shfkit/construct.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <sstream>

#include "shfkit/verify.hpp"

namespace shfkit {
namespace {

constexpr std::uint64_t kMaxSubsets = 50'000'000;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// Colex rank of a sorted subset.
std::uint64_t rank_subset(const std::vector<int>& s, const std::vector<std::vector<std::uint64_t>>& choose) {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < s.size(); ++i) r += choose[s[i]][i + 1];
  return r;
}

template <class F>
void for_each_subset(const std::vector<int>& pool, int k, F&& f) {
  const int n = static_cast<int>(pool.size());
  if (k > n) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) cur[i] = pool[idx[i]];
    if (!f(cur)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::string subset_string(const std::vector<int>& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << '}';
  return out.str();
}

}  // namespace

std::optional<std::vector<int>> find_coverage_violation(const Hypergraph& h, int l, Coverage mode) {
  const int n = h.vertices();
  if (l < 1 || l > n) throw std::invalid_argument("coverage strength must satisfy 1 <= l <= n");
  if (binomial(n, l) > kMaxSubsets) throw std::invalid_argument("too many vertex subsets to check");

  std::vector<std::vector<std::uint64_t>> choose(static_cast<std::size_t>(n) + 1,
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(l) + 1));
  for (int i = 0; i <= n; ++i) {
    for (int k = 0; k <= l; ++k) choose[i][k] = binomial(i, k);
  }

  std::vector<std::uint32_t> hits(binomial(n, l), 0);
  for (const auto& e : h.edges()) {
    std::vector<int> sorted = e;
    std::sort(sorted.begin(), sorted.end());
    for_each_subset(sorted, l, [&](const std::vector<int>& s) {
      ++hits[rank_subset(s, choose)];
      return true;
    });
  }

  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[i] = i;
  std::optional<std::vector<int>> bad;
  for_each_subset(all, l, [&](const std::vector<int>& s) {
    const auto c = hits[rank_subset(s, choose)];
    const bool ok = mode == Coverage::ExactlyOne ? c == 1 : c >= 1;
    if (!ok) bad = s;
    return ok;
  });
  return bad;
}

bool covers_all(const Hypergraph& h, int l, Coverage mode) {
  return !find_coverage_violation(h, l, mode).has_value();
}

Matrix hypergraph_to_shf(const Hypergraph& h, std::optional<int> alphabet_hint) {
  if (h.edges().empty()) throw std::invalid_argument("hypergraph has no edges");
  const int needed = h.max_edge_size() + 1;
  const int alphabet = alphabet_hint.value_or(needed);
  if (alphabet < needed) throw std::invalid_argument("alphabet hint smaller than max edge size + 1");

  const int rows = h.edge_count();
  const int cols = h.vertices();
  std::vector<Symbol> entries(static_cast<std::size_t>(rows) * cols, 0);
  for (int i = 0; i < rows; ++i) {
    const auto& e = h.edges()[i];
    for (std::size_t b = 0; b < e.size(); ++b) {
      entries[static_cast<std::size_t>(i) * cols + e[b]] = static_cast<Symbol>(b + 1);
    }
  }
  return Matrix(rows, cols, alphabet, std::move(entries));
}

Matrix construct_strong_shf(const Hypergraph& h, int l, int w1, int w2, bool verify) {
  const int n = h.vertices();
  if (w1 < 1 || w2 < 1) throw std::invalid_argument("w1 and w2 must be positive");
  if (w1 > l) throw std::invalid_argument("precondition failed: w1 <= l");
  if (w1 + w2 > n) throw std::invalid_argument("precondition failed: w1 + w2 <= n");
  if (auto bad = find_coverage_violation(h, l, Coverage::AtLeastOne)) {
    throw CoverageError("precondition failed: vertex subset " + subset_string(*bad) + " lies in no edge",
                        *bad);
  }
  Matrix a = hypergraph_to_shf(h);
  if (verify && !is_shf(a, strong_type(w1, w2)).is_shf) {
    throw std::logic_error("constructed matrix failed verification");
  }
  return a;
}

Hypergraph cyclic_difference_design(int n, const std::vector<int>& base) {
  if (n < 1) throw std::invalid_argument("cyclic design needs n >= 1");
  if (base.empty()) throw std::invalid_argument("base block is empty");
  std::vector<int> residues;
  for (int b : base) residues.push_back(((b % n) + n) % n);
  std::vector<int> sorted = residues;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("base block has duplicate residues");
  }
  std::vector<std::vector<int>> edges;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e;
    for (int r : residues) e.push_back((r + i) % n);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, std::move(edges));
}

Hypergraph steiner_triple_system(int n) {
  if (n < 7 || (n % 6 != 1 && n % 6 != 3)) {
    throw std::invalid_argument("Steiner triple systems need n = 1 or 3 (mod 6), n >= 7");
  }
  std::vector<std::vector<int>> edges;
  if (n % 6 == 3) {
    // Bose: Z_v x Z_3 with the idempotent commutative quasigroup x o y = (x + y)/2 mod v.
    const int v = n / 3;
    const int half = (v + 1) / 2;
    auto pt = [v](int x, int i) { return x + v * i; };
    auto op = [v, half](int x, int y) { return ((x + y) * half) % v; };
    for (int x = 0; x < v; ++x) edges.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (int i = 0; i < 3; ++i) {
      for (int x = 0; x < v; ++x) {
        for (int y = x + 1; y < v; ++y) edges.push_back({pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)});
      }
    }
  } else {
    // Skolem: {inf} u Z_2t x Z_3 with the half-idempotent quasigroup obtained by
    // renaming 2i -> i, 2i+1 -> t+i in the addition table of Z_2t.
    const int t = (n - 1) / 6;
    const int v = 2 * t;
    const int inf = n - 1;
    auto pt = [v](int x, int i) { return x + v * i; };
    auto op = [v, t](int x, int y) {
      const int s = (x + y) % v;
      return s % 2 == 0 ? s / 2 : t + s / 2;
    };
    for (int x = 0; x < t; ++x) edges.push_back({pt(x, 0), pt(x, 1), pt(x, 2)});
    for (int x = 0; x < t; ++x) {
      for (int i = 0; i < 3; ++i) edges.push_back({inf, pt(x + t, i), pt(x, (i + 1) % 3)});
    }
    for (int i = 0; i < 3; ++i) {
      for (int x = 0; x < v; ++x) {
        for (int y = x + 1; y < v; ++y) edges.push_back({pt(x, i), pt(y, i), pt(op(x, y), (i + 1) % 3)});
      }
    }
  }
  return Hypergraph(n, std::move(edges));
}

namespace {

std::string strip(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

int parse_int(std::string_view s, std::string_view what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("bad integer in " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

std::optional<Hypergraph> design_by_name(std::string_view name) {
  const std::string s = strip(name);
  if (s == "fano") return cyclic_difference_design(7, {0, 1, 3});
  if (s.starts_with("sts(") && s.ends_with(")")) {
    return steiner_triple_system(parse_int(std::string_view(s).substr(4, s.size() - 5), "sts(n)"));
  }
  if (s.starts_with("cyclic(") && s.ends_with(")")) {
    const std::string_view body = std::string_view(s).substr(7, s.size() - 8);
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw std::invalid_argument("cyclic design needs 'n;b1,b2,...'");
    const int n = parse_int(body.substr(0, semi), "cyclic(n;...)");
    std::vector<int> base;
    std::string_view rest = body.substr(semi + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      base.push_back(parse_int(rest.substr(0, comma), "cyclic base block"));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return cyclic_difference_design(n, base);
  }
  return std::nullopt;
}

}  // namespace shfkit
