#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "report.hpp"
#include "shfkit/construct.hpp"
#include "shfkit/io.hpp"

namespace shfkit::cli {
namespace {

struct VerifyArgs {
  std::string matrix;
  std::string type;
  int threads = 1;
};

struct ConstructArgs {
  std::string design;
  int l = 0;
  int w1 = 0;
  int w2 = 0;
  std::string out;
  bool exact = false;
  bool no_verify = false;
};

struct BoundArgs {
  bool upper = false;
  bool lower = false;
  bool covering = false;
  bool schonheim = false;
  int rows = 0;
  int n = 0;
  int m = 0;
  int k = 0;
  int l = 0;
  int w1 = 0;
  int w2 = 0;
  std::string type;
};

struct SearchArgs {
  int rows = 0;
  int n = 0;
  int m = 0;
  std::string type;
  std::string mode = "certified";
  int threads = 1;
  std::optional<std::uint64_t> budget;
  std::optional<double> time_limit;
  bool max_n = false;
  std::optional<int> start_n;
};

struct CanonArgs {
  std::vector<std::string> files;
};

struct ScanArgs {
  std::string file;
};

std::optional<std::uint64_t> env_budget() {
  const char* v = std::getenv("SHFKIT_NODE_BUDGET");
  if (v == nullptr || *v == '\0') return std::nullopt;
  try {
    return std::stoull(v);
  } catch (const std::exception&) {
    throw std::invalid_argument("SHFKIT_NODE_BUDGET must be a non-negative integer");
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Matrix m = read_matrix_file(a.matrix);
  const ShfType ty = parse_type(a.type);
  const Verdict v = is_shf(m, ty, {.threads = std::max(1, a.threads)});
  json j = report("verify", {{"matrix", a.matrix}, {"type", ty.to_string()}, {"threads", a.threads}});
  j["N"] = m.rows();
  j["n"] = m.cols();
  j["m"] = m.alphabet();
  j.update(to_json(v));
  emit(out, j);
  return v.is_shf ? kOk : kNegative;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  std::optional<Hypergraph> h = design_by_name(a.design);
  if (!h) {
    const HypergraphInput in = read_hypergraph_file(a.design);
    if (in.shifted_from_one_based) {
      err << "note: " << a.design << " has no header and no vertex 0; indices read as 1-based\n";
    }
    h = in.hypergraph;
  }
  json j = report("construct", {{"design", a.design},
                                {"l", a.l},
                                {"w1", a.w1},
                                {"w2", a.w2},
                                {"exact", a.exact},
                                {"out", a.out}});
  if (a.exact) {
    if (auto bad = find_coverage_violation(*h, a.l, Coverage::ExactlyOne)) {
      j["error"] = "coverage";
      j["mode"] = "exactly_one";
      j["subset"] = *bad;
      emit(out, j);
      err << "error: a vertex subset is not covered exactly once\n";
      return kNegative;
    }
  }
  const Matrix m = construct_strong_shf(*h, a.l, a.w1, a.w2, !a.no_verify);
  write_matrix_file(a.out, m);
  const ShfType ty = strong_type(a.w1, a.w2);
  j["N"] = m.rows();
  j["n"] = m.cols();
  j["m"] = m.alphabet();
  j["type"] = ty.to_string();
  j["shf"] = "SHF(" + std::to_string(m.rows()) + "; " + std::to_string(m.cols()) + ", " +
             std::to_string(m.alphabet()) + ", " + ty.to_string() + ")";
  j["verified"] = !a.no_verify;
  emit(out, j);
  return kOk;
}

int cmd_bound(const BoundArgs& a, std::ostream& out) {
  const int chosen = int{a.upper} + int{a.lower} + int{a.covering} + int{a.schonheim};
  if (chosen != 1) throw CLI::ValidationError("bound", "choose exactly one of --upper, --lower, --covering, --schonheim");
  if (a.upper) {
    const ShfType ty = parse_type(a.type);
    const ColumnBound b = upper_bound_cols(a.rows, a.m, ty);
    json j = report("bound", {{"kind", "upper"}, {"N", a.rows}, {"m", a.m}, {"type", ty.to_string()}});
    j.update(to_json(b));
    emit(out, j);
    return kOk;
  }
  if (a.lower) {
    const BoundReport b = lower_bound_rows(a.w1, a.w2, a.m);
    json j = report("bound", {{"kind", "lower"}, {"w1", a.w1}, {"w2", a.w2}, {"m", a.m}});
    j.update(to_json(b));
    if (b.applicable) j["min_N"] = to_json(b.value);
    emit(out, j);
    return b.applicable ? kOk : kNegative;
  }
  if (a.covering) {
    const BoundReport b = covering_lower_bound(a.n, a.k, a.l);
    json j = report("bound", {{"kind", "covering"}, {"n", a.n}, {"k", a.k}, {"l", a.l}});
    j.update(to_json(b));
    emit(out, j);
    return kOk;
  }
  json j = report("bound", {{"kind", "schonheim"}, {"n", a.n}, {"k", a.k}, {"l", a.l}});
  j["value"] = to_json(schonheim_size(a.n, a.k, a.l));
  emit(out, j);
  return kOk;
}

int exit_for(SearchResult r) {
  switch (r) {
    case SearchResult::Found:
      return kOk;
    case SearchResult::Exhausted:
      return kNegative;
    case SearchResult::Inconclusive:
      break;
  }
  return kInconclusive;
}

int cmd_search(const SearchArgs& a, std::ostream& out) {
  const ShfType ty = parse_type(a.type);
  SearchOptions opt;
  opt.mode = a.mode == "heuristic" ? SearchMode::Heuristic : SearchMode::Certified;
  opt.threads = std::max(1, a.threads);
  opt.node_budget = a.budget ? a.budget : env_budget();
  opt.time_limit_seconds = a.time_limit;
  const bool audit = opt.threads == 1 && opt.mode == SearchMode::Certified;

  json params = {{"N", a.rows}, {"m", a.m}, {"type", ty.to_string()}, {"mode", to_string(opt.mode)},
                 {"threads", opt.threads}};
  if (opt.node_budget) params["node_budget"] = *opt.node_budget;
  if (opt.time_limit_seconds) params["time_limit"] = *opt.time_limit_seconds;

  if (a.max_n) {
    if (a.start_n) params["start_n"] = *a.start_n;
    const MaxNOutcome r = max_n(a.rows, a.m, ty, opt, a.start_n);
    json j = report("search", std::move(params));
    j["audit"] = audit;
    j["result"] = r.conclusive ? "optimal" : "inconclusive";
    j["n_star"] = r.n_star;
    j["witness"] = r.witness ? to_json(*r.witness) : json(nullptr);
    j["next"] = to_json(r.exhaustion);
    emit(out, j);
    return r.conclusive ? kOk : kInconclusive;
  }

  params["n"] = a.n;
  const SearchOutcome r = search_shf(a.rows, a.n, a.m, ty, opt);
  json j = report("search", std::move(params));
  j["audit"] = audit;
  j.update(to_json(r));
  emit(out, j);
  return exit_for(r.result);
}

int cmd_canon(const CanonArgs& a, std::ostream& out) {
  if (a.files.empty() || a.files.size() > 2) throw CLI::ValidationError("canon", "expects one or two matrix files");
  const Matrix first = read_matrix_file(a.files[0]);
  json j = report("canon", {{"files", a.files}});
  if (a.files.size() == 1) {
    j["canonical"] = to_json(canonical_form(first));
    emit(out, j);
    return kOk;
  }
  const Matrix second = read_matrix_file(a.files[1]);
  const bool iso = are_isomorphic(first, second);
  j["isomorphic"] = iso;
  emit(out, j);
  return iso ? kOk : kNegative;
}

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const Matrix m = read_matrix_file(a.file);
  const auto hit = find_forbidden(m);
  json j = report("scan", {{"matrix", a.file}});
  j["forbidden"] = hit ? to_json(*hit) : json(nullptr);
  emit(out, j);
  return hit ? kNegative : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct, verify, bound and search separating hash families", "shfkit"};
  app.require_subcommand(1);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a matrix file against a type");
  verify->add_option("matrix", va.matrix, "Matrix file")->required();
  verify->add_option("-t,--type", va.type, "Type, e.g. \"{1^2,5}\"")->required();
  verify->add_option("--threads", va.threads, "Worker threads");

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a strong SHF from a hypergraph");
  construct->add_option("design", ca.design, "fano | sts(n) | cyclic(n;b1,...) | hypergraph file")->required();
  construct->add_option("-l,--l", ca.l, "Coverage strength")->required();
  construct->add_option("--w1", ca.w1, "Number of singleton parts")->required();
  construct->add_option("--w2", ca.w2, "Size of the large part")->required();
  construct->add_option("-o,--out", ca.out, "Output matrix file")->required();
  construct->add_flag("--exact", ca.exact, "Require every l-subset in exactly one edge");
  construct->add_flag("--no-verify", ca.no_verify, "Skip re-verifying the constructed matrix");

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "Evaluate closed-form bounds");
  bound->add_flag("--upper", ba.upper, "Upper bound on n for SHF(N; n, m, type)");
  bound->add_flag("--lower", ba.lower, "Lower bound on N for a strong SHF with n = w1 + w2");
  bound->add_flag("--covering", ba.covering, "Lower bound on the covering number M(n, k, l)");
  bound->add_flag("--schonheim", ba.schonheim, "Nested-ceiling covering size");
  bound->add_option("-N", ba.rows, "Rows");
  bound->add_option("-n", ba.n, "Points");
  bound->add_option("-m", ba.m, "Alphabet size");
  bound->add_option("-k", ba.k, "Block size");
  bound->add_option("-l", ba.l, "Coverage strength");
  bound->add_option("--w1", ba.w1);
  bound->add_option("--w2", ba.w2);
  bound->add_option("-t,--type", ba.type);

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Exhaustive isomorph-free search");
  search->add_option("-N", sa.rows, "Rows")->required();
  search->add_option("-n", sa.n, "Columns");
  search->add_option("-m", sa.m, "Alphabet size")->required();
  search->add_option("-t,--type", sa.type, "Type")->required();
  search->add_option("--mode", sa.mode)->check(CLI::IsMember({"certified", "heuristic"}));
  search->add_option("--threads", sa.threads, "Worker threads; 1 marks certified runs as audit runs");
  search->add_option("--node-budget", sa.budget, "Cap on examined extensions (default: SHFKIT_NODE_BUDGET)");
  search->add_option("--time-limit", sa.time_limit, "Wall-clock cap in seconds");
  search->add_flag("--max-n", sa.max_n, "Find the largest n instead of testing one n");
  search->add_option("--start-n", sa.start_n, "First n tried by --max-n");

  CanonArgs cna;
  auto* canon = app.add_subcommand("canon", "Canonical form, or isomorphism test of two matrices");
  canon->add_option("files", cna.files, "One or two matrix files")->required();

  ScanArgs sca;
  auto* scan = app.add_subcommand("scan", "Look for forbidden 4x4 configurations");
  scan->add_option("matrix", sca.file, "Matrix file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (search->parsed() && !sa.max_n && sa.n <= 0) {
      throw CLI::ValidationError("search", "-n is required unless --max-n is given");
    }
    if (*verify) return cmd_verify(va, out);
    if (*construct) return cmd_construct(ca, out, err);
    if (*bound) return cmd_bound(ba, out);
    if (*search) return cmd_search(sa, out);
    if (*canon) return cmd_canon(cna, out);
    if (*scan) return cmd_scan(sca, out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  } catch (const CoverageError& e) {
    err << "error: " << e.what() << '\n';
    json j = report("construct", {{"design", ca.design}, {"l", ca.l}, {"w1", ca.w1}, {"w2", ca.w2}});
    j["error"] = "coverage";
    j["subset"] = e.subset();
    emit(out, j);
    return kNegative;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace shfkit::cli
