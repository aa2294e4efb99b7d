#include "report.hpp"

#include <limits>

namespace shfkit::cli {

json to_json(const Matrix& a) {
  json rows = json::array();
  for (int r = 0; r < a.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < a.cols(); ++c) row.push_back(static_cast<int>(a.at(r, c)));
    rows.push_back(std::move(row));
  }
  return {{"N", a.rows()}, {"n", a.cols()}, {"m", a.alphabet()}, {"rows", std::move(rows)}};
}

json to_json(const Family& f) {
  json parts = json::array();
  for (const auto& p : f.parts) parts.push_back(p);
  return parts;
}

json to_json(const Verdict& v) {
  json j;
  j["result"] = v.is_shf ? "shf" : "not_shf";
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  j["families_checked"] = v.families_checked;
  j["rows_probed"] = v.rows_probed;
  return j;
}

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

namespace {

const char* kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::LowerOnRows:
      return "lower";
    case BoundKind::UpperStrict:
      return "upper_strict";
    case BoundKind::UpperInclusive:
      break;
  }
  return "upper_inclusive";
}

}  // namespace

json to_json(const BoundReport& b) {
  json j;
  j["source"] = b.source;
  j["kind"] = kind_name(b.kind);
  j["applicable"] = b.applicable;
  if (b.applicable) {
    j["value"] = to_json(b.value);
  } else {
    j["reason"] = b.reason;
  }
  return j;
}

json to_json(const ColumnBound& b) {
  json rules = json::array();
  for (const auto& r : b.rules) rules.push_back(to_json(r));
  return {{"max_n", to_json(b.max_n)}, {"sources", b.sources}, {"rules", std::move(rules)}};
}

json to_json(const SearchStats& s) {
  return {{"nodes_expanded", s.nodes_expanded},
          {"candidates", s.candidates},
          {"separation_rejections", s.separation_rejections},
          {"canonical_rejections", s.canonical_rejections},
          {"heuristic_rejections", s.heuristic_rejections},
          {"max_depth", s.max_depth},
          {"accepted_per_depth", s.accepted_per_depth},
          {"wall_seconds", s.wall_seconds}};
}

json to_json(const SearchOutcome& o) {
  json j;
  j["result"] = to_string(o.result);
  j["mode"] = to_string(o.mode);
  j["matrix"] = o.matrix ? to_json(*o.matrix) : json(nullptr);
  if (!o.note.empty()) j["note"] = o.note;
  j["stats"] = to_json(o.stats);
  return j;
}

json to_json(const ForbiddenMatch& m) {
  return {{"id", to_string(m.id)}, {"rows", m.rows}, {"cols", m.cols}};
}

json report(const std::string& command, json params) {
  json j;
  j["schema"] = kSchema;
  j["command"] = command;
  j["params"] = std::move(params);
  return j;
}

}  // namespace shfkit::cli
