#pragma once

#include <json.hpp>

#include "shfkit/bounds.hpp"
#include "shfkit/search.hpp"
#include "shfkit/symmetry.hpp"
#include "shfkit/verify.hpp"

namespace shfkit::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "shfkit-report/1";

json to_json(const Matrix& a);
json to_json(const Family& f);
json to_json(const Verdict& v);
json to_json(const BigInt& v);
json to_json(const BoundReport& b);
json to_json(const ColumnBound& b);
json to_json(const SearchStats& s);
json to_json(const SearchOutcome& o);
json to_json(const ForbiddenMatch& m);

/// Report skeleton: schema version, command name and invocation parameters.
json report(const std::string& command, json params);

}  // namespace shfkit::cli
