#pragma once

#include <string>

#include "shfkit/io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) { return std::string(SHFKIT_FIXTURE_DIR) + "/" + name; }

inline shfkit::Matrix fano_strong() { return shfkit::read_matrix_file(path("fano_strong.mat")); }
inline shfkit::Matrix optimal_4x10() { return shfkit::read_matrix_file(path("optimal_4x10.mat")); }
inline shfkit::Matrix f1() { return shfkit::read_matrix_file(path("f1.mat")); }
inline shfkit::Hypergraph design(const std::string& name) {
  return shfkit::read_hypergraph_file(path(name)).hypergraph;
}

}  // namespace fixtures
