#pragma once

#include <string>

#include "cnsparse/graph.hpp"

namespace cnsparse {

/// Bundled edge lists: "karate" (34 nodes / 78 edges) and "dolphins"
/// (62 nodes / 159 edges). Files live under the data directory; the
/// CNSPARSE_DATA_DIR environment variable overrides the compiled-in path.
/// Unknown names raise DatasetNotFound.
class DatasetNotFound : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Graph load_builtin(const std::string& name);

/// Directory currently used to resolve bundled datasets.
std::string dataset_dir();

}  // namespace cnsparse
