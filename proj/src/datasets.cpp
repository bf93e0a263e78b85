#include "cnsparse/datasets.hpp"

#include <cstdlib>

#include "cnsparse/io.hpp"

#ifndef CNSPARSE_DATA_DIR
#define CNSPARSE_DATA_DIR "data"
#endif

namespace cnsparse {

std::string dataset_dir() {
    if (const char* env = std::getenv("CNSPARSE_DATA_DIR"); env && *env) return env;
    return CNSPARSE_DATA_DIR;
}

Graph load_builtin(const std::string& name) {
    if (name != "karate" && name != "dolphins")
        throw DatasetNotFound("no bundled dataset named '" + name + "'");
    return read_edge_list_file(dataset_dir() + "/" + name + ".edges").graph;
}

}  // namespace cnsparse
