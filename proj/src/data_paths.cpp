#include "respeval/data_paths.hpp"

#include <cstdlib>

namespace respeval {

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("RESPEVAL_DATA_DIR"); env != nullptr && *env != '\0') return env;
    return RESPEVAL_DEFAULT_DATA_DIR;
}

}  // namespace respeval
