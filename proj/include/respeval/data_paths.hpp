#pragma once

#include <filesystem>

namespace respeval {

/// Root of the bundled data (lexicons, whitelists, corpora, models).
/// RESPEVAL_DATA_DIR in the environment overrides the build-time location.
std::filesystem::path default_data_dir();

}  // namespace respeval
