#include <iostream>

#include <spdlog/cfg/env.h>
#include <spdlog/spdlog.h>

#include "cli.hpp"

int main(int argc, char** argv) {
    spdlog::set_level(spdlog::level::warn);
    spdlog::cfg::load_env_levels();  // SPDLOG_LEVEL=debug for retry diagnostics
    return respeval::cli::run(argc, argv, std::cout, std::cerr);
}
