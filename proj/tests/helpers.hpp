// Shared bits for the unit tests: fixture locations and the canonical trace.
#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "copresence/types.hpp"

namespace testutil {

inline std::filesystem::path fixtures_dir() {
    const char* env = std::getenv("COPRESENCE_FIXTURES");
    return env ? std::filesystem::path(env) : std::filesystem::path("data/fixtures");
}

// The canonical normalized trace: A and C meet twice, everyone overlaps in
// the middle, all on one access point.
inline std::vector<copresence::Session> f1_sessions() {
    return {{"A", "w1", 10, 40},
            {"A", "w1", 60, 70},
            {"B", "w1", 10, 50},
            {"C", "w1", 20, 30},
            {"C", "w1", 60, 70}};
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace testutil
