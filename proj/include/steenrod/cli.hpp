#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace steenrod {

inline constexpr const char* kConventionVersion = "1.0";

struct JobSpec {
    std::string command;  // homology, cone, strong, les, milnor, verify, generate
    std::vector<std::string> inputs;
    std::optional<int> degree;
    std::optional<std::pair<int, int>> range;  // inclusive
    std::string output;
    std::uint64_t seed = 0;
    std::size_t count = 10;
    std::string suite;
    std::string kind;    // generate
    long p = 0;          // generate: solenoid degree, 0 for a random instance
    std::size_t levels = 3;
    unsigned threads = 1;  // verify; never affects the report
};

struct JobResult {
    int exit_code = 0;    // 0 ok, 1 certificate failure, 2 input error
    std::string report;   // JSON, keys sorted, newline terminated
    std::string summary;  // one line for stderr
};

JobResult run(const JobSpec& spec);

std::string sha256_hex(const std::string& bytes);

// "a:b" or "a..b".
std::pair<int, int> parse_range(const std::string& text);

}  // namespace steenrod
