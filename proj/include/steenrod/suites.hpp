#pragma once

#include "steenrod/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace steenrod {

// Seeded property suites over generated instances. Every instance draws from
// its own generator, seeded from (seed, index), so results do not depend on
// how instances are scheduled.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index);

// One instance: a detail document with a boolean "pass". Exceptions raised
// while checking count as failures and are recorded under "error".
Json run_suite_instance(const std::string& suite, std::uint64_t seed, std::size_t index);

struct SuiteRun {
    std::vector<Json> instances;  // in index order
    std::size_t passed = 0;
    bool ok() const { return passed == instances.size(); }
};

SuiteRun run_suite(const std::string& suite, std::uint64_t seed, std::size_t count, unsigned threads = 1);

}  // namespace steenrod
