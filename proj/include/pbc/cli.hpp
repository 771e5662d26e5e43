#pragma once

// Command-line dispatch. Exit codes: 0 success, 1 verified failure, 2 budget
// exhausted, 3 malformed input.

#include <cstdint>
#include <iosfwd>

namespace pbc {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitMalformed = 3;

constexpr int kSchemaVersion = 1;
constexpr std::uint64_t kDefaultSeed = 20240611;

const char* version_string();

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pbc
