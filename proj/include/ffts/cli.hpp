#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace ffts {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

/// flag > FFTS_DIM_CAP > 4096
std::size_t resolve_dim_cap(std::optional<std::size_t> flag, const char* env_value);

/// Entry point of the `ffts` tool, with the streams injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ffts
