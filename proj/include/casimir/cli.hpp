#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace casimir {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPhysics = 2;

/// Entry point of the casimir_pendulum tool. args excludes the program name.
int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace casimir
