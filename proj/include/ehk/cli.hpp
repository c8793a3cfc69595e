#pragma once

// Placeholder during bring-up; subcommands land with their modules.

namespace ehk {

inline int run_cli(int, char**) { return 2; }

}  // namespace ehk
