// SPDX-License-Identifier: Apache-2.0

#ifndef SMAXDG_CLI_HPP
#define SMAXDG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace smaxdg::cli
{

// Exit codes of Run.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

// args excludes the program name: args[0] is the command. Results go to CSV files in the
// output directory; a one-line summary is written to out and diagnostics to err.
int Run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int Run(int argc, char **argv);

}  // namespace smaxdg::cli

#endif  // SMAXDG_CLI_HPP
