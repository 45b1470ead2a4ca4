#ifndef QFORMS_CLI_HPP
#define QFORMS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qforms::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// Runs one subcommand: expand, mu, rep or verify. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace qforms::cli

#endif
