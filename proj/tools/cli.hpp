#ifndef FREEPROB_TOOLS_CLI_HPP
#define FREEPROB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace freeprob::cli
{

// Exit statuses of run().
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kValidationError = 3;

struct CommandInfo
{
    std::string group;
    std::string name;
    // Library operations exposed by this subcommand.
    std::vector<std::string> operations;
};

const std::vector<CommandInfo>& commands();

// args excludes the program name. JSON results go to `out` (or to the file
// given by --out); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace freeprob::cli

#endif
