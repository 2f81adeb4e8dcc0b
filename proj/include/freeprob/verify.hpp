#ifndef FREEPROB_VERIFY_HPP
#define FREEPROB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

// Property suites run by `freeprob verify`. Each check draws seeded
// fixtures and reports pass/fail with a short detail string.
namespace freeprob
{

struct VerifyOptions
{
    int s = 2;
    int maxdeg = 4;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    int fixtures = 10;
};

struct CheckResult
{
    std::string suite;
    std::string name;
    bool passed = false;
    std::string detail;
};

// nc, group, nonprops, momcum, freeness, hopf, structure, repr, onedim, symm
const std::vector<std::string>& suite_names();

// Throws ValidationError for an unknown suite or out-of-range options.
std::vector<CheckResult> run_suite(std::string_view name, const VerifyOptions& options);
std::vector<CheckResult> run_all(const VerifyOptions& options);

bool all_passed(const std::vector<CheckResult>& results);
// One line per check: "PASS  suite  name  detail".
std::string format_table(const std::vector<CheckResult>& results);

} // namespace freeprob

#endif
