#ifndef DERANGE_CLI_HPP
#define DERANGE_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace derange {

// Runs one CLI invocation. args excludes the program name.
// Exit codes: 0 = computed (negative mathematical results included),
// 2 = usage or parse error, 3 = a resource cap was hit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace derange

#endif
