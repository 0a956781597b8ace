#ifndef RBLOCK_CLI_HPP
#define RBLOCK_CLI_HPP

#include <iosfwd>

namespace rblock {

// Full command-line front end.  Returns the process exit status:
// 0 success, 1 verification failure, 2 invalid input / size-limit refusal.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

} // namespace rblock

#endif
