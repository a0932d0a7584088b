#ifndef IMD_CLI_HPP
#define IMD_CLI_HPP

namespace imd {

// Command-line entry point. Subcommands: validate, homology, simplify,
// persist, reduce, check. Exit codes: 0 success, 1 invalid input,
// 2 internal contract violation (oracle mismatch in check).
int run_cli(int argc, char** argv);

}  // namespace imd

#endif
