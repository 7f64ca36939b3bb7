#ifndef CROSSPLANE_CLI_HPP
#define CROSSPLANE_CLI_HPP

#include <string>
#include <vector>

namespace crossplane {

// Exit codes: 0 success, 1 domain failure, 2 usage error. Machine formats
// are schema-stable; identical inputs give byte-identical outputs.
struct command_outcome {
    int exit_code = 0;
    std::string out; // payload, goes to stdout
    std::string err; // diagnostics, go to stderr
};

// Subcommands: bound, chain, draw, decompose, verify, table.
command_outcome dispatch(const std::vector<std::string>& args);

} // namespace crossplane

#endif
