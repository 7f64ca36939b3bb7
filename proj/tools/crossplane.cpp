#include "crossplane/cli.hpp"

#include <cstdio>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    auto res = crossplane::dispatch(args);
    if (!res.out.empty()) std::fputs(res.out.c_str(), stdout);
    if (!res.err.empty()) std::fputs(res.err.c_str(), stderr);
    return res.exit_code;
}
