#include <iostream>
#include <string>
#include <vector>

#include "g2higgs/cli.hpp"

// One binary, two entry spellings: invoked as `g2` the first argument picks
// the group (eval/commute/... , kummer, local); invoked through the `local`
// symlink the local group is implied, so `local classify ...` works directly.
int main(int argc, char** argv) {
    std::string prog = argv[0];
    auto slash = prog.find_last_of('/');
    if (slash != std::string::npos) prog = prog.substr(slash + 1);

    std::vector<std::string> args;
    if (prog == "local")
        args.push_back("local");
    else if (argc > 1 && std::string(argv[1]) != "local" && std::string(argv[1]) != "g2")
        args.push_back("g2");
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    return g2higgs::cli::run(std::move(args), std::cout, std::cerr);
}
