#include <iostream>
#include <string>
#include <vector>

#include "dring/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    dring::CliOutcome out = dring::run_cli(args);
    std::cout << out.output;
    return out.exit_code;
}
