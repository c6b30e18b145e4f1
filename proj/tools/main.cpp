#include <iostream>

#include "folia/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const folia::CommandReport report = folia::runCommand(args);
    std::cout << report.render();
    return report.exitCode;
}
