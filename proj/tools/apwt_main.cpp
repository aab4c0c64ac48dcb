#include <string>
#include <vector>

#include "apwt/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return apwt::run_cli(args);
}
