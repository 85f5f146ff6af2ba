#include <satpat/cli.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const int code = satpat::cli::run(args, std::cout, std::cerr);
    std::cout.flush();
    std::cerr.flush();
    // A command abandoned by --budget may still be running on a detached
    // thread, so skip static destruction.
    std::quick_exit(code);
}
