#include "hyperseq/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    hyperseq::cli::CliResult r = hyperseq::cli::run(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.status;
}
