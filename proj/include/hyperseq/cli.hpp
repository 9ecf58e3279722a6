#ifndef HYPERSEQ_CLI_HPP
#define HYPERSEQ_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperseq::cli {

struct CliResult {
    int status = 0;   // 0 success, 1 domain error, 2 usage/parse error
    std::string out;
    std::string err;
};

/// Dispatches one command line (argv without the program name).
/// `batchInput` feeds the `batch` verb; defaults to std::cin.
CliResult run(const std::vector<std::string>& args, std::istream* batchInput = nullptr);

std::string usage();

} // namespace hyperseq::cli

#endif
