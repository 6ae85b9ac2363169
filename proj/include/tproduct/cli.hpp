#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tproduct::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kIo = 3,
    kSingular = 4,
    kVerifyFailed = 5,
};

/// Entry point of the `tproduct` command line tool. argv[0] is the program name.
int run(std::span<const std::string> argv, std::ostream& out, std::ostream& err);

}  // namespace tproduct::cli
