#pragma once

#include <atomic>
#include <iosfwd>
#include <string>
#include <vector>

namespace reeb::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 2,
    kDegenerateTie = 3,
    kPartialResults = 4,
};

/// Runs one `reeb-toolkit` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::atomic<bool>* cancel = nullptr);

}  // namespace reeb::cli
